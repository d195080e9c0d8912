// SPDX-License-Identifier: Apache-2.0
//
// Small integer helpers: primality, p-adic valuation, exact-at-powers logs.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "stemsize/error.hpp"

namespace stemsize {

inline bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

inline void require_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw validation_error("p = " + std::to_string(p) + " is not prime");
  }
}

/// Largest k with p^k | m. The sign of m is ignored.
inline int val_p(std::int64_t p, std::int64_t m) {
  if (p < 2) throw validation_error("val_p: base must be at least 2");
  if (m == 0) throw validation_error("val_p: valuation of 0 is undefined");
  if (m < 0) m = -m;
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

/// log_base(b, x) for x >= 1. The integer part is found exactly, so the
/// result is exact whenever x is a power of b.
inline double log_base(std::int64_t b, double x) {
  if (x < 1.0) return std::log(x) / std::log(static_cast<double>(b));
  int k = 0;
  double pw = 1.0;
  while (pw * static_cast<double>(b) <= x) {
    pw *= static_cast<double>(b);
    ++k;
  }
  if (pw == x) return k;
  return k + std::log(x / pw) / std::log(static_cast<double>(b));
}

/// Floor of log_b(n) for n >= 1, exact.
inline int ilog(std::int64_t b, std::int64_t n) {
  int k = 0;
  while (n >= b) {
    n /= b;
    ++k;
  }
  return k;
}

/// b^e in 64 bits for b >= 1, e >= 0; throws resource_error past 2^62.
inline std::int64_t ipow(std::int64_t b, std::int64_t e) {
  if (b < 1 || e < 0) throw validation_error("ipow needs b >= 1 and e >= 0");
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > (std::int64_t{1} << 62) / b) throw resource_error("ipow overflows");
    r *= b;
  }
  return r;
}

}  // namespace stemsize
