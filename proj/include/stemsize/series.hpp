// SPDX-License-Identifier: Apache-2.0
//
// Truncated power series with arbitrary-precision nonnegative integer
// coefficients. Every rank or Hilbert series in the library is one of these.
//
// Values are immutable: operations return new series. Binary operations work
// on the common truncation min(a.trunc(), b.trunc()).

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stemsize/error.hpp"

namespace stemsize {

using bigint = mpz_class;

enum class Species { polynomial, exterior, truncated };

/// How a single generator contributes to a Hilbert series: k[x] gives
/// 1/(1-t^d), an exterior class gives 1+t^d, k[x]/(x^k) gives
/// 1+t^d+...+t^{d(k-1)}.
class GeneratorKind {
 public:
  static GeneratorKind polynomial() noexcept { return {Species::polynomial, 0}; }
  static GeneratorKind exterior() noexcept { return {Species::exterior, 2}; }
  static GeneratorKind truncated(int order) {
    if (order < 2) {
      throw validation_error("truncation order must be at least 2, got " +
                             std::to_string(order));
    }
    return {Species::truncated, order};
  }

  Species species() const noexcept { return species_; }

  /// Nilpotence order (x^order = 0); 0 for polynomial generators.
  int order() const noexcept { return order_; }

  /// Largest usable exponent of a generator of degree d through degree n.
  std::int64_t max_exponent(std::int64_t d, std::int64_t n) const noexcept {
    const std::int64_t by_degree = n / d;
    if (species_ == Species::polynomial) return by_degree;
    return std::min<std::int64_t>(by_degree, order_ - 1);
  }

  std::string to_string() const {
    switch (species_) {
      case Species::polynomial: return "poly";
      case Species::exterior: return "ext";
      case Species::truncated: return "trunc(" + std::to_string(order_) + ")";
    }
    return {};
  }

  friend bool operator==(const GeneratorKind&, const GeneratorKind&) = default;

 private:
  GeneratorKind(Species s, int order) noexcept : species_(s), order_(order) {}

  Species species_;
  int order_;
};

class TruncatedSeries {
 public:
  /// Takes coefficients c_0..c_N; trunc() becomes N. Rejects an empty list
  /// and negative coefficients.
  explicit TruncatedSeries(std::vector<bigint> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) {
      throw validation_error("a truncated series needs at least c_0");
    }
    for (std::size_t n = 0; n < c_.size(); ++n) {
      if (sgn(c_[n]) < 0) {
        throw validation_error("negative coefficient at degree " +
                               std::to_string(n));
      }
    }
  }

  TruncatedSeries(std::initializer_list<long> coeffs)
      : TruncatedSeries(std::vector<bigint>(coeffs.begin(), coeffs.end())) {}

  static TruncatedSeries zero(std::size_t trunc) {
    return TruncatedSeries(std::vector<bigint>(trunc + 1, 0));
  }
  static TruncatedSeries unit(std::size_t trunc) { return monomial(trunc, 0); }
  static TruncatedSeries ones(std::size_t trunc) {
    return TruncatedSeries(std::vector<bigint>(trunc + 1, 1));
  }
  static TruncatedSeries monomial(std::size_t trunc, std::size_t degree) {
    std::vector<bigint> c(trunc + 1, 0);
    if (degree <= trunc) c[degree] = 1;
    return TruncatedSeries(std::move(c));
  }

  std::size_t trunc() const noexcept { return c_.size() - 1; }
  const bigint& operator[](std::size_t n) const { return c_.at(n); }
  std::span<const bigint> coeffs() const noexcept { return c_; }

  /// Drops every coefficient above degree n (n <= trunc()).
  TruncatedSeries truncated(std::size_t n) const {
    if (n > trunc()) {
      throw validation_error("cannot extend a series from truncation " +
                             std::to_string(trunc()) + " to " +
                             std::to_string(n));
    }
    return TruncatedSeries(std::vector<bigint>(c_.begin(), c_.begin() + n + 1));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

 private:
  std::vector<bigint> c_;
};

namespace detail {

inline std::size_t common_trunc(const TruncatedSeries& a,
                                const TruncatedSeries& b) noexcept {
  return std::min(a.trunc(), b.trunc());
}

/// Multiplies the coefficient buffer c by one generator factor in place,
/// O(c.size()) additions for every kind.
inline void apply_factor(std::vector<bigint>& c, const GeneratorKind& kind,
                         std::int64_t d) {
  if (d <= 0) {
    throw validation_error("generator degree must be positive, got " +
                           std::to_string(d));
  }
  const std::size_t n = c.size();
  const auto step = static_cast<std::size_t>(d);
  if (step >= n) return;
  switch (kind.species()) {
    case Species::polynomial:
      // Stride-d prefix sums: c'_i = c_i + c'_{i-d}.
      for (std::size_t i = step; i < n; ++i) c[i] += c[i - step];
      break;
    case Species::exterior:
      for (std::size_t i = n; i-- > step;) c[i] += c[i - step];
      break;
    case Species::truncated: {
      // Window of k terms: c'_i = c_i + c'_{i-d} - c_{i-kd}.
      const std::vector<bigint> orig = c;
      const auto span = static_cast<std::size_t>(kind.order()) * step;
      for (std::size_t i = step; i < n; ++i) {
        c[i] += c[i - step];
        if (i >= span) c[i] -= orig[i - span];
      }
      break;
    }
  }
}

}  // namespace detail

/// Cauchy product on the common truncation.
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t trunc = detail::common_trunc(a, b);
  std::vector<bigint> c(trunc + 1, 0);
  for (std::size_t i = 0; i <= trunc; ++i) {
    const bigint& ai = a[i];
    if (sgn(ai) == 0) continue;
    for (std::size_t j = 0; i + j <= trunc; ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), ai.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return TruncatedSeries(std::move(c));
}

/// a times the Hilbert factor of one generator of degree d.
inline TruncatedSeries mul_factor(const TruncatedSeries& a,
                                  const GeneratorKind& kind, std::int64_t d) {
  std::vector<bigint> c(a.coeffs().begin(), a.coeffs().end());
  detail::apply_factor(c, kind, d);
  return TruncatedSeries(std::move(c));
}

/// Running sums: c'_n = sum_{k <= n} c_k.
inline TruncatedSeries cumulative(const TruncatedSeries& a) {
  return mul_factor(a, GeneratorKind::polynomial(), 1);
}

/// Multiplication by t^k, keeping the truncation.
inline TruncatedSeries shift(const TruncatedSeries& a, std::size_t k) {
  std::vector<bigint> c(a.trunc() + 1, 0);
  for (std::size_t n = k; n <= a.trunc(); ++n) c[n] = a[n - k];
  return TruncatedSeries(std::move(c));
}

/// Coefficientwise product.
inline TruncatedSeries hadamard(const TruncatedSeries& a,
                                const TruncatedSeries& b) {
  const std::size_t trunc = detail::common_trunc(a, b);
  std::vector<bigint> c(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) c[n] = a[n] * b[n];
  return TruncatedSeries(std::move(c));
}

/// Coefficientwise sum.
inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t trunc = detail::common_trunc(a, b);
  std::vector<bigint> c(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) c[n] = a[n] + b[n];
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries scale(const TruncatedSeries& a, unsigned long k) {
  std::vector<bigint> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= k;
  return TruncatedSeries(std::move(c));
}

/// Coefficientwise maximum.
inline TruncatedSeries pointwise_max(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
  const std::size_t trunc = detail::common_trunc(a, b);
  std::vector<bigint> c(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) c[n] = a[n] < b[n] ? b[n] : a[n];
  return TruncatedSeries(std::move(c));
}

/// a_n <= b_n for every n through the common truncation.
inline bool leq(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t trunc = detail::common_trunc(a, b);
  for (std::size_t n = 0; n <= trunc; ++n) {
    if (a[n] > b[n]) return false;
  }
  return true;
}

/// ln of a big integer x >= 1, from its top 53 bits and bit length.
inline double log_of(const bigint& x) {
  if (sgn(x) <= 0) throw validation_error("log of a non-positive integer");
  if (x == 1) return 0.0;
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp) * std::log(2.0);
}

/// ln(a_n); a_n must be nonzero.
inline double coeff_log(const TruncatedSeries& a, std::size_t n) {
  if (n > a.trunc()) {
    throw validation_error("degree " + std::to_string(n) +
                           " is beyond the truncation " +
                           std::to_string(a.trunc()));
  }
  if (sgn(a[n]) == 0) {
    throw validation_error("log of zero coefficient at degree " +
                           std::to_string(n));
  }
  return log_of(a[n]);
}

}  // namespace stemsize
