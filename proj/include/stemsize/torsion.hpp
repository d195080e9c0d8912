// SPDX-License-Identifier: Apache-2.0
//
// Torsion-exponent bounds: the Adams-Novikov E2 exponent, the stable bound
// through the E-infinity vanishing curve g(n), the image-of-J lower bound,
// the integral assembly over primes, and the unstable bounds of Barratt,
// the Goodwillie tower and the norm order.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "stemsize/algebra.hpp"
#include "stemsize/arith.hpp"
#include "stemsize/error.hpp"
#include "stemsize/presets.hpp"
#include "stemsize/series_io.hpp"

namespace stemsize {

/// g(n) = n.
struct LinearCurve {};

/// g(n) = ceil(coefficient * n^exponent).
struct PowerLawCurve {
  double exponent = 0.5;
  double coefficient = 1.0;
};

/// g(n) = values[n - 1].
struct TableCurve {
  std::vector<std::int64_t> values;
};

/// Model of the E-infinity vanishing curve g(n). Every value must satisfy
/// 1 <= g(n) <= n.
class VanishingCurve {
 public:
  using Model = std::variant<LinearCurve, PowerLawCurve, TableCurve>;

  static VanishingCurve linear() { return VanishingCurve(LinearCurve{}); }
  static VanishingCurve power_law(double exponent, double coefficient) {
    if (!(exponent > 0.0 && exponent <= 1.0) || !(coefficient > 0.0)) {
      throw validation_error("power-law curve needs exponent in (0,1] and a "
                             "positive coefficient");
    }
    return VanishingCurve(PowerLawCurve{exponent, coefficient});
  }
  static VanishingCurve sqrt() { return power_law(0.5, 1.0); }
  static VanishingCurve table(std::vector<std::int64_t> values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] < values[i - 1]) {
        throw validation_error("table curve must be nondecreasing (n = " +
                               std::to_string(i + 1) + ")");
      }
    }
    return VanishingCurve(TableCurve{std::move(values)});
  }
  /// One integer per line, line k holding g(k).
  static VanishingCurve read_table(std::istream& in) {
    std::vector<std::int64_t> values;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(line, &used));
      } catch (const std::exception&) {
        throw validation_error("table curve: bad line '" + line + "'");
      }
    }
    return table(std::move(values));
  }

  std::int64_t operator()(std::int64_t n) const {
    if (n < 1) throw validation_error("vanishing curve queried at n < 1");
    std::int64_t g = 0;
    if (std::holds_alternative<LinearCurve>(model_)) {
      g = n;
    } else if (const auto* pl = std::get_if<PowerLawCurve>(&model_)) {
      const double x = pl->coefficient * std::pow(static_cast<double>(n), pl->exponent);
      const double r = std::round(x);
      // Snap values that are integers up to rounding noise (perfect squares).
      g = static_cast<std::int64_t>(std::abs(x - r) <= 1e-9 * std::max(1.0, x)
                                        ? r
                                        : std::ceil(x));
    } else {
      const auto& t = std::get<TableCurve>(model_).values;
      if (static_cast<std::size_t>(n) > t.size()) {
        throw validation_error("table curve has no value for n = " +
                               std::to_string(n));
      }
      g = t[static_cast<std::size_t>(n - 1)];
    }
    if (g < 1 || g > n) {
      throw validation_error("vanishing curve value g(" + std::to_string(n) +
                             ") = " + std::to_string(g) + " violates 1 <= g(n) <= n");
    }
    return g;
  }

  std::string describe() const {
    if (std::holds_alternative<LinearCurve>(model_)) return "linear";
    if (const auto* pl = std::get_if<PowerLawCurve>(&model_)) {
      return "power_law(exponent=" + format_double(pl->exponent) +
             ",coefficient=" + format_double(pl->coefficient) + ")";
    }
    return "table(" + std::to_string(std::get<TableCurve>(model_).values.size()) +
           " values)";
  }

 private:
  explicit VanishingCurve(Model m) : model_(std::move(m)) {}
  Model model_;
};

/// Upper bound on the Adams-Novikov E2 torsion exponent in stem 2u - s.
/// nullopt for u = 0, where E2 contains the non-torsion unit.
inline std::optional<int> an_e2_exponent(std::int64_t p, std::int64_t u) {
  require_prime(p);
  if (u == 0) return std::nullopt;
  if (p == 2) return u % 2 != 0 ? 1 : 2 + val_p(2, u);
  if (u % (p - 1) != 0) return 0;
  return 1 + val_p(p, u);
}

struct CountingLemma {
  std::int64_t exact = 0;  // sum_{i=a+1}^{b} (1 + |i|_p)
  double bound = 0.0;      // p/(p-1) (b-a) + log_p(b)
};

inline CountingLemma counting_lemma(std::int64_t p, std::int64_t a, std::int64_t b) {
  require_prime(p);
  if (a < 0 || b <= a) throw validation_error("counting_lemma needs 0 <= a < b");
  CountingLemma out;
  for (std::int64_t i = a + 1; i <= b; ++i) out.exact += 1 + val_p(p, i);
  const double pd = static_cast<double>(p);
  out.bound = pd / (pd - 1.0) * static_cast<double>(b - a) +
              log_base(p, static_cast<double>(b));
  return out;
}

struct TorsionReport {
  std::int64_t p = 2;
  std::int64_t n = 1;
  std::int64_t g = 1;
  std::int64_t exact_sum = 0;
  double closed_form = 0.0;
  std::string curve;
};

/// Bound on tors_p(pi_n S) through the vanishing curve: the exact sum of E2
/// exponents over the window of stems that can survive, and its closed form.
inline TorsionReport stable_torsion_bound(std::int64_t p, std::int64_t n,
                                          const VanishingCurve& curve) {
  require_prime(p);
  if (n < 1) throw validation_error("stable_torsion_bound needs n >= 1");
  TorsionReport r;
  r.p = p;
  r.n = n;
  r.g = curve(n);
  r.curve = curve.describe();
  const double nd = static_cast<double>(n);
  const double gd = static_cast<double>(r.g);
  if (p == 2) {
    for (std::int64_t i = n / 2 + 1; i <= (n + r.g) / 2; ++i) {
      r.exact_sum += 1 + val_p(2, i) + (i % 2 == 0 ? 1 : 0);
    }
    r.closed_form = 1.25 * gd + log_base(2, nd) + 2.0;
  } else {
    const std::int64_t w = 2 * p - 2;
    for (std::int64_t i = n / w + 1; i <= (n + r.g) / w; ++i) {
      r.exact_sum += 1 + val_p(p, i);
    }
    const double pd = static_cast<double>(p);
    r.closed_form = pd / (2.0 * (pd - 1.0) * (pd - 1.0)) * gd + log_base(p, nd) + 1.0;
  }
  return r;
}

inline nlohmann::json to_json(const TorsionReport& r) {
  return {{"p", r.p},
          {"n", r.n},
          {"g", r.g},
          {"exact_sum", r.exact_sum},
          {"closed_form", r.closed_form},
          {"curve", r.curve}};
}

/// Image-of-J lower bound on tors_p(pi_n S) at an odd prime.
inline int im_j_lower(std::int64_t p, std::int64_t n) {
  require_prime(p);
  if (p == 2) {
    throw validation_error("im_j_lower: the 2-primary image of J is not of this "
                           "form; only odd primes are supported");
  }
  if (n < 1) throw validation_error("im_j_lower needs n >= 1");
  if ((n + 1) % (2 * p - 2) != 0) return 0;
  return val_p(p, n + 1) + 1;
}

/// Upper bound for rank_p(pi_n S): rank_model(p, n).
using RankModel = std::function<bigint(std::int64_t p, std::int64_t n)>;

/// Cumulative rank of the May E1-page (q_0 dropped) through degree n.
inline bigint may_e1_rank(std::int64_t p, std::int64_t n) {
  return hilbert_cumulative(preset(PresetId{PresetName::may_e1, p, std::nullopt, true}),
                            n)[static_cast<std::size_t>(n)];
}

/// sum over primes p <= n of ln(p) * n * rank_model(p, n), an upper bound for
/// ln |pi_n S| under the model.
inline double integral_log_bound(std::int64_t n, const RankModel& rank_model = may_e1_rank) {
  if (n < 1) throw validation_error("integral_log_bound needs n >= 1");
  double total = 0.0;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    total += std::log(static_cast<double>(p)) * static_cast<double>(n) *
             rank_model(p, n).get_d();
  }
  return total;
}

/// Barratt: p^{mk} kills pi_n(Sigma X) for n <= 2^k s; if X is a suspension,
/// p^{m+k} kills it for n <= p^{k+1} s. Returns the exponent for the least k.
inline std::int64_t barratt_bound(std::int64_t s, std::int64_t m, std::int64_t n,
                                  std::int64_t p, bool double_suspension) {
  if (s < 1 || m < 1 || n < 1) {
    throw validation_error("barratt_bound needs s, m, n >= 1");
  }
  require_prime(p);
  std::int64_t k = 0;
  if (!double_suspension) {
    for (std::int64_t reach = s; n > reach; reach *= 2) ++k;
    return m * k;
  }
  for (std::int64_t reach = p * s; n > reach; reach *= p) ++k;
  return m + k;
}

struct GoodwillieBound {
  std::int64_t exact = 0;  // sum over k >= 1 with sk < n of (m + v_p(k))
  double linear = 0.0;     // (m + 1) n / s
};

inline GoodwillieBound goodwillie_bound(std::int64_t s, std::int64_t m,
                                        std::int64_t n, std::int64_t p) {
  if (s < 1) throw validation_error("goodwillie_bound needs s >= 1");
  if (m < 0 || n < 0) throw validation_error("goodwillie_bound needs m, n >= 0");
  require_prime(p);
  GoodwillieBound out;
  for (std::int64_t k = 1; s * k < n; ++k) out.exact += m + val_p(p, k);
  out.linear = static_cast<double>(m + 1) * static_cast<double>(n) /
               static_cast<double>(s);
  return out;
}

/// Exponent of the torsion order of f^{(x)n} when f is p^m-torsion.
inline std::int64_t norm_torsion_order(std::int64_t p, std::int64_t m, std::int64_t n) {
  require_prime(p);
  if (n < 1) throw validation_error("norm_torsion_order needs n >= 1");
  return m + val_p(p, n);
}

}  // namespace stemsize
