// SPDX-License-Identifier: Apache-2.0
//
// Growth constants, ratio profiles of log cumulative rank against ln(n)^k,
// and the exact integer brackets behind the log-cubed growth lemmas.

#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "stemsize/algebra.hpp"
#include "stemsize/arith.hpp"
#include "stemsize/error.hpp"
#include "stemsize/presets.hpp"
#include "stemsize/series.hpp"
#include "stemsize/series_io.hpp"

namespace stemsize {

struct Constants {
  double k1 = 0.0;  // 2 / (75 ln(p)^2)
  double k2 = 0.0;  // (9 + 4 sqrt 2) / (294 ln(p)^2)
  double k3 = 0.0;  // 1 / (6 ln(p)^2)
};

inline Constants constants(std::int64_t p) {
  require_prime(p);
  const double l2 = std::pow(std::log(static_cast<double>(p)), 2);
  return {2.0 / (75.0 * l2), (9.0 + 4.0 * std::sqrt(2.0)) / (294.0 * l2),
          1.0 / (6.0 * l2)};
}

struct RatioRow {
  std::int64_t n = 0;
  double log_rank = 0.0;
  double log_n_pow_k = 0.0;
  double ratio = 0.0;
};

struct RatioProfile {
  int exponent = 3;
  std::vector<RatioRow> rows;
};

/// ln(cumrank(n)) / ln(n)^k at each requested degree.
inline RatioProfile ratio_profile(const AlgebraSpec& spec, int exponent,
                                  std::span<const std::int64_t> points) {
  if (exponent != 2 && exponent != 3) {
    throw validation_error("ratio_profile exponent must be 2 or 3");
  }
  if (points.empty()) throw validation_error("ratio_profile needs points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 2) throw validation_error("ratio_profile points must be >= 2");
    if (i > 0 && points[i] <= points[i - 1]) {
      throw validation_error("ratio_profile points must be strictly ascending");
    }
  }
  const auto cum = hilbert_cumulative(spec, points.back());
  RatioProfile out;
  out.exponent = exponent;
  for (const auto n : points) {
    RatioRow row;
    row.n = n;
    row.log_rank = coeff_log(cum, static_cast<std::size_t>(n));
    row.log_n_pow_k = std::pow(std::log(static_cast<double>(n)), exponent);
    row.ratio = row.log_rank / row.log_n_pow_k;
    out.rows.push_back(row);
  }
  return out;
}

inline void write_csv(std::ostream& os, const RatioProfile& prof) {
  os << "n,log_rank,log_n_pow_k,ratio\n";
  for (const auto& r : prof.rows) {
    os << r.n << ',' << format_double(r.log_rank) << ','
       << format_double(r.log_n_pow_k) << ',' << format_double(r.ratio) << '\n';
  }
}

inline nlohmann::json to_json(const RatioProfile& prof) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : prof.rows) {
    rows.push_back({{"n", r.n},
                    {"log_rank", r.log_rank},
                    {"log_n_pow_k", r.log_n_pow_k},
                    {"ratio", r.ratio}});
  }
  return {{"exponent", prof.exponent}, {"rows", std::move(rows)}};
}

enum class BracketModel { may_model, r_h_e2, r_h_einf };

struct BracketOptions {
  bool upper = true;
  bool lower = true;
  /// Largest truncation any single check may use.
  std::int64_t max_truncation = std::int64_t{1} << 21;
};

struct BracketLine {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool ok = false;
  bool skipped = false;
};

struct BracketResult {
  bool ok = true;
  std::vector<BracketLine> details;

  void add(std::string name, const bigint& lhs, const bigint& rhs) {
    const bool pass = lhs <= rhs;
    ok = ok && pass;
    details.push_back({std::move(name), lhs.get_str(), rhs.get_str(), pass, false});
  }
  void add(std::string name, double lhs, double rhs) {
    const bool pass = lhs <= rhs;
    ok = ok && pass;
    details.push_back(
        {std::move(name), format_double(lhs), format_double(rhs), pass, false});
  }
  void skip(std::string name, std::string why) {
    details.push_back({std::move(name), std::move(why), "", true, true});
  }
};

namespace detail {

inline std::int64_t checked_pow(std::int64_t p, std::int64_t m) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    if (r > (std::int64_t{1} << 60) / p) throw resource_error("p^m overflows");
    r *= p;
  }
  return r;
}

inline void guard(std::int64_t trunc, const BracketOptions& opt, const char* what) {
  if (trunc > opt.max_truncation) {
    throw resource_error(std::string(what) + ": truncation " + std::to_string(trunc) +
                         " exceeds the ceiling " + std::to_string(opt.max_truncation));
  }
}

// R = k[n generators in degree p^n]:
//   cumrank(R, p^m - 1)            <= p^{C(m+1,3)}
//   cumrank(R, C(m,2) (p^m - 1))   >= p^{C(m+1,3)}
inline void bracket_may_model(std::int64_t p, std::int64_t m, const BracketOptions& opt,
                              BracketResult& res) {
  const AlgebraSpec spec = preset(PresetId{PresetName::may_model, p});
  bigint target;
  mpz_pow_ui(target.get_mpz_t(), bigint(static_cast<long>(p)).get_mpz_t(),
             static_cast<unsigned long>(m * (m + 1) * (m - 1) / 6));
  const std::int64_t top = checked_pow(p, m) - 1;
  const std::int64_t low = m * (m - 1) / 2 * top;
  if (opt.upper) {
    guard(top, opt, "may_model upper");
    const auto cum = hilbert_cumulative(spec, top);
    res.add("may_model upper: cumrank(p^m-1) <= p^C(m+1,3)",
            cum[static_cast<std::size_t>(top)], target);
  }
  if (opt.lower) {
    if (low > opt.max_truncation) {
      if (!opt.upper) guard(low, opt, "may_model lower");
      res.skip("may_model lower", "truncation " + std::to_string(low) +
                                      " above ceiling " +
                                      std::to_string(opt.max_truncation));
      return;
    }
    const auto cum = hilbert_cumulative(spec, low);
    res.add("may_model lower: p^C(m+1,3) <= cumrank(C(m,2)(p^m-1))", target,
            cum[static_cast<std::size_t>(low)]);
  }
}

// R^h = S^h (x) ... (x) S^{2h-1}; for every h with 2h-1 <= m the tensor
// containments at budget p^m hold, and the preset agrees with the product.
inline void bracket_r_h_e2(std::int64_t p, std::int64_t m, const BracketOptions& opt,
                           BracketResult& res) {
  const std::int64_t top = checked_pow(p, m);
  for (std::int64_t h = 1; 2 * h - 1 <= m; ++h) {
    guard(h * top, opt, "r_h_e2 tensor bracket");
    std::vector<AlgebraSpec> pieces;
    for (std::int64_t k = h; k <= 2 * h - 1; ++k) {
      pieces.push_back(preset(PresetId{PresetName::s_k, p, k}));
    }
    AlgebraSpec whole = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i) whole = tensor(whole, pieces[i]);
    const bool same = hilbert(whole, top) ==
                      hilbert(preset(PresetId{PresetName::r_h_e2, p, h}), top);
    res.ok = res.ok && same;
    res.details.push_back({"r_h_e2 h=" + std::to_string(h) +
                               ": R^h equals S^h (x) ... (x) S^{2h-1}",
                           same ? "equal" : "differ", "", same, false});
    const std::vector<std::int64_t> budgets(pieces.size(), top);
    const auto b = tensor_bracket(pieces, budgets);
    res.add("r_h_e2 h=" + std::to_string(h) + ": prod cumrank(S^i, p^m) <= cumrank(R^h, h p^m)",
            b.lower, b.lower_target);
    res.add("r_h_e2 h=" + std::to_string(h) + ": cumrank(R^h, p^m) <= prod cumrank(S^i, p^m)",
            b.middle, b.upper);
  }
}

// ln max_h cumrank(R^h, p^m - 1) <= (2 ln p / 75) m^3 + (ln p) m^2, plus the
// per-h tensor upper bound prod_i rank(k[x_{p^{h+i}}]_{<= p^m - 1})^i.
inline void bracket_r_h_einf(std::int64_t p, std::int64_t m, const BracketOptions& opt,
                             BracketResult& res) {
  const std::int64_t top = checked_pow(p, m) - 1;
  guard(top, opt, "r_h_einf");
  const auto mx = max_over_h(PresetName::r_h_einf, p, top);
  const double lp = std::log(static_cast<double>(p));
  const double md = static_cast<double>(m);
  res.add("r_h_einf final: ln max_h cumrank(p^m-1) <= 2 ln(p)/75 m^3 + ln(p) m^2",
          coeff_log(mx.series, static_cast<std::size_t>(top)),
          2.0 * lp / 75.0 * md * md * md + lp * md * md);
  for (std::int64_t h = 2; h <= max_h_for(p, top); ++h) {
    const auto cum = hilbert_cumulative(preset(PresetId{PresetName::r_h_einf, p, h}), top);
    bigint bound = 1;
    for (std::int64_t i = 1; i <= h - 1; ++i) {
      bigint deg = 1;
      for (std::int64_t e = 0; e < h + i; ++e) deg *= static_cast<long>(p);
      bigint factor = bigint(static_cast<long>(top)) / deg + 1;
      bigint fpow;
      mpz_pow_ui(fpow.get_mpz_t(), factor.get_mpz_t(), static_cast<unsigned long>(i));
      bound *= fpow;
    }
    res.add("r_h_einf h=" + std::to_string(h) + ": cumrank(p^m-1) <= tensor bound",
            cum[static_cast<std::size_t>(top)], bound);
  }
}

}  // namespace detail

inline BracketResult bracketing_check(std::int64_t p, std::int64_t m, BracketModel model,
                                      const BracketOptions& opt = {}) {
  require_prime(p);
  if (m < 1) throw validation_error("bracketing_check needs m >= 1");
  BracketResult res;
  switch (model) {
    case BracketModel::may_model: detail::bracket_may_model(p, m, opt, res); break;
    case BracketModel::r_h_e2: detail::bracket_r_h_e2(p, m, opt, res); break;
    case BracketModel::r_h_einf: detail::bracket_r_h_einf(p, m, opt, res); break;
  }
  return res;
}

}  // namespace stemsize
