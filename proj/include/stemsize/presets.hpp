// SPDX-License-Identifier: Apache-2.0
//
// Catalog of the named algebras: May E1-pages, dual Steenrod algebras, the
// partition-counting models R^h and S^k, and the localized / lifted models for
// y(h). Each preset is emitted as DSL text and parsed, so every preset is
// also available as a spec file via print_spec().
//
// Degrees are topological (t - s) throughout.

#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stemsize/algebra.hpp"
#include "stemsize/arith.hpp"
#include "stemsize/dsl.hpp"
#include "stemsize/error.hpp"
#include "stemsize/series.hpp"

namespace stemsize {

enum class PresetName {
  may_e1,
  may_model,
  dual_steenrod,
  s_k,
  r_h_e2,
  r_h_einf,
  y_h_lifted,
  mrs_e2_model,
  yn_conj,
  q_poly,
};

inline constexpr PresetName kAllPresets[] = {
    PresetName::may_e1,     PresetName::may_model,    PresetName::dual_steenrod,
    PresetName::s_k,        PresetName::r_h_e2,       PresetName::r_h_einf,
    PresetName::y_h_lifted, PresetName::mrs_e2_model, PresetName::yn_conj,
    PresetName::q_poly};

inline std::string_view to_string(PresetName n) {
  switch (n) {
    case PresetName::may_e1: return "may_e1";
    case PresetName::may_model: return "may_model";
    case PresetName::dual_steenrod: return "dual_steenrod";
    case PresetName::s_k: return "s_k";
    case PresetName::r_h_e2: return "r_h_e2";
    case PresetName::r_h_einf: return "r_h_einf";
    case PresetName::y_h_lifted: return "y_h_lifted";
    case PresetName::mrs_e2_model: return "mrs_e2_model";
    case PresetName::yn_conj: return "yn_conj";
    case PresetName::q_poly: return "q_poly";
  }
  return "?";
}

inline PresetName preset_from_string(std::string_view s) {
  for (auto n : kAllPresets) {
    if (to_string(n) == s) return n;
  }
  throw validation_error("unknown preset '" + std::string(s) + "'");
}

/// A preset plus its parameters. `h` doubles as k for s_k.
struct PresetId {
  PresetName name = PresetName::dual_steenrod;
  std::int64_t p = 2;
  std::optional<std::int64_t> h = std::nullopt;
  bool drop_q0 = false;
  bool simplify_odd = false;
};

inline bool preset_needs_h(PresetName n) {
  switch (n) {
    case PresetName::s_k:
    case PresetName::r_h_e2:
    case PresetName::r_h_einf:
    case PresetName::y_h_lifted:
    case PresetName::mrs_e2_model:
    case PresetName::yn_conj: return true;
    default: return false;
  }
}

namespace detail {

inline std::string preset_label(const PresetId& id) {
  std::string s = std::string(to_string(id.name)) + " p=" + std::to_string(id.p);
  if (id.h) s += " h=" + std::to_string(*id.h);
  if (id.drop_q0) s += " drop_q0";
  if (id.simplify_odd) s += " simplify_odd";
  return s;
}

inline std::string preset_text(const PresetId& id) {
  const std::int64_t p = id.p;
  const bool odd = p != 2;
  const std::int64_t h = id.h.value_or(0);
  const auto hs = [](std::int64_t v) { return std::to_string(v); };
  std::string t = "p = " + hs(p) + "\n";

  switch (id.name) {
    case PresetName::may_e1:
      if (!id.drop_q0) {
        throw validation_error(
            "may_e1 needs drop_q0: the class detecting q_0 sits in degree 0 and "
            "ranks are counted over F_p[q_0]");
      }
      if (!odd) {
        if (id.simplify_odd) {
          throw validation_error("simplify_odd only applies at odd primes");
        }
        // h_{i,j} with (i,j) != (1,0).
        t += "gen poly deg = 2^(i+j) - 2^j - 1 for i = 2..inf, j = 0..inf\n";
        t += "gen poly deg = 2^(1+j) - 2^j - 1 for j = 1..inf\n";
        return t;
      }
      t += "gen poly deg = 2*p^i - 2 for i = 1..inf\n";
      if (id.simplify_odd) {
        t += "gen poly deg = 2*p^(i+j) - 2*p^j - 1 for i = 1..inf, j = 0..inf\n";
      } else {
        t += "gen ext deg = 2*p^(i+j) - 2*p^j - 1 for i = 1..inf, j = 0..inf\n";
        t += "gen poly deg = 2*p^(i+j+1) - 2*p^(j+1) - 2 for i = 1..inf, j = 0..inf\n";
      }
      return t;

    case PresetName::may_model:
      t += "gen poly deg = p^n mult = n for n = 1..inf\n";
      return t;

    case PresetName::dual_steenrod:
      if (!odd) {
        t += "gen poly deg = 2^n - 1 for n = 1..inf\n";
      } else {
        t += "gen poly deg = 2*p^n - 2 for n = 1..inf\n";
        t += "gen ext deg = 2*p^n - 1 for n = 0..inf\n";
      }
      return t;

    case PresetName::s_k:
      t += "gen poly deg = p^n for n = " + hs(h) + "..inf\n";
      return t;

    case PresetName::r_h_e2:
      t += "gen poly deg = p^n mult = min(" + hs(h) + ", n - " + hs(h) +
           " + 1) for n = " + hs(h) + "..inf\n";
      return t;

    case PresetName::r_h_einf:
      if (h >= 2) {
        t += "gen poly deg = p^(" + hs(h) + " + k) mult = k for k = 1.." +
             hs(h - 1) + "\n";
      }
      return t;

    case PresetName::y_h_lifted:
      t += "gen poly deg = 12*p^(1 + i + j) - 10*p^(1 + i - " + hs(h) +
           " + j) - 2*p^(1 + j) - 2 for i = " + hs(h + 1) + "..inf, j = 0.." +
           hs(h - 1) + "\n";
      return t;

    case PresetName::mrs_e2_model:
      // q_h is inverted and left out; ranks are relative to the q_h tower.
      t += "gen poly deg = 2*p^k - 2 for k = " + hs(h + 1) + ".." + hs(2 * h) + "\n";
      if (!odd) {
        t += "gen poly deg = 2*p^(i+j) - 2*p^j - 1 for i = " + hs(h + 1) +
             "..inf, j = 0.." + hs(h - 1) + "\n";
      } else {
        t += "gen ext deg = 2*p^(i+j) - 2*p^j - 1 for i = " + hs(h + 1) +
             "..inf, j = 0.." + hs(h - 1) + "\n";
        t += "gen poly deg = 2*p^(1+i+j) - 2*p^(j+1) - 2 for i = " + hs(h + 1) +
             "..inf, j = 0.." + hs(h - 1) + "\n";
      }
      return t;

    case PresetName::yn_conj:
      t += "gen poly deg = 2*p^(" + hs(h) + " + i) - 2 for i = 0.." + hs(h) + "\n";
      if (h >= 2) {
        t += "gen poly deg = 12*p^(" + hs(h + 1) + " + j) mult = j for j = 1.." +
             hs(h - 1) + "\n";
      }
      return t;

    case PresetName::q_poly:
      if (!id.drop_q0) {
        throw validation_error("q_poly needs drop_q0: q_0 sits in degree 0");
      }
      t += "gen poly deg = 2*p^i - 2 for i = 1..inf\n";
      return t;
  }
  throw validation_error("unknown preset");
}

}  // namespace detail

/// The AlgebraSpec of a catalog entry.
inline AlgebraSpec preset(const PresetId& id) {
  require_prime(id.p);
  if (preset_needs_h(id.name)) {
    if (!id.h) {
      throw validation_error(std::string(to_string(id.name)) +
                             " needs the parameter h");
    }
    const std::int64_t min_h = id.name == PresetName::s_k ? 0 : 1;
    if (*id.h < min_h || *id.h > 64) {
      throw validation_error(std::string(to_string(id.name)) + ": h = " +
                             std::to_string(*id.h) + " out of range");
    }
  }
  if (id.simplify_odd && id.name != PresetName::may_e1) {
    throw validation_error("simplify_odd only applies to may_e1");
  }
  const AlgebraSpec parsed = parse_spec(detail::preset_text(id));
  return AlgebraSpec(parsed.p(), parsed.families(), detail::preset_label(id));
}

struct MaxOverH {
  TruncatedSeries series;
  std::vector<std::int64_t> argmax;  // smallest maximizing h per degree
};

/// Largest h tried by max_over_h for truncation n.
inline std::int64_t max_h_for(std::int64_t p, std::int64_t n) {
  if (n <= 1) return 1;
  // ceil(log_p n)
  std::int64_t k = 0;
  for (std::int64_t pw = 1; pw < n; pw *= p) ++k;
  return k + 1;
}

/// Pointwise maximum over h of the cumulative rank of R^h (r_h_e2 or
/// r_h_einf), for 1 <= h <= ceil(log_p n) + 1.
inline MaxOverH max_over_h(PresetName family, std::int64_t p, std::int64_t n) {
  if (family != PresetName::r_h_e2 && family != PresetName::r_h_einf) {
    throw validation_error("max_over_h is defined for r_h_e2 and r_h_einf");
  }
  require_prime(p);
  if (n < 0) throw validation_error("truncation must be nonnegative");
  const std::int64_t top = max_h_for(p, n);
  std::vector<std::future<TruncatedSeries>> jobs;
  for (std::int64_t h = 1; h <= top; ++h) {
    jobs.push_back(std::async(std::launch::async, [=] {
      return hilbert_cumulative(preset(PresetId{family, p, h}), n);
    }));
  }
  std::vector<TruncatedSeries> per_h;
  for (auto& j : jobs) per_h.push_back(j.get());

  std::vector<bigint> best(per_h[0].coeffs().begin(), per_h[0].coeffs().end());
  std::vector<std::int64_t> arg(best.size(), 1);
  for (std::size_t i = 1; i < per_h.size(); ++i) {
    for (std::size_t d = 0; d < best.size(); ++d) {
      if (per_h[i][d] > best[d]) {
        best[d] = per_h[i][d];
        arg[d] = static_cast<std::int64_t>(i) + 1;
      }
    }
  }
  return MaxOverH{TruncatedSeries(std::move(best)), std::move(arg)};
}

}  // namespace stemsize
