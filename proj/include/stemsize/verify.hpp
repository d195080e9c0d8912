// SPDX-License-Identifier: Apache-2.0
//
// Property and oracle suites. Every randomized check draws from one
// mt19937_64 stream per suite, seeded from the caller's seed and the suite
// name, so a suite gives the same report alone or as part of "all".
// Draws use modulo reduction rather than std::uniform_int_distribution,
// whose output is not pinned by the standard.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stemsize/algebra.hpp"
#include "stemsize/arith.hpp"
#include "stemsize/asymptotics.hpp"
#include "stemsize/dsl.hpp"
#include "stemsize/ehp.hpp"
#include "stemsize/error.hpp"
#include "stemsize/presets.hpp"
#include "stemsize/series.hpp"
#include "stemsize/series_io.hpp"
#include "stemsize/torsion.hpp"

namespace stemsize {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

inline constexpr std::string_view kSuites[] = {"series",  "algebra", "presets",
                                               "torsion", "ehp",     "asymptotics"};

struct CheckResult {
  std::string suite;
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  // observations that are recorded, not asserted

  std::size_t passed() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.ok ? 1 : 0;
    return k;
  }
  bool ok() const { return passed() == checks.size(); }

  void write(std::ostream& os) const {
    for (const auto& c : checks) {
      os << (c.ok ? "PASS " : "FAIL ") << c.suite << '.' << c.name;
      if (!c.detail.empty()) os << "  " << c.detail;
      os << '\n';
    }
    for (const auto& n : notes) os << "NOTE " << n << '\n';
    os << "passed " << passed() << " of " << checks.size() << '\n';
  }
};

namespace detail {

class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream) {
    // FNV-1a of the stream name mixed into the seed.
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : stream) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    gen_.seed(seed ^ h);
  }
  /// Uniform-ish integer in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(int percent) { return range(0, 99) < percent; }

 private:
  std::mt19937_64 gen_;
};

inline TruncatedSeries random_series(Rng& rng, std::size_t trunc, std::int64_t max_coeff) {
  std::vector<bigint> c;
  for (std::size_t i = 0; i <= trunc; ++i) {
    bigint x = static_cast<long>(rng.range(0, max_coeff));
    // Occasionally a coefficient beyond 64 bits.
    if (rng.coin(10)) x <<= 80;
    c.push_back(std::move(x));
  }
  return TruncatedSeries(std::move(c));
}

/// DSL text of a random algebra with at most five families and every
/// generator degree in 1..12.
inline std::string random_spec_text(Rng& rng) {
  static constexpr std::int64_t primes[] = {2, 3, 5};
  const std::int64_t p = primes[rng.range(0, 2)];
  std::string t = "p = " + std::to_string(p) + "\n";
  const auto families = rng.range(1, 5);
  for (std::int64_t f = 0; f < families; ++f) {
    std::string kind;
    const auto k = rng.range(0, 9);
    if (k < 5) {
      kind = "poly";
    } else if (k < 8) {
      kind = "ext";
    } else {
      kind = "trunc(" + std::to_string(rng.range(2, 4)) + ")";
    }
    std::string line = "gen " + kind + " deg = ";
    std::string mult;
    std::string ranges;
    switch (rng.range(0, 3)) {
      case 0:
        line += std::to_string(rng.range(1, 12));
        if (rng.coin(30)) mult = std::to_string(rng.range(0, 3));
        break;
      case 1: {
        const auto a = rng.range(1, 3);
        const auto b = rng.range(0, 3);
        const auto lo = b == 0 ? rng.range(1, 2) : rng.range(0, 2);
        const auto hi = std::max(lo, (12 - b) / a - rng.range(0, 2));
        line += std::to_string(a) + "*i + " + std::to_string(b);
        ranges = "i = " + std::to_string(lo) + ".." + std::to_string(hi);
        if (rng.coin(30)) mult = "min(i, 2)";
        break;
      }
      case 2: {
        std::int64_t hi = 0;
        while (ipow(p, hi + 1) <= 11) ++hi;
        const auto c = rng.range(0, 12 - ipow(p, hi));
        line += c == 0 ? "p^i" : "p^i + " + std::to_string(c);
        ranges = "i = 0.." + std::to_string(hi);
        break;
      }
      default: {
        const auto c = rng.range(0, 5);
        line += "i + 2*j + " + std::to_string(c);
        ranges = "i = 1..2, j = 0.." + std::to_string(std::min<std::int64_t>(2, (10 - c) / 2));
        if (rng.coin(30)) mult = "min(i, j + 1)";
        break;
      }
    }
    if (!mult.empty()) line += " mult = " + mult;
    if (!ranges.empty()) line += " for " + ranges;
    t += line + "\n";
  }
  return t;
}

/// Largest truncation <= n whose total monomial count stays under `budget`,
/// so the brute-force oracle remains tractable.
inline std::int64_t oracle_truncation(const AlgebraSpec& spec, std::int64_t n,
                                      std::uint64_t budget) {
  const auto h = hilbert_cumulative(spec, n);
  std::int64_t m = n;
  while (m > 0 && h[static_cast<std::size_t>(m)] > static_cast<unsigned long>(budget)) --m;
  return m;
}

class Suite {
 public:
  Suite(std::string name, VerifyReport& report) : name_(std::move(name)), report_(report) {}

  void check(std::string name, bool ok, std::string detail = {}) {
    report_.checks.push_back({name_, std::move(name), ok, std::move(detail)});
  }
  /// Runs `body`, turning an unexpected exception into a failed check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("threw: ") + e.what());
    }
  }
  void note(std::string text) { report_.notes.push_back(name_ + "." + std::move(text)); }

 private:
  std::string name_;
  VerifyReport& report_;
};

template <class F>
bool throws_validation(F&& f) {
  try {
    f();
  } catch (const validation_error&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

// ---------------------------------------------------------------- series

inline TruncatedSeries explicit_factor(const GeneratorKind& kind, std::size_t d,
                                       std::size_t trunc) {
  std::vector<bigint> c(trunc + 1, 0);
  const std::size_t terms = kind.species() == Species::polynomial ? trunc / d + 1
                                                                  : static_cast<std::size_t>(kind.order());
  for (std::size_t k = 0; k < terms && k * d <= trunc; ++k) c[k * d] = 1;
  return TruncatedSeries(std::move(c));
}

inline void suite_series(std::uint64_t seed, VerifyReport& rep) {
  Suite s("series", rep);
  Rng rng(seed, "series");

  s.guarded("mul_commutative_associative", [&] {
    int bad = 0;
    for (int t = 0; t < 60; ++t) {
      const auto a = random_series(rng, rng.range(0, 30), 1000);
      const auto b = random_series(rng, rng.range(0, 30), 1000);
      const auto c = random_series(rng, rng.range(0, 30), 1000);
      if (!(mul(a, b) == mul(b, a))) ++bad;
      if (!(mul(mul(a, b), c) == mul(a, mul(b, c)))) ++bad;
    }
    s.check("mul_commutative_associative", bad == 0, "60 random triples");
  });

  s.guarded("mul_distributive", [&] {
    int bad = 0;
    for (int t = 0; t < 60; ++t) {
      const auto a = random_series(rng, rng.range(0, 30), 1000);
      const auto b = random_series(rng, rng.range(0, 30), 1000);
      const auto c = random_series(rng, rng.range(0, 30), 1000);
      if (!(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)))) ++bad;
    }
    s.check("mul_distributive", bad == 0, "60 random triples");
  });

  s.guarded("mul_factor_matches_explicit_product", [&] {
    int bad = 0;
    int cases = 0;
    for (int t = 0; t < 40; ++t) {
      const auto a = random_series(rng, rng.range(0, 200), 50);
      const auto d = rng.range(1, 10);
      for (const auto& kind : {GeneratorKind::polynomial(), GeneratorKind::exterior(),
                               GeneratorKind::truncated(static_cast<int>(rng.range(2, 5)))}) {
        ++cases;
        const auto expect = mul(a, explicit_factor(kind, static_cast<std::size_t>(d), a.trunc()));
        if (!(mul_factor(a, kind, d) == expect)) ++bad;
      }
    }
    s.check("mul_factor_matches_explicit_product", bad == 0,
            std::to_string(cases) + " cases, d <= 10, N <= 200");
  });

  s.guarded("cumulative_monotone", [&] {
    int bad = 0;
    for (int t = 0; t < 40; ++t) {
      const auto c = cumulative(random_series(rng, rng.range(0, 50), 100));
      for (std::size_t n = 1; n <= c.trunc(); ++n) bad += c[n] < c[n - 1] ? 1 : 0;
    }
    s.check("cumulative_monotone", bad == 0, "40 random series");
  });

  s.guarded("leq_partial_order", [&] {
    std::vector<TruncatedSeries> pool;
    for (int t = 0; t < 30; ++t) {
      std::vector<bigint> c;
      for (int i = 0; i < 4; ++i) c.emplace_back(static_cast<long>(rng.range(0, 1)));
      pool.emplace_back(std::move(c));
    }
    int bad = 0;
    for (const auto& a : pool) {
      bad += leq(a, a) ? 0 : 1;
      for (const auto& b : pool) {
        if (leq(a, b) && leq(b, a) && !(a == b)) ++bad;
        for (const auto& c : pool) {
          if (leq(a, b) && leq(b, c) && !leq(a, c)) ++bad;
        }
      }
    }
    s.check("leq_partial_order", bad == 0, "30^3 triples over {0,1}^4");
  });

  s.guarded("shift_suppression", [&] {
    int bad = 0;
    for (int t = 0; t < 30; ++t) {
      const auto c = cumulative(random_series(rng, rng.range(0, 40), 100));
      for (std::size_t k = 0; k <= c.trunc() + 2; ++k) bad += leq(shift(c, k), c) ? 0 : 1;
    }
    s.check("shift_suppression", bad == 0, "shift(cumulative(a), k) <= cumulative(a)");
  });

  s.guarded("json_roundtrip", [&] {
    int bad = 0;
    for (int t = 0; t < 20; ++t) {
      const auto a = random_series(rng, rng.range(0, 40), 1'000'000);
      const auto text = to_json(a).dump();
      if (!(series_from_json(nlohmann::json::parse(text)) == a)) ++bad;
    }
    s.check("json_roundtrip", bad == 0, "20 random series");
  });

  s.check("rejects_negative_coefficient", throws_validation([] {
            TruncatedSeries(std::vector<bigint>{1, -1});
          }));
}

// --------------------------------------------------------------- algebra

inline void suite_algebra(std::uint64_t seed, VerifyReport& rep) {
  Suite s("algebra", rep);
  Rng rng(seed, "algebra");

  s.guarded("oracle_random_specs", [&] {
    int bad = 0;
    std::string first_bad;
    for (int t = 0; t < 200; ++t) {
      const auto text = random_spec_text(rng);
      const auto spec = parse_spec(text);
      const auto n = oracle_truncation(spec, rng.range(1, 40), 300'000);
      if (!(hilbert(spec, n) == oracle_hilbert(spec, n))) {
        if (bad++ == 0) first_bad = "N=" + std::to_string(n) + " " + text;
      }
    }
    s.check("oracle_random_specs", bad == 0,
            bad == 0 ? "200 specs" : std::to_string(bad) + " mismatches, first: " + first_bad);
  });

  s.guarded("oracle_presets", [&] {
    std::vector<PresetId> ids = {{.name = PresetName::dual_steenrod, .p = 2},
                                 {.name = PresetName::may_e1, .p = 2, .drop_q0 = true}};
    for (std::int64_t h = 1; h <= 3; ++h) ids.push_back({.name = PresetName::r_h_e2, .p = 2, .h = h});
    int bad = 0;
    for (const auto& id : ids) {
      const auto spec = preset(id);
      bad += hilbert(spec, 40) == oracle_hilbert(spec, 40) ? 0 : 1;
    }
    s.check("oracle_presets", bad == 0, "dual_steenrod, may_e1, r_h_e2 h<=3 at N=40");
  });

  s.guarded("dsl_roundtrip", [&] {
    int bad = 0;
    for (int t = 0; t < 100; ++t) {
      const auto spec = parse_spec(random_spec_text(rng));
      const auto printed = print_spec(spec);
      const auto again = parse_spec(printed);
      if (!(again == spec) || print_spec(again) != printed) ++bad;
    }
    for (auto name : kAllPresets) {
      PresetId id{.name = name, .p = 3, .drop_q0 = true};
      if (preset_needs_h(name)) id.h = 2;
      const auto spec = preset(id);
      if (!(parse_spec(print_spec(spec)) == spec)) ++bad;
    }
    s.check("dsl_roundtrip", bad == 0, "100 random specs and every preset");
  });

  s.guarded("tensor_is_product", [&] {
    int bad = 0;
    for (int t = 0; t < 30; ++t) {
      auto a = parse_spec(random_spec_text(rng));
      auto b = parse_spec(random_spec_text(rng));
      b = AlgebraSpec(a.p(), b.families());
      bad += hilbert(tensor(a, b), 30) == mul(hilbert(a, 30), hilbert(b, 30)) ? 0 : 1;
    }
    s.check("tensor_is_product", bad == 0, "30 random pairs");
  });

  s.guarded("tensor_bracket_random", [&] {
    int bad = 0;
    for (int t = 0; t < 30; ++t) {
      const auto a = parse_spec(random_spec_text(rng));
      std::vector<AlgebraSpec> fs{a};
      std::vector<std::int64_t> budgets{rng.range(0, 15)};
      const auto k = rng.range(1, 2);
      for (std::int64_t i = 0; i < k; ++i) {
        fs.emplace_back(a.p(), parse_spec(random_spec_text(rng)).families());
        budgets.push_back(rng.range(0, 15));
      }
      bad += tensor_bracket(fs, budgets).ok ? 0 : 1;
    }
    s.check("tensor_bracket_random", bad == 0, "30 random products of 2-3 factors");
  });

  s.check("rejects_non_monotone_family", throws_validation([] {
            hilbert(parse_spec("p = 2\ngen poly deg = 5 for i = 1..inf\n"), 20);
          }));
  s.check("rejects_non_prime", throws_validation([] { parse_spec("p = 4\n"); }));
}

// --------------------------------------------------------------- presets

/// Generator degrees of a catalog row by direct loops, without the DSL.
inline std::multiset<std::int64_t> direct_degrees(const PresetId& id, std::int64_t n) {
  const std::int64_t p = id.p;
  const std::int64_t h = id.h.value_or(0);
  std::multiset<std::int64_t> out;
  auto put = [&](std::int64_t d, std::int64_t mult = 1) {
    if (d <= n) {
      for (std::int64_t k = 0; k < mult; ++k) out.insert(d);
    }
  };
  auto pw = [&](std::int64_t e) { return ipow(p, e); };
  switch (id.name) {
    case PresetName::may_e1:
      if (p == 2) {
        for (std::int64_t i = 1; pw(i) - 1 <= n; ++i) {
          for (std::int64_t j = 0; pw(i + j) - pw(j) - 1 <= n; ++j) {
            if (i == 1 && j == 0) continue;
            put(pw(i + j) - pw(j) - 1);
          }
        }
      } else {
        for (std::int64_t i = 1; 2 * pw(i) - 2 <= n; ++i) put(2 * pw(i) - 2);
        for (std::int64_t i = 1; 2 * pw(i) - 3 <= n; ++i) {
          for (std::int64_t j = 0; 2 * pw(i + j) - 2 * pw(j) - 1 <= n; ++j) {
            put(2 * pw(i + j) - 2 * pw(j) - 1);
            if (!id.simplify_odd) put(2 * pw(i + j + 1) - 2 * pw(j + 1) - 2);
          }
        }
      }
      break;
    case PresetName::may_model:
      for (std::int64_t k = 1; pw(k) <= n; ++k) put(pw(k), k);
      break;
    case PresetName::dual_steenrod:
      if (p == 2) {
        for (std::int64_t k = 1; pw(k) - 1 <= n; ++k) put(pw(k) - 1);
      } else {
        for (std::int64_t k = 1; 2 * pw(k) - 2 <= n; ++k) put(2 * pw(k) - 2);
        for (std::int64_t k = 0; 2 * pw(k) - 1 <= n; ++k) put(2 * pw(k) - 1);
      }
      break;
    case PresetName::s_k:
      for (std::int64_t k = h; pw(k) <= n; ++k) put(pw(k));
      break;
    case PresetName::r_h_e2:
      for (std::int64_t k = h; pw(k) <= n; ++k) put(pw(k), std::min(h, k - h + 1));
      break;
    case PresetName::r_h_einf:
      for (std::int64_t k = 1; k <= h - 1 && pw(h + k) <= n; ++k) put(pw(h + k), k);
      break;
    case PresetName::y_h_lifted:
      for (std::int64_t j = 0; j <= h - 1; ++j) {
        for (std::int64_t i = h + 1;; ++i) {
          const auto d = 12 * pw(1 + i + j) - 10 * pw(1 + i - h + j) - 2 * pw(1 + j) - 2;
          if (d > n) break;
          put(d);
        }
      }
      break;
    case PresetName::mrs_e2_model:
      for (std::int64_t k = h + 1; k <= 2 * h; ++k) put(2 * pw(k) - 2);
      for (std::int64_t j = 0; j <= h - 1; ++j) {
        for (std::int64_t i = h + 1; 2 * pw(i + j) - 2 * pw(j) - 1 <= n; ++i) {
          put(2 * pw(i + j) - 2 * pw(j) - 1);
          if (p != 2) put(2 * pw(1 + i + j) - 2 * pw(j + 1) - 2);
        }
      }
      break;
    case PresetName::yn_conj:
      for (std::int64_t i = 0; i <= h; ++i) put(2 * pw(h + i) - 2);
      for (std::int64_t j = 1; j <= h - 1; ++j) put(12 * pw(h + 1 + j), j);
      break;
    case PresetName::q_poly:
      for (std::int64_t i = 1; 2 * pw(i) - 2 <= n; ++i) put(2 * pw(i) - 2);
      break;
  }
  return out;
}

inline void suite_presets(std::uint64_t seed, VerifyReport& rep) {
  Suite s("presets", rep);
  (void)seed;

  s.guarded("examples", [&] {
    const auto d2 = hilbert(preset({.name = PresetName::dual_steenrod, .p = 2}), 7);
    s.check("dual_steenrod_p2", d2 == TruncatedSeries{1, 1, 1, 2, 2, 2, 3, 4},
            "[1,1,1,2,2,2,3,4]");
    s.check("dual_steenrod_p2_cumulative",
            cumulative(d2) == TruncatedSeries{1, 2, 3, 5, 7, 9, 12, 16});
    std::vector<std::int64_t> degs;
    for (const auto& g :
         instantiate(preset({.name = PresetName::may_e1, .p = 2, .drop_q0 = true}), 7)) {
      degs.push_back(g.degree);
    }
    s.check("may_e1_p2_degrees", degs == std::vector<std::int64_t>{1, 2, 3, 5, 6, 7},
            "h11,h20,h12,h21,h30,h13");
    const auto einf = max_over_h(PresetName::r_h_einf, 2, 7);
    s.check("r_h_einf_small_is_trivial",
            einf.series == TruncatedSeries::ones(7) &&
                einf.argmax == std::vector<std::int64_t>(8, 1));
  });

  s.guarded("degrees_match_direct_loops", [&] {
    int bad = 0;
    int cases = 0;
    for (const std::int64_t p : {2, 3}) {
      for (auto name : kAllPresets) {
        const bool needs = preset_needs_h(name);
        for (std::int64_t h = needs ? 1 : 0; h <= (needs ? 3 : 0); ++h) {
          for (const bool simp : {false, true}) {
            if (simp && (name != PresetName::may_e1 || p == 2)) continue;
            PresetId id{.name = name, .p = p, .drop_q0 = true, .simplify_odd = simp};
            if (needs) id.h = h;
            std::multiset<std::int64_t> got;
            for (const auto& g : instantiate(preset(id), 10'000)) {
              for (std::int64_t k = 0; k < g.multiplicity; ++k) got.insert(g.degree);
            }
            ++cases;
            bad += got == direct_degrees(id, 10'000) ? 0 : 1;
          }
        }
      }
    }
    s.check("degrees_match_direct_loops", bad == 0,
            std::to_string(cases) + " catalog rows at N = 10000");
  });

  s.guarded("simplify_odd_dominates", [&] {
    bool ok = true;
    for (const std::int64_t p : {3, 5}) {
      const auto exact = hilbert(preset({.name = PresetName::may_e1, .p = p, .drop_q0 = true}), 2000);
      const auto simple = hilbert(
          preset({.name = PresetName::may_e1, .p = p, .drop_q0 = true, .simplify_odd = true}), 2000);
      ok = ok && leq(exact, simple);
    }
    s.check("simplify_odd_dominates", ok, "p in {3,5}, N = 2000, coefficientwise");
  });

  s.guarded("y_h_lifted_positive", [&] {
    bool ok = true;
    for (const std::int64_t p : {2, 3, 5}) {
      for (std::int64_t h = 1; h <= 4; ++h) {
        for (const auto& g : instantiate(preset({.name = PresetName::y_h_lifted, .p = p, .h = h}),
                                         1'000'000)) {
          const auto i = g.indices[0];
          const auto j = g.indices[1];
          const auto d = 12 * ipow(p, 1 + i + j) - 10 * ipow(p, 1 + i - h + j) -
                         2 * ipow(p, 1 + j) - 2;
          ok = ok && d > 0 && d == g.degree;
        }
      }
    }
    s.check("y_h_lifted_positive", ok, "p in {2,3,5}, h <= 4, N = 10^6");
  });

  s.guarded("r_h_e2_is_tensor_of_s_k", [&] {
    bool ok = true;
    for (const std::int64_t p : {2, 3}) {
      for (std::int64_t h = 1; h <= 4; ++h) {
        AlgebraSpec whole = preset({.name = PresetName::s_k, .p = p, .h = h});
        for (std::int64_t k = h + 1; k <= 2 * h - 1; ++k) {
          whole = tensor(whole, preset({.name = PresetName::s_k, .p = p, .h = k}));
        }
        ok = ok && hilbert(whole, 600) ==
                       hilbert(preset({.name = PresetName::r_h_e2, .p = p, .h = h}), 600);
      }
    }
    s.check("r_h_e2_is_tensor_of_s_k", ok, "p in {2,3}, h <= 4, N = 600");
  });

  s.guarded("r_h_einf_generator_count", [&] {
    bool ok = true;
    for (std::int64_t h = 1; h <= 6; ++h) {
      std::int64_t total = 0;
      for (const auto& g :
           instantiate(preset({.name = PresetName::r_h_einf, .p = 2, .h = h}), ipow(2, 2 * h))) {
        total += g.multiplicity;
      }
      ok = ok && total == h * (h - 1) / 2;
    }
    s.check("r_h_einf_generator_count", ok, "C(h,2) for h <= 6");
  });

  s.guarded("max_over_h_dominates", [&] {
    bool ok = true;
    for (auto fam : {PresetName::r_h_e2, PresetName::r_h_einf}) {
      const auto mx = max_over_h(fam, 2, 300);
      for (std::int64_t h = 1; h <= max_h_for(2, 300); ++h) {
        const auto one = hilbert_cumulative(preset({.name = fam, .p = 2, .h = h}), 300);
        ok = ok && leq(one, mx.series);
      }
      for (std::size_t d = 0; d <= 300; ++d) {
        const auto h = mx.argmax[d];
        ok = ok && hilbert_cumulative(preset({.name = fam, .p = 2, .h = h}), 300)[d] ==
                       mx.series[d];
      }
    }
    s.check("max_over_h_dominates", ok, "p = 2, N = 300");
  });

  s.check("may_e1_requires_drop_q0", throws_validation([] {
            preset({.name = PresetName::may_e1, .p = 3});
          }));
}

// --------------------------------------------------------------- torsion

inline void suite_torsion(std::uint64_t seed, VerifyReport& rep) {
  Suite s("torsion", rep);
  (void)seed;
  constexpr std::int64_t kLimit = 10'000;

  s.guarded("counting_lemma_exhaustive", [&] {
    std::int64_t bad = 0;
    for (const std::int64_t p : {2, 3, 5}) {
      // prefix[i] = sum_{k <= i} (1 + v_p(k))
      std::vector<std::int64_t> prefix(kLimit + 1, 0);
      for (std::int64_t i = 1; i <= kLimit; ++i) prefix[i] = prefix[i - 1] + 1 + val_p(p, i);
      const double pd = static_cast<double>(p);
      for (std::int64_t b = 1; b <= kLimit; ++b) {
        const double lb = log_base(p, static_cast<double>(b));
        for (std::int64_t a = 0; a < b; ++a) {
          const auto exact = prefix[b] - prefix[a];
          if (static_cast<double>(exact) > pd / (pd - 1.0) * static_cast<double>(b - a) + lb) ++bad;
        }
      }
      for (std::int64_t b = 1; b <= 200; ++b) {
        for (std::int64_t a = 0; a < b; ++a) {
          const auto r = counting_lemma(p, a, b);
          if (r.exact != prefix[b] - prefix[a] || static_cast<double>(r.exact) > r.bound) ++bad;
        }
      }
    }
    s.check("counting_lemma_exhaustive", bad == 0, "p in {2,3,5}, 0 <= a < b <= 10^4");
  });

  s.guarded("stable_bound_exhaustive", [&] {
    std::int64_t bad = 0;
    for (const std::int64_t p : {2, 3, 5}) {
      for (const auto& curve : {VanishingCurve::linear(), VanishingCurve::sqrt()}) {
        for (std::int64_t n = 1; n <= kLimit; ++n) {
          const auto r = stable_torsion_bound(p, n, curve);
          if (static_cast<double>(r.exact_sum) > r.closed_form) ++bad;
        }
      }
    }
    s.check("stable_bound_exhaustive", bad == 0, "p in {2,3,5}, n <= 10^4, linear and sqrt");
  });

  s.guarded("stable_bound_local_growth", [&] {
    std::int64_t bad = 0;
    const auto lin = VanishingCurve::linear();
    for (const std::int64_t p : {2, 3, 5}) {
      const std::int64_t w = 2 * p - 2;
      for (std::int64_t n = 1; n <= kLimit; ++n) {
        const auto here = stable_torsion_bound(p, n, lin);
        int vmax = 0;
        for (std::int64_t i = n / w + 1; i <= (n + here.g) / w; ++i) vmax = std::max(vmax, val_p(p, i));
        if (here.exact_sum > stable_torsion_bound(p, n + w, lin).exact_sum + 1 + vmax) ++bad;
      }
    }
    s.check("stable_bound_local_growth", bad == 0, "exact(n) <= exact(n+2p-2) + 1 + max v_p");
  });

  s.guarded("goodwillie_exact_below_linear", [&] {
    std::int64_t bad = 0;
    for (const std::int64_t p : {2, 3, 5}) {
      for (std::int64_t sdim = 1; sdim <= 8; ++sdim) {
        for (std::int64_t m = 0; m <= 3; ++m) {
          // Running oracle: exact(n) = sum over k with s k < n.
          std::int64_t exact = 0;
          std::int64_t k = 1;
          for (std::int64_t n = 0; n <= kLimit; ++n) {
            while (sdim * k < n) exact += m + val_p(p, k++);
            const double linear = static_cast<double>((m + 1) * n) / static_cast<double>(sdim);
            if (static_cast<double>(exact) > linear) ++bad;
            if (n % 97 == 0 && goodwillie_bound(sdim, m, n, p).exact != exact) ++bad;
          }
        }
      }
    }
    s.check("goodwillie_exact_below_linear", bad == 0, "s <= 8, m <= 3, n <= 10^4");
  });

  s.guarded("an_e2_zero_fraction", [&] {
    bool ok = true;
    for (const std::int64_t p : {3, 5, 7}) {
      std::int64_t zeros = 0;
      for (std::int64_t u = 1; u <= kLimit; ++u) zeros += *an_e2_exponent(p, u) == 0 ? 1 : 0;
      ok = ok && zeros == kLimit - kLimit / (p - 1);
    }
    s.check("an_e2_zero_fraction", ok, "(p-2)/(p-1) of u in [1, 10^4] for p in {3,5,7}");
  });

  s.guarded("barratt_monotone", [&] {
    bool ok = true;
    for (const bool dbl : {false, true}) {
      for (const std::int64_t p : {2, 3}) {
        for (std::int64_t m = 1; m <= 3; ++m) {
          for (std::int64_t sdim = 1; sdim <= 20; ++sdim) {
            for (std::int64_t n = 1; n <= 400; ++n) {
              const auto here = barratt_bound(sdim, m, n, p, dbl);
              ok = ok && here <= barratt_bound(sdim, m, n + 1, p, dbl);
              ok = ok && barratt_bound(sdim + 1, m, n, p, dbl) <= here;
            }
          }
        }
      }
    }
    s.check("barratt_monotone", ok, "nondecreasing in n, nonincreasing in s");
  });

  s.guarded("spot_values", [&] {
    const auto st = stable_torsion_bound(2, 16, VanishingCurve::linear());
    s.check("stable_2_16_linear", st.exact_sum == 20 && st.closed_form == 26.0, "(20, 26)");
    const auto gw = goodwillie_bound(1, 1, 4, 2);
    s.check("goodwillie_1_1_4_2", gw.exact == 1 + 2 + 1 && gw.linear == 8.0,
            "(1+v(1)) + (1+v(2)) + (1+v(3)) = 4, linear 8");
    s.check("norm_order_2_1_2", norm_torsion_order(2, 1, 2) == 2);
    s.check("an_e2_table", an_e2_exponent(2, 7) == 1 && an_e2_exponent(2, 8) == 5 &&
                               an_e2_exponent(3, 5) == 0 && an_e2_exponent(3, 6) == 2 &&
                               !an_e2_exponent(2, 0));
    s.check("im_j_lower", im_j_lower(3, 3) == 1 && im_j_lower(3, 11) == 2 &&
                              im_j_lower(3, 35) == 3 && im_j_lower(3, 4) == 0);
    s.check("im_j_rejects_p2", throws_validation([] { im_j_lower(2, 3); }));
  });
}

// ------------------------------------------------------------------- ehp

/// Shifted sequences (j_1..j_k) with j_k >= n - 1 and j_s > 2 j_{s+1} + 1,
/// counted by sum j_s.
inline std::vector<std::int64_t> shifted_counts(std::int64_t n, std::int64_t max_dim) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(max_dim) + 1, 0);
  std::function<void(std::int64_t, std::int64_t)> grow = [&](std::int64_t first, std::int64_t dim) {
    ++out[static_cast<std::size_t>(dim)];
    for (std::int64_t j = 2 * first + 2; dim + j <= max_dim; ++j) grow(j, dim + j);
  };
  ++out[0];  // empty sequence
  for (std::int64_t j = n - 1; j <= max_dim; ++j) grow(j, j);
  return out;
}

inline void suite_ehp(std::uint64_t seed, VerifyReport& rep) {
  Suite s("ehp", rep);
  (void)seed;

  s.guarded("recurrence", [&] {
    int bad = 0;
    for (const std::int64_t p : {2, 3}) {
      for (std::int64_t n = 1; n <= 20; ++n) bad += verify_ehp_recurrence(p, n, 100) ? 0 : 1;
    }
    s.check("recurrence", bad == 0, "p in {2,3}, n <= 20, N = 100");
  });

  s.guarded("a_below_admissible", [&] {
    const auto p2 = admissible_series(2, 80);
    bool two = true;
    for (std::int64_t n = 2; n <= 10; ++n) two = two && leq(a_series(2, n, 80), p2);
    s.check("a_below_admissible_p2", two, "n in [2,10], N = 80, coefficientwise");
    // With the odd-prime grading 2(p-1)i - e - 1, a single term (0, i) lands
    // in degree 4i - 1 at p = 3, where the admissible basis is empty.
    const auto p3 = admissible_series(3, 80);
    bool odd = true;
    bool odd_cum = true;
    std::string first;
    for (std::int64_t n = 3; n <= 10; ++n) {
      const auto a = a_series(3, n, 80);
      odd_cum = odd_cum && leq(cumulative(a), cumulative(p3));
      for (std::size_t d = 0; d <= 80 && odd; ++d) {
        if (a[d] > p3[d]) {
          odd = false;
          first = "first excess at n=" + std::to_string(n) + " degree " + std::to_string(d) +
                  ": A=" + a[d].get_str() + " P=" + p3[d].get_str();
        }
      }
    }
    s.check("a_below_admissible_p3", odd,
            odd ? "n in [3,10], N = 80, coefficientwise" : first);
    s.check("a_below_admissible_p3_cumulative", odd_cum, "n in [3,10], N = 80");
  });

  s.guarded("shift_bijection", [&] {
    bool ok = true;
    for (std::int64_t n = 1; n <= 6; ++n) {
      const auto a = a_series(2, n, 30);
      const auto ref = shifted_counts(n, 30);
      for (std::size_t d = 0; d <= 30; ++d) ok = ok && a[d] == static_cast<long>(ref[d]);
    }
    s.check("shift_bijection", ok, "n <= 6, d <= 30");
  });

  s.guarded("admissible_equals_dual_steenrod", [&] {
    const bool two = admissible_series(2, 60) ==
                     hilbert(preset({.name = PresetName::dual_steenrod, .p = 2}), 60);
    const bool three = admissible_series(3, 40) ==
                       hilbert(preset({.name = PresetName::dual_steenrod, .p = 3}), 40);
    s.check("admissible_equals_dual_steenrod", two && three, "p=2 N=60, p=3 N=40");
  });

  s.guarded("a_series_monotone_in_n", [&] {
    bool ok = true;
    for (const std::int64_t p : {2, 3}) {
      for (std::int64_t n = 2; n <= 10; ++n) ok = ok && leq(a_series(p, n, 60), a_series(p, n - 1, 60));
    }
    s.check("a_series_monotone_in_n", ok, "I(n) in I(n-1), N = 60");
  });

  s.guarded("enumeration_valid", [&] {
    bool ok = true;
    for (const std::int64_t p : {2, 3, 5}) {
      for (std::int64_t n = 1; n <= 6; ++n) {
        std::set<std::vector<std::pair<int, std::int64_t>>> seen;
        for (const auto& j : enumerate_I(p, n, 40)) {
          ok = ok && j.valid() && j.dim() <= 40;
          std::vector<std::pair<int, std::int64_t>> key;
          for (const auto& t : j.terms) key.emplace_back(t.epsilon, t.i);
          ok = ok && seen.insert(key).second;
        }
      }
    }
    s.check("enumeration_valid", ok, "members valid, distinct, within dimension");
  });

  s.guarded("examples", [&] {
    s.check("a_series_2_1", a_series(2, 1, 3) == TruncatedSeries{2, 1, 2, 2}, "[2,1,2,2]");
    s.check("admissible_2_7", admissible_series(2, 7) == TruncatedSeries{1, 1, 1, 2, 2, 2, 3, 4});
    const auto ur = unstable_rank_bound(2, TruncatedSeries{1, 1, 1},
                                        TruncatedSeries{1, 1, 1}, 2);
    s.check("unstable_rank_bound", ur == TruncatedSeries{2, 6, 12}, "[2,6,12]");
  });
}

// ----------------------------------------------------------- asymptotics

inline void suite_asymptotics(std::uint64_t seed, VerifyReport& rep) {
  Suite s("asymptotics", rep);
  (void)seed;

  s.guarded("constants", [&] {
    bool ok = true;
    for (const std::int64_t p : {2, 3, 5, 7}) {
      const auto k = constants(p);
      ok = ok && k.k1 < k.k2 && k.k2 < k.k3;
    }
    const auto k = constants(2);
    const bool values = std::abs(k.k1 - 0.05550) < 1e-5 && std::abs(k.k2 - 0.10376) < 1e-5 &&
                        std::abs(k.k3 - 0.34690) < 1e-5;
    s.check("constants_ordered", ok, "K1 < K2 < K3 for p in {2,3,5,7}");
    s.check("constants_p2", values, "0.05550, 0.10376, 0.34690 within 1e-5");
  });

  const auto bracket = [&](const std::string& name, std::int64_t p, std::int64_t mmax,
                           BracketModel model, BracketOptions opt = {}) {
    s.guarded(name, [&] {
      int bad = 0;
      for (std::int64_t m = 1; m <= mmax; ++m) bad += bracketing_check(p, m, model, opt).ok ? 0 : 1;
      s.check(name, bad == 0, "p=" + std::to_string(p) + ", m <= " + std::to_string(mmax));
    });
  };
  bracket("may_model_both_p2", 2, 8, BracketModel::may_model);
  bracket("may_model_upper_p2", 2, 14, BracketModel::may_model, {.lower = false});
  bracket("may_model_upper_p3", 3, 8, BracketModel::may_model, {.lower = false});
  bracket("r_h_einf_p2", 2, 10, BracketModel::r_h_einf);
  bracket("r_h_einf_p3", 3, 6, BracketModel::r_h_einf);
  bracket("r_h_e2_p2", 2, 7, BracketModel::r_h_e2);
  bracket("r_h_e2_p3", 3, 4, BracketModel::r_h_e2);

  s.guarded("profiles", [&] {
    std::vector<std::int64_t> pts;
    for (std::int64_t m = 6; m <= 16; ++m) pts.push_back(ipow(2, m));
    const auto prof = ratio_profile(preset({.name = PresetName::may_model, .p = 2}), 3, pts);
    const double k3 = constants(2).k3;
    bool below = true;
    bool monotone = true;
    std::string ratios;
    for (std::size_t i = 0; i < prof.rows.size(); ++i) {
      below = below && prof.rows[i].ratio > 0.0 && prof.rows[i].ratio < k3;
      if (i > 0 && prof.rows[i].ratio < prof.rows[i - 1].ratio) monotone = false;
      ratios += (i ? "," : "") + format_double(std::round(prof.rows[i].ratio * 1e5) / 1e5);
    }
    s.check("may_model_profile_below_K3", below, "k=3, n = 2^6..2^16");
    s.note(std::string("may_model_profile ratios ") + ratios +
           (monotone ? " (nondecreasing)" : " (not monotone)"));
    const auto flat = ratio_profile(parse_spec("p = 2\n"), 2, pts);
    bool zero = true;
    for (const auto& r : flat.rows) zero = zero && r.ratio == 0.0;
    s.check("constant_series_profile_zero", zero);
  });
}

}  // namespace detail

/// Runs one suite by name, or every suite for "all".
inline VerifyReport run_verify(std::string_view suite, std::uint64_t seed = kDefaultSeed) {
  VerifyReport rep;
  using Fn = void (*)(std::uint64_t, VerifyReport&);
  const std::pair<std::string_view, Fn> table[] = {
      {"series", detail::suite_series},   {"algebra", detail::suite_algebra},
      {"presets", detail::suite_presets}, {"torsion", detail::suite_torsion},
      {"ehp", detail::suite_ehp},         {"asymptotics", detail::suite_asymptotics}};
  bool found = false;
  for (const auto& [name, fn] : table) {
    if (suite == "all" || suite == name) {
      fn(seed, rep);
      found = true;
    }
  }
  if (!found) throw validation_error("unknown suite '" + std::string(suite) + "'");
  return rep;
}

}  // namespace stemsize
