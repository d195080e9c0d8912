// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. One PASS/FAIL line per criterion. The summary line counts
// failures; with --strict any failure also makes the exit status 1.
// An optional path argument names the stemsize executable, used for the
// command-line determinism check.

#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stemsize/stemsize.hpp"

using namespace stemsize;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s,
               const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.ok = false;
    o.detail += "; over the " + format_double(limit_s) + " s limit";
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << " " << name << "  "
            << o.detail << " [" << timing << "]" << std::endl;
  if (!o.ok) ++failures;
}

long max_rss_kb() {
  rusage u{};
  getrusage(RUSAGE_SELF, &u);
  return u.ru_maxrss;
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return "<popen failed>";
  char buf[4096];
  while (const auto n = std::fread(buf, 1, sizeof buf, f)) out.append(buf, n);
  pclose(f);
  return out;
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream os;
  r.write(os);
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  bool strict = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--strict") {
      strict = true;
    } else {
      cli = argv[i];
    }
  }

  criterion(1, "oracle_equivalence", 60, [] {
    detail::Rng rng(kDefaultSeed, "acceptance");
    int bad = 0;
    int max_n = 0;
    for (int t = 0; t < 200; ++t) {
      const auto spec = parse_spec(detail::random_spec_text(rng));
      const auto n = detail::oracle_truncation(spec, rng.range(1, 40), 300'000);
      max_n = std::max<int>(max_n, static_cast<int>(n));
      bad += hilbert(spec, n) == oracle_hilbert(spec, n) ? 0 : 1;
    }
    std::vector<PresetId> ids = {{.name = PresetName::dual_steenrod, .p = 2},
                                 {.name = PresetName::may_e1, .p = 2, .drop_q0 = true}};
    for (std::int64_t h = 1; h <= 3; ++h) ids.push_back({.name = PresetName::r_h_e2, .p = 2, .h = h});
    int bad_presets = 0;
    for (const auto& id : ids) {
      const auto spec = preset(id);
      for (std::int64_t n = 0; n <= 40; n += 8) {
        bad_presets += hilbert(spec, n) == oracle_hilbert(spec, n) ? 0 : 1;
      }
    }
    return Outcome{bad == 0 && bad_presets == 0,
                   "exact; 200 random specs (largest N " + std::to_string(max_n) + "), " +
                       std::to_string(bad) + " mismatches; 5 presets at N<=40, " +
                       std::to_string(bad_presets) + " mismatches"};
  });

  criterion(2, "basis_count_agreement", 30, [] {
    int bad = 0;
    for (std::int64_t n = 0; n <= 60; ++n) {
      bad += admissible_series(2, n) == hilbert(preset({.name = PresetName::dual_steenrod, .p = 2}), n)
                 ? 0 : 1;
    }
    for (std::int64_t n = 0; n <= 40; ++n) {
      bad += admissible_series(3, n) == hilbert(preset({.name = PresetName::dual_steenrod, .p = 3}), n)
                 ? 0 : 1;
    }
    return Outcome{bad == 0, "exact; p=2 N<=60, p=3 N<=40; " + std::to_string(bad) + " mismatches"};
  });

  criterion(3, "ehp_recurrences", 120, [] {
    std::string failed;
    for (std::int64_t p : {2, 3}) {
      for (std::int64_t n = 1; n <= 20; ++n) {
        if (!verify_ehp_recurrence(p, n, 100)) {
          failed += " p=" + std::to_string(p) + ",n=" + std::to_string(n);
        }
      }
    }
    return Outcome{failed.empty(), "exact; p in {2,3}, n<=20, N=100;" +
                                       (failed.empty() ? std::string(" all hold") : failed)};
  });

  criterion(4, "a_series_below_admissible", 120, [] {
    constexpr std::int64_t N = 80;
    std::string detail = "exact coefficientwise, N=80;";
    bool ok = true;
    for (std::int64_t p : {2, 3}) {
      const auto pa = admissible_series(p, N);
      const std::int64_t lo = p == 2 ? 2 : 3;
      int bad = 0;
      std::string first;
      for (std::int64_t n = lo; n <= 10; ++n) {
        const auto a = a_series(p, n, N);
        if (leq(a, pa)) continue;
        if (bad++ == 0) {
          for (std::size_t d = 0; d <= static_cast<std::size_t>(N); ++d) {
            if (a[d] > pa[d]) {
              first = " first at n=" + std::to_string(n) + " degree " + std::to_string(d) +
                      ": A=" + a[d].get_str() + " P=" + pa[d].get_str();
              break;
            }
          }
        }
      }
      ok = ok && bad == 0;
      detail += " p=" + std::to_string(p) + " n=" + std::to_string(lo) + "..10 " +
                std::to_string(bad) + " violations" + first + ";";
    }
    return Outcome{ok, detail};
  });

  criterion(5, "torsion_chain", 60, [] {
    constexpr std::int64_t top = 10'000;
    int bad = 0;
    const VanishingCurve curves[] = {VanishingCurve::linear(), VanishingCurve::power_law(0.5, 1.0)};
    for (std::int64_t p : {2, 3, 5}) {
      for (const auto& c : curves) {
        for (std::int64_t n = 1; n <= top; ++n) {
          const auto r = stable_torsion_bound(p, n, c);
          bad += static_cast<double>(r.exact_sum) <= r.closed_form ? 0 : 1;
        }
      }
    }
    // counting lemma for every 0 <= a < b <= 10^4, through prefix sums
    std::int64_t pairs = 0;
    int bad_count = 0;
    for (std::int64_t p : {2, 3, 5}) {
      std::vector<std::int64_t> pre(top + 1, 0);
      for (std::int64_t i = 1; i <= top; ++i) pre[i] = pre[i - 1] + 1 + val_p(p, i);
      const double pd = static_cast<double>(p);
      for (std::int64_t b = 1; b <= top; ++b) {
        const double lb = log_base(p, static_cast<double>(b));
        for (std::int64_t a = 0; a < b; ++a) {
          ++pairs;
          const double bound = pd / (pd - 1.0) * static_cast<double>(b - a) + lb;
          bad_count += static_cast<double>(pre[b] - pre[a]) <= bound ? 0 : 1;
        }
      }
    }
    // the library routine agrees with the prefix sums on a sample
    for (std::int64_t p : {2, 3, 5}) {
      for (std::int64_t a = 0; a < 200; a += 5) {
        std::int64_t sum = 0;
        for (std::int64_t i = a + 1; i <= a + 97; ++i) sum += 1 + val_p(p, i);
        const auto lib = counting_lemma(p, a, a + 97);
        bad_count += lib.exact == sum && static_cast<double>(lib.exact) <= lib.bound ? 0 : 1;
      }
    }
    return Outcome{bad == 0 && bad_count == 0,
                   "exact_sum <= closed_form for n<=10^4, p in {2,3,5}, linear and sqrt: " +
                       std::to_string(bad) + " violations; counting lemma over " +
                       std::to_string(pairs) + " (p,a,b): " + std::to_string(bad_count) +
                       " violations"};
  });

  criterion(6, "growth_brackets", 600, [] {
    std::string failed;
    BracketOptions big{.lower = false, .max_truncation = std::int64_t{1} << 20};
    for (std::int64_t m = 1; m <= 18; ++m) {
      if (!bracketing_check(2, m, BracketModel::may_model, big).ok) failed += " upper p=2 m=" + std::to_string(m);
    }
    for (std::int64_t m = 1; m <= 11; ++m) {
      if (!bracketing_check(3, m, BracketModel::may_model, big).ok) failed += " upper p=3 m=" + std::to_string(m);
    }
    const BracketOptions lower{.upper = false};
    for (std::int64_t m = 1; m <= 8; ++m) {
      if (!bracketing_check(2, m, BracketModel::may_model, lower).ok) failed += " lower p=2 m=" + std::to_string(m);
    }
    for (std::int64_t m = 1; m <= 12; ++m) {
      if (!bracketing_check(2, m, BracketModel::r_h_einf).ok) failed += " r_h_einf p=2 m=" + std::to_string(m);
    }
    return Outcome{failed.empty(),
                   "exact integers; may_model upper p=2 m<=18, p=3 m<=11; lower p=2 m<=8; "
                   "r_h_einf p=2 m<=12;" + (failed.empty() ? std::string(" all hold") : failed)};
  });

  criterion(7, "spot_values", 0, [] {
    std::vector<std::string> bad;
    const auto want = [&](bool ok, const std::string& what) { if (!ok) bad.push_back(what); };
    for (std::int64_t u = 1; u < 40; u += 2) want(an_e2_exponent(2, u) == 1, "an_e2(2,odd)");
    want(an_e2_exponent(2, 8) == 5, "an_e2(2,8)=5");
    want(an_e2_exponent(3, 5) == 0, "an_e2(3,5)=0");
    want(an_e2_exponent(3, 6) == 2, "an_e2(3,6)=2");
    const auto st = stable_torsion_bound(2, 16, VanishingCurve::linear());
    want(st.exact_sum == 20 && st.closed_form == 26.0, "stable(2,16,linear)=(20,26.0)");
    const auto gw = goodwillie_bound(1, 1, 4, 2);
    want(gw.exact == 5 && gw.linear == 8.0,
         "goodwillie(1,1,4,2)=(5,8.0) got (" + std::to_string(gw.exact) + "," +
             format_double(gw.linear) + ")");
    want(norm_torsion_order(2, 1, 2) == 2, "norm(2,1,2)=2");
    std::string d = "exact;";
    for (const auto& b : bad) d += " mismatch " + b + ";";
    if (bad.empty()) d += " all 26 values match";
    return Outcome{bad.empty(), d};
  });

  criterion(8, "mahler_profile", 120, [] {
    std::vector<std::int64_t> pts;
    for (int e = 6; e <= 14; ++e) pts.push_back(std::int64_t{1} << e);
    const auto prof = ratio_profile(preset({.name = PresetName::s_k, .p = 2, .h = 0}), 2, pts);
    const double hi = 1.0 / (2.0 * std::log(2.0));
    bool inside = true;
    bool mono = true;
    std::string vals;
    for (std::size_t i = 0; i < prof.rows.size(); ++i) {
      const double r = prof.rows[i].ratio;
      inside = inside && r > 0.5 && r <= hi;
      // nondecreasing across the last five points
      if (i + 4 >= prof.rows.size() && r < prof.rows[i - 1].ratio) mono = false;
      char buf[24];
      std::snprintf(buf, sizeof buf, "%.5f", r);
      vals += (i ? "," : "") + std::string(buf);
    }
    return Outcome{inside && mono, std::string("interval (0.5, 1/(2 ln 2)] ") +
                                       (inside ? "holds" : "violated") +
                                       "; last five nondecreasing " + (mono ? "holds" : "violated") +
                                       "; ratios " + vals};
  });

  criterion(9, "performance", 300, [] {
    const auto spec = preset({.name = PresetName::may_e1, .p = 2, .drop_q0 = true});
    const auto t0 = Clock::now();
    const auto c18 = hilbert_cumulative(spec, std::int64_t{1} << 18);
    const double s18 = std::chrono::duration<double>(Clock::now() - t0).count();
    const long kb = max_rss_kb();
    const bool ok = s18 <= 300.0 && kb <= 4L * 1024 * 1024;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "N=2^18 in %.2f s (limit 300 s), peak RSS %.1f MB (limit 4096 MB), "
                  "ln cumrank %.3f",
                  s18, static_cast<double>(kb) / 1024.0, coeff_log(c18, c18.trunc()));
    return Outcome{ok, buf};
  });

  // Reported, not gated.
  {
    const auto t0 = Clock::now();
    const auto c20 = hilbert_cumulative(preset({.name = PresetName::may_e1, .p = 2, .drop_q0 = true}),
                                        std::int64_t{1} << 20);
    const double s20 = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("INFO stretch may_e1 N=2^20 in %.2f s, peak RSS %.1f MB, ln cumrank %.3f\n", s20,
                static_cast<double>(max_rss_kb()) / 1024.0, coeff_log(c20, c20.trunc()));
    std::fflush(stdout);
  }

  criterion(10, "determinism", 0, [&] {
    const bool lib = report_text(run_verify("all")) == report_text(run_verify("all"));
    std::string d = std::string("library reports ") + (lib ? "identical" : "differ");
    bool ok = lib;
    if (!cli.empty()) {
      const std::string cmd = "\"" + cli + "\" verify --suite all 2>&1";
      const auto a = capture(cmd);
      const auto b = capture(cmd);
      const bool same = a == b && !a.empty();
      ok = ok && same;
      d += std::string("; cli reports ") + (same ? "identical" : "differ");
    }
    return Outcome{ok, d};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL")
            << std::endl;
  return strict && failures != 0 ? 1 : 0;
}
