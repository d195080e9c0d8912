// SPDX-License-Identifier: Apache-2.0
//
// stemsize: command-line front end.
//
// Exit status: 0 success, 1 invalid input, 2 a verification check failed,
// 3 a resource guard tripped.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stemsize/stemsize.hpp"

namespace {

using namespace stemsize;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kVerifyFailed = 2;
constexpr int kResource = 3;

struct Output {
  std::string format = "csv";
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw validation_error("cannot open '" + path + "' for writing");
    f << text;
  }
};

struct Guards {
  std::int64_t max_truncation = std::int64_t{1} << 22;
  std::uint64_t max_enum = 10'000'000;

  void truncation(std::int64_t n) const {
    if (n < 0) throw validation_error("--max-degree must be nonnegative");
    if (n > max_truncation) {
      throw resource_error("truncation " + std::to_string(n) + " exceeds --max-truncation " +
                           std::to_string(max_truncation));
    }
  }
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw validation_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Doubles in CSV always carry a decimal point, so 26 prints as 26.0.
std::string csv_double(double x) {
  auto s = format_double(x);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw validation_error("bad integer '" + s + "' in --points");
  return v;
}

struct PointTerm {
  std::optional<std::int64_t> base;
  std::int64_t value = 0;  // exponent when base is set
};

PointTerm parse_point_term(const std::string& s) {
  const auto caret = s.find('^');
  if (caret == std::string::npos) return {std::nullopt, parse_int(s)};
  return {parse_int(s.substr(0, caret)), parse_int(s.substr(caret + 1))};
}

std::int64_t point_value(const PointTerm& t) {
  return t.base ? ipow(*t.base, t.value) : t.value;
}

/// "2^6..2^16" (powers), "10..20" (every integer), or "64,100,2^9" (a list).
std::vector<std::int64_t> parse_points(std::string text) {
  std::erase(text, ' ');
  std::vector<std::int64_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = parse_point_term(text.substr(0, dots));
    const auto hi = parse_point_term(text.substr(dots + 2));
    if (lo.base && hi.base) {
      if (*lo.base != *hi.base) throw validation_error("--points: bases differ");
      for (auto e = lo.value; e <= hi.value; ++e) out.push_back(ipow(*lo.base, e));
    } else {
      const auto a = point_value(lo);
      const auto b = point_value(hi);
      if (b - a > 1'000'000) throw validation_error("--points: range too long");
      for (auto n = a; n <= b; ++n) out.push_back(n);
    }
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(point_value(parse_point_term(item)));
  }
  if (out.empty()) throw validation_error("--points is empty");
  return out;
}

std::string series_text(const TruncatedSeries& s, const Output& out) {
  std::ostringstream os;
  if (out.format == "json") {
    os << to_json(s).dump() << '\n';
  } else {
    write_csv(os, s);
  }
  return os.str();
}

std::string max_text(const MaxOverH& mx, const Output& out) {
  std::ostringstream os;
  if (out.format == "json") {
    auto j = to_json(mx.series);
    j["cumulative"] = true;
    j["argmax_h"] = mx.argmax;
    os << j.dump() << '\n';
  } else {
    os << "n,coeff,argmax_h\n";
    for (std::size_t n = 0; n <= mx.series.trunc(); ++n) {
      os << n << ',' << mx.series[n].get_str() << ',' << mx.argmax[n] << '\n';
    }
  }
  return os.str();
}

VanishingCurve parse_curve(const std::string& text) {
  if (text == "linear") return VanishingCurve::linear();
  if (text == "sqrt") return VanishingCurve::sqrt();
  if (text.rfind("table:", 0) == 0) {
    std::ifstream f(text.substr(6));
    if (!f) throw validation_error("cannot read curve table '" + text.substr(6) + "'");
    return VanishingCurve::read_table(f);
  }
  throw validation_error("--curve must be linear, sqrt or table:<path>");
}

struct PresetFlags {
  std::string name;
  std::int64_t p = 2;
  std::optional<std::int64_t> h;
  bool drop_q0 = false;
  bool simplify_odd = false;

  PresetId id() const {
    return PresetId{.name = preset_from_string(name),
                    .p = p,
                    .h = h,
                    .drop_q0 = drop_q0,
                    .simplify_odd = simplify_odd};
  }
};

void add_preset_flags(CLI::App* cmd, PresetFlags& f) {
  cmd->add_option("--name", f.name, "Preset name");
  cmd->add_option("--p", f.p, "Prime");
  cmd->add_option("--h", f.h, "Height h (k for s_k)");
  cmd->add_flag("--drop-q0", f.drop_q0, "Drop the degree-0 class q_0");
  cmd->add_flag("--simplify-odd", f.simplify_odd, "Odd p: one polynomial generator per (h, b) pair");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hilbert series, torsion bounds and growth checks for stable stems"};
  app.require_subcommand(1);
  // --h is the height parameter, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  Output out;
  Guards guards;
  const auto common = [&](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)));
    cmd->add_option("--out", out.path, "Write output here instead of standard output");
    cmd->add_option("--max-truncation", guards.max_truncation, "Largest allowed truncation degree");
    cmd->add_option("--max-enum", guards.max_enum, "Largest allowed enumeration count");
  };

  std::int64_t max_degree = -1;
  bool cumulative_flag = false;
  std::string spec_path;

  auto* hil = app.add_subcommand("hilbert", "Hilbert series of a spec file");
  hil->add_option("--spec", spec_path, "Spec file in the algebra DSL")->required();
  hil->add_option("--max-degree", max_degree, "Truncation degree")->required();
  hil->add_flag("--cumulative", cumulative_flag, "Emit cumulative ranks");
  common(hil, {"csv", "json"});

  PresetFlags pf;
  auto* pre = app.add_subcommand("preset", "Hilbert series of a named algebra");
  add_preset_flags(pre, pf);
  pre->get_option("--name")->required();
  pre->add_option("--max-degree", max_degree, "Truncation degree");
  pre->add_flag("--cumulative", cumulative_flag, "Emit cumulative ranks");
  common(pre, {"csv", "json", "dsl"});

  std::int64_t tp = 2;
  std::int64_t tn = 0;
  std::string curve = "linear";
  auto* tor = app.add_subcommand("torsion", "Stable torsion-exponent bound in one stem");
  tor->add_option("--p", tp, "Prime");
  tor->add_option("--n", tn, "Stem")->required();
  tor->add_option("--curve", curve, "linear, sqrt or table:<path>");
  common(tor, {"csv", "json"});

  std::int64_t ep = 2;
  std::int64_t excess = 1;
  std::int64_t max_dim = 0;
  auto* ehp = app.add_subcommand("ehp", "Completely unadmissible sequences of an excess");
  ehp->add_option("--p", ep, "Prime");
  ehp->add_option("--excess", excess, "Excess n")->required();
  ehp->add_option("--max-dim", max_dim, "Largest dimension")->required();
  common(ehp, {"csv", "json"});

  PresetFlags af;
  std::string points;
  int exponent = 3;
  std::optional<std::int64_t> bracket_m;
  auto* asy = app.add_subcommand("asymptotics", "Ratio profiles and exact growth brackets");
  add_preset_flags(asy, af);
  asy->add_option("--spec", spec_path, "Spec file instead of a preset");
  asy->add_option("--points", points, "Degrees, e.g. 2^6..2^16");
  asy->add_option("--exponent", exponent, "Power k of ln(n)")->check(CLI::IsMember({2, 3}));
  asy->add_option("--bracket-m", bracket_m,
                  "Run the exact bracket for may_model, r_h_e2 or r_h_einf at scale m");
  common(asy, {"csv", "json"});

  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  auto* ver = app.add_subcommand("verify", "Property and oracle suites");
  ver->add_option("--suite", suite, "Suite name or all");
  ver->add_option("--seed", seed, "Seed for randomized checks");
  ver->add_option("--out", out.path, "Write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    const InstantiateLimits limits{.max_tuples = guards.max_enum};

    if (*hil) {
      guards.truncation(max_degree);
      const auto spec = parse_spec(read_file(spec_path));
      auto s = hilbert(spec, max_degree, limits);
      if (cumulative_flag) s = cumulative(s);
      out.emit(series_text(s, out));
    } else if (*pre) {
      const auto id = pf.id();
      const bool over_h =
          !id.h && (id.name == PresetName::r_h_e2 || id.name == PresetName::r_h_einf);
      if (out.format == "dsl") {
        if (over_h) throw validation_error("--format dsl needs --h for " + pf.name);
        out.emit(print_spec(preset(id)));
        return kOk;
      }
      if (max_degree < 0) throw validation_error("--max-degree is required");
      guards.truncation(max_degree);
      if (over_h) {
        out.emit(max_text(max_over_h(id.name, id.p, max_degree), out));
      } else {
        auto s = hilbert(preset(id), max_degree, limits);
        if (cumulative_flag) s = cumulative(s);
        out.emit(series_text(s, out));
      }
    } else if (*tor) {
      const auto c = parse_curve(curve);
      const auto r = stable_torsion_bound(tp, tn, c);
      // -1: not defined at p = 2
      const int imj = tp == 2 ? -1 : im_j_lower(tp, tn);
      std::ostringstream os;
      if (out.format == "json") {
        auto j = to_json(r);
        j["im_j_lower"] = imj >= 0 ? nlohmann::json(imj) : nlohmann::json(nullptr);
        os << j.dump() << '\n';
      } else {
        os << "p,n,g,exact_sum,closed_form,im_j_lower,curve\n"
           << r.p << ',' << r.n << ',' << r.g << ',' << r.exact_sum << ','
           << csv_double(r.closed_form) << ',' << (imj >= 0 ? std::to_string(imj) : "") << ','
           << '"' << r.curve << "\"\n";
      }
      out.emit(os.str());
    } else if (*ehp) {
      const auto seqs = enumerate_I(ep, excess, max_dim, guards.max_enum);
      std::ostringstream os;
      if (out.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& j : seqs) arr.push_back(to_json(j));
        os << nlohmann::json{{"p", ep},
                             {"excess", excess},
                             {"max_dim", max_dim},
                             {"sequences", std::move(arr)},
                             {"series", to_json(a_series(ep, excess, max_dim))}}
                  .dump()
           << '\n';
      } else {
        os << "dim,sequence\n";
        for (const auto& j : seqs) {
          os << j.dim() << ',';
          for (std::size_t k = 0; k < j.terms.size(); ++k) {
            if (k) os << ' ';
            if (ep != 2) os << j.terms[k].epsilon << ':';
            os << j.terms[k].i;
          }
          os << '\n';
        }
      }
      out.emit(os.str());
    } else if (*asy) {
      std::ostringstream os;
      if (bracket_m) {
        const auto name = preset_from_string(af.name);
        BracketModel model{};
        switch (name) {
          case PresetName::may_model: model = BracketModel::may_model; break;
          case PresetName::r_h_e2: model = BracketModel::r_h_e2; break;
          case PresetName::r_h_einf: model = BracketModel::r_h_einf; break;
          default:
            throw validation_error("--bracket-m needs --name may_model, r_h_e2 or r_h_einf");
        }
        const auto res = bracketing_check(
            af.p, *bracket_m, model, BracketOptions{.max_truncation = guards.max_truncation});
        if (out.format == "json") {
          nlohmann::json rows = nlohmann::json::array();
          for (const auto& d : res.details) {
            rows.push_back({{"check", d.name},
                            {"lhs", d.lhs},
                            {"rhs", d.rhs},
                            {"ok", d.ok},
                            {"skipped", d.skipped}});
          }
          os << nlohmann::json{{"ok", res.ok}, {"details", std::move(rows)}}.dump() << '\n';
        } else {
          os << "check,lhs,rhs,status\n";
          for (const auto& d : res.details) {
            os << '"' << d.name << "\"," << d.lhs << ',' << d.rhs << ','
               << (d.skipped ? "skipped" : d.ok ? "ok" : "violated") << '\n';
          }
        }
        out.emit(os.str());
        return res.ok ? kOk : kVerifyFailed;
      }
      if (points.empty()) throw validation_error("--points is required");
      const auto pts = parse_points(points);
      guards.truncation(pts.back());
      AlgebraSpec spec = !spec_path.empty() ? parse_spec(read_file(spec_path))
                         : !af.name.empty() ? preset(af.id())
                                            : throw validation_error("give --name or --spec");
      const auto prof = ratio_profile(spec, exponent, pts);
      if (out.format == "json") {
        os << to_json(prof).dump() << '\n';
      } else {
        write_csv(os, prof);
      }
      out.emit(os.str());
    } else if (*ver) {
      const auto rep = run_verify(suite, seed);
      std::ostringstream os;
      rep.write(os);
      out.emit(os.str());
      return rep.ok() ? kOk : kVerifyFailed;
    }
  } catch (const resource_error& e) {
    std::cerr << "stemsize: resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "stemsize: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
