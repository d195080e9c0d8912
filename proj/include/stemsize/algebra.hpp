// SPDX-License-Identifier: Apache-2.0
//
// Hilbert series of free graded-commutative algebras described by an
// AlgebraSpec, a brute-force monomial counter to check them against, and the
// tensor containment bracket
//
//   (A^1 (x) ... (x) A^h)_{<=n}  c  A^1_{<=n} (x) ... (x) A^h_{<=n}
//                                c  (A^1 (x) ... (x) A^h)_{<=hn}.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "stemsize/algebra_spec.hpp"
#include "stemsize/dsl.hpp"
#include "stemsize/error.hpp"
#include "stemsize/series.hpp"

namespace stemsize {

/// One instantiated generator (with its multiplicity).
struct Generator {
  GeneratorKind kind = GeneratorKind::polynomial();
  std::int64_t degree = 0;
  std::int64_t multiplicity = 1;
  std::size_t family = 0;
  std::vector<std::int64_t> indices;

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct InstantiateLimits {
  /// Index tuples evaluated per family before giving up.
  std::uint64_t max_tuples = 10'000'000;
};

namespace detail {

class FamilyWalker {
 public:
  FamilyWalker(const AlgebraSpec& spec, std::size_t family, std::int64_t n,
               const InstantiateLimits& limits, std::vector<Generator>& out)
      : spec_(spec),
        fam_(spec.families()[family]),
        family_(family),
        n_(n),
        limits_(limits),
        out_(out) {
    for (const auto& r : fam_.ranges) names_.push_back(r.name);
    values_.resize(names_.size());
  }

  void run() { walk(0); }

 private:
  std::string where() const {
    return "family " + std::to_string(family_ + 1) + " ('" +
           print_family(fam_) + "')";
  }

  // Returns the smallest degree seen in the subtree (nullopt if empty).
  std::optional<bigint> walk(std::size_t level) {
    if (level == names_.size()) return leaf();
    const IndexRange& r = fam_.ranges[level];
    std::optional<bigint> lowest;
    if (r.bounded()) {
      for (std::int64_t v = r.lower; v <= *r.upper; ++v) {
        values_[level] = v;
        auto m = walk(level + 1);
        if (m && (!lowest || *m < *lowest)) lowest = std::move(m);
      }
      return lowest;
    }
    // Unbounded index: walk upward while the subtree minimum, which must be
    // strictly increasing, stays within the truncation.
    std::optional<bigint> prev;
    for (std::int64_t v = r.lower;; ++v) {
      values_[level] = v;
      auto m = walk(level + 1);
      if (!m) break;
      if (prev && *m <= *prev) {
        throw validation_error(where() + ": degree is not strictly increasing in '" +
                               r.name + "' at " + r.name + " = " +
                               std::to_string(v));
      }
      if (!lowest || *m < *lowest) lowest = m;
      if (*m > n_) break;
      prev = std::move(m);
    }
    return lowest;
  }

  bigint leaf() {
    if (++visited_ > limits_.max_tuples) {
      throw resource_error(where() + ": more than " +
                           std::to_string(limits_.max_tuples) +
                           " index tuples; raise the enumeration limit");
    }
    const Bindings env{spec_.p(), names_, values_};
    bigint deg = fam_.degree.eval(env);
    const bigint mult = fam_.multiplicity.eval(env);
    if (sgn(mult) < 0) {
      throw validation_error(where() + ": negative multiplicity " +
                             mult.get_str());
    }
    if (sgn(mult) > 0 && sgn(deg) <= 0) {
      throw validation_error(where() + ": generator in non-positive degree " +
                             deg.get_str());
    }
    if (sgn(mult) > 0 && deg <= n_) {
      if (!mult.fits_slong_p()) {
        throw resource_error(where() + ": multiplicity too large");
      }
      out_.push_back(Generator{fam_.kind, deg.get_si(), mult.get_si(), family_,
                               values_});
    }
    return deg;
  }

  const AlgebraSpec& spec_;
  const GeneratorFamily& fam_;
  std::size_t family_;
  std::int64_t n_;
  const InstantiateLimits& limits_;
  std::vector<Generator>& out_;
  std::vector<std::string> names_;
  std::vector<std::int64_t> values_;
  std::uint64_t visited_ = 0;
};

}  // namespace detail

/// Every generator of degree <= n, ordered by degree, then family, then index
/// tuple.
inline std::vector<Generator> instantiate(const AlgebraSpec& spec, std::int64_t n,
                                          const InstantiateLimits& limits = {}) {
  std::vector<Generator> out;
  for (std::size_t f = 0; f < spec.families().size(); ++f) {
    detail::FamilyWalker(spec, f, n, limits, out).run();
  }
  std::sort(out.begin(), out.end(), [](const Generator& a, const Generator& b) {
    return std::tie(a.degree, a.family, a.indices) <
           std::tie(b.degree, b.family, b.indices);
  });
  return out;
}

/// Hilbert series through degree n: the fold of one generator factor at a
/// time into the unit series.
inline TruncatedSeries hilbert(const AlgebraSpec& spec, std::int64_t n,
                               const InstantiateLimits& limits = {}) {
  if (n < 0) throw validation_error("truncation must be nonnegative");
  std::vector<bigint> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (const auto& g : instantiate(spec, n, limits)) {
    for (std::int64_t k = 0; k < g.multiplicity; ++k) {
      detail::apply_factor(c, g.kind, g.degree);
    }
  }
  return TruncatedSeries(std::move(c));
}

/// Cumulative ranks: coefficient n is the rank through degree n.
inline TruncatedSeries hilbert_cumulative(const AlgebraSpec& spec, std::int64_t n,
                                          const InstantiateLimits& limits = {}) {
  return cumulative(hilbert(spec, n, limits));
}

inline constexpr std::int64_t kOracleMaxDegree = 60;

/// Counts monomials degree by degree by explicit enumeration of exponent
/// vectors, without any series arithmetic.
inline TruncatedSeries oracle_hilbert(const AlgebraSpec& spec, std::int64_t n,
                                      std::uint64_t max_monomials = 200'000'000) {
  if (n < 0) throw validation_error("truncation must be nonnegative");
  if (n > kOracleMaxDegree) {
    throw resource_error("oracle_hilbert enumerates monomials and is limited to "
                         "degree " + std::to_string(kOracleMaxDegree));
  }
  struct Var {
    std::int64_t degree;
    std::int64_t cap;
  };
  std::vector<Var> vars;
  for (const auto& g : instantiate(spec, n)) {
    for (std::int64_t k = 0; k < g.multiplicity; ++k) {
      vars.push_back({g.degree, g.kind.max_exponent(g.degree, n)});
    }
  }
  // instantiate() sorts by degree, so once a variable does not fit, none of
  // the later ones do.
  std::vector<std::uint64_t> count(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t seen = 0;
  auto visit = [&](auto&& self, std::size_t i, std::int64_t deg) -> void {
    if (i == vars.size() || deg + vars[i].degree > n) {
      ++count[static_cast<std::size_t>(deg)];
      if (++seen > max_monomials) {
        throw resource_error("oracle_hilbert: more than " +
                             std::to_string(max_monomials) + " monomials");
      }
      return;
    }
    for (std::int64_t e = 0; e <= vars[i].cap && deg + e * vars[i].degree <= n; ++e) {
      self(self, i + 1, deg + e * vars[i].degree);
    }
  };
  visit(visit, 0, 0);
  std::vector<bigint> c;
  c.reserve(count.size());
  for (auto x : count) c.emplace_back(static_cast<unsigned long>(x));
  return TruncatedSeries(std::move(c));
}

struct TensorBracket {
  bigint lower;         // prod_i cumrank(A^i, n_i)
  bigint lower_target;  // cumrank(tensor, sum_i n_i), must be >= lower
  bigint middle;        // cumrank(tensor, n) with n = max_i n_i
  bigint upper;         // prod_i cumrank(A^i, n), must be >= middle
  bool ok = false;
};

inline TensorBracket tensor_bracket(std::span<const AlgebraSpec> factors,
                                    std::span<const std::int64_t> budgets) {
  if (factors.empty()) throw validation_error("tensor_bracket needs a factor");
  if (factors.size() != budgets.size()) {
    throw validation_error("tensor_bracket: one budget per factor");
  }
  std::int64_t n = 0;
  std::int64_t total = 0;
  for (auto b : budgets) {
    if (b < 0) throw validation_error("tensor_bracket: negative budget");
    n = std::max(n, b);
    total += b;
  }
  AlgebraSpec whole = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) whole = tensor(whole, factors[i]);

  TensorBracket out;
  out.lower = 1;
  out.upper = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto cum = hilbert_cumulative(factors[i], n);
    out.lower *= cum[static_cast<std::size_t>(budgets[i])];
    out.upper *= cum[static_cast<std::size_t>(n)];
  }
  const auto cum_whole = hilbert_cumulative(whole, total);
  out.lower_target = cum_whole[static_cast<std::size_t>(total)];
  out.middle = cum_whole[static_cast<std::size_t>(n)];
  out.ok = out.lower <= out.lower_target && out.middle <= out.upper;
  return out;
}

}  // namespace stemsize
