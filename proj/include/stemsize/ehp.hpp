// SPDX-License-Identifier: Apache-2.0
//
// Completely unadmissible sequences I(n), their generating series A(n;t),
// the EHP recurrences they satisfy, the admissible-monomial count P(A;t), and
// the resulting bounds on unstable Ext and unstable homotopy ranks.
//
// p = 2:  I(n) = {(i_1..i_k) : i_k >= n, i_s > 2 i_{s+1}},
//         dim = sum (i_s - 1).
// p odd:  I(n) = {((e_1,i_1)..(e_k,i_k)) : 2 i_k >= n, i_s > p i_{s+1} - e_{s+1}},
//         dim = sum (2(p-1) i_s - e_s - 1).

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "stemsize/algebra.hpp"
#include "stemsize/arith.hpp"
#include "stemsize/error.hpp"
#include "stemsize/presets.hpp"
#include "stemsize/series.hpp"

namespace stemsize {

struct CUTerm {
  int epsilon = 0;  // always 0 at p = 2
  std::int64_t i = 0;

  friend bool operator==(const CUTerm&, const CUTerm&) = default;
  friend bool operator<(const CUTerm& a, const CUTerm& b) {
    return std::tie(a.i, a.epsilon) < std::tie(b.i, b.epsilon);
  }
};

/// A completely unadmissible sequence of excess `excess`.
struct CUSeq {
  std::int64_t p = 2;
  std::int64_t excess = 1;
  std::vector<CUTerm> terms;

  std::int64_t dim() const {
    std::int64_t d = 0;
    for (const auto& t : terms) d += term_dim(p, t);
    return d;
  }

  /// Checks the defining inequalities of I(excess).
  bool valid() const {
    if (terms.empty()) return true;
    for (const auto& t : terms) {
      if (t.epsilon != 0 && (p == 2 || t.epsilon != 1)) return false;
    }
    const auto& last = terms.back();
    if (p == 2 ? last.i < excess : 2 * last.i < excess) return false;
    for (std::size_t s = 0; s + 1 < terms.size(); ++s) {
      const auto& nxt = terms[s + 1];
      const std::int64_t floor_excl = p == 2 ? 2 * nxt.i : p * nxt.i - nxt.epsilon;
      if (terms[s].i <= floor_excl) return false;
    }
    return true;
  }

  static std::int64_t term_dim(std::int64_t p, const CUTerm& t) {
    return p == 2 ? t.i - 1 : 2 * (p - 1) * t.i - t.epsilon - 1;
  }

  friend bool operator==(const CUSeq&, const CUSeq&) = default;
};

namespace detail {

inline void extend_cu(std::int64_t p, std::int64_t budget, std::vector<CUTerm>& rev,
                      std::vector<std::vector<CUTerm>>& out, std::size_t max_count) {
  // rev holds the sequence back to front; rev.back() is the current first term.
  if (out.size() + 1 >= max_count) {
    throw resource_error("enumerate_I: more than " + std::to_string(max_count) +
                         " sequences; raise the enumeration limit");
  }
  out.push_back(rev);
  const CUTerm& first = rev.back();
  const std::int64_t above = p == 2 ? 2 * first.i : p * first.i - first.epsilon;
  const int eps_max = p == 2 ? 0 : 1;
  for (std::int64_t i = above + 1;; ++i) {
    bool any = false;
    for (int e = 0; e <= eps_max; ++e) {
      const CUTerm t{e, i};
      const std::int64_t d = CUSeq::term_dim(p, t);
      if (d > budget) continue;
      any = true;
      rev.push_back(t);
      extend_cu(p, budget - d, rev, out, max_count);
      rev.pop_back();
    }
    if (!any) break;
  }
}

}  // namespace detail

/// Every J in I(n) with dim(J) <= max_dim, in lexicographic order of the
/// (i_s, e_s) terms.
inline std::vector<CUSeq> enumerate_I(std::int64_t p, std::int64_t n, std::int64_t max_dim,
                                      std::size_t max_count = 50'000'000) {
  require_prime(p);
  if (n < 1) throw validation_error("enumerate_I needs excess n >= 1");
  if (max_dim < 0) throw validation_error("enumerate_I needs max_dim >= 0");
  std::vector<std::vector<CUTerm>> rev_seqs;
  const std::int64_t i0 = p == 2 ? n : (n + 1) / 2;
  const int eps_max = p == 2 ? 0 : 1;
  std::vector<CUTerm> rev;
  for (std::int64_t i = i0;; ++i) {
    bool any = false;
    for (int e = 0; e <= eps_max; ++e) {
      const CUTerm t{e, i};
      const std::int64_t d = CUSeq::term_dim(p, t);
      if (d > max_dim) continue;
      any = true;
      rev.push_back(t);
      detail::extend_cu(p, max_dim - d, rev, rev_seqs, max_count);
      rev.pop_back();
    }
    if (!any) break;
  }
  std::vector<CUSeq> out;
  out.reserve(rev_seqs.size() + 1);
  out.push_back(CUSeq{p, n, {}});
  for (auto& r : rev_seqs) {
    std::reverse(r.begin(), r.end());
    out.push_back(CUSeq{p, n, std::move(r)});
  }
  std::sort(out.begin(), out.end(), [](const CUSeq& a, const CUSeq& b) {
    return a.terms < b.terms;
  });
  return out;
}

inline nlohmann::json to_json(const CUSeq& j) {
  nlohmann::json seq = nlohmann::json::array();
  for (const auto& t : j.terms) {
    if (j.p == 2) {
      seq.push_back(t.i);
    } else {
      seq.push_back({t.epsilon, t.i});
    }
  }
  return {{"sequence", std::move(seq)}, {"dim", j.dim()}};
}

/// A(n;t) = sum over J in I(n) of t^dim(J), through degree N.
inline TruncatedSeries a_series(std::int64_t p, std::int64_t n, std::int64_t N) {
  if (N < 0) throw validation_error("truncation must be nonnegative");
  std::vector<bigint> c(static_cast<std::size_t>(N) + 1, 0);
  for (const auto& j : enumerate_I(p, n, N)) ++c[static_cast<std::size_t>(j.dim())];
  return TruncatedSeries(std::move(c));
}

/// Checks the EHP recurrence for index n through degree N:
///   p = 2:  A(n) = A(n+1) + A(2n+1) t^{n-1}
///   p odd:  A(2n-1) = A(2n)  and
///           A(2n) = A(2n+1) + A(2pn) t^{2(p-1)n-2} + A(2pn+1) t^{2(p-1)n-1}
inline bool verify_ehp_recurrence(std::int64_t p, std::int64_t n, std::int64_t N) {
  require_prime(p);
  if (n < 1) throw validation_error("verify_ehp_recurrence needs n >= 1");
  if (p == 2) {
    const auto rhs = add(a_series(2, n + 1, N),
                         shift(a_series(2, 2 * n + 1, N), static_cast<std::size_t>(n - 1)));
    return a_series(2, n, N) == rhs;
  }
  const auto even = a_series(p, 2 * n, N);
  if (!(a_series(p, 2 * n - 1, N) == even)) return false;
  const auto w = 2 * (p - 1) * n;
  auto rhs = add(a_series(p, 2 * n + 1, N),
                 shift(a_series(p, 2 * p * n, N), static_cast<std::size_t>(w - 2)));
  rhs = add(rhs, shift(a_series(p, 2 * p * n + 1, N), static_cast<std::size_t>(w - 1)));
  return even == rhs;
}

/// P(A;t) counted on the admissible basis. p = 2: Sq^{i_1}..Sq^{i_k} with
/// i_s >= 2 i_{s+1}, graded by sum i_s. p odd: b^{e_0} P^{i_1} b^{e_1} ..
/// P^{i_k} b^{e_k} with i_s >= p i_{s+1} + e_s, graded by
/// sum 2(p-1) i_s + sum e_s.
inline TruncatedSeries admissible_series(std::int64_t p, std::int64_t N) {
  require_prime(p);
  if (N < 0) throw validation_error("truncation must be nonnegative");
  const auto n = static_cast<std::size_t>(N);
  const std::size_t step = p == 2 ? 1 : static_cast<std::size_t>(2 * (p - 1));
  const std::size_t jmax = n / step;  // largest usable leading index
  // tails[j][d]: admissible tails whose leading operation has index j.
  // prefix[j][d] = sum_{1 <= j' <= j} tails[j'][d].
  std::vector<std::vector<bigint>> tails(jmax + 1, std::vector<bigint>(n + 1, 0));
  std::vector<std::vector<bigint>> prefix(jmax + 1, std::vector<bigint>(n + 1, 0));
  for (std::size_t j = 1; j <= jmax; ++j) {
    const std::size_t head = j * step;
    auto& t = tails[j];
    if (p == 2) {
      t[head] += 1;
      const std::size_t below = j / 2;  // next index j' <= j/2
      if (below >= 1) {
        for (std::size_t d = head; d <= n; ++d) t[d] += prefix[below][d - head];
      }
    } else {
      const auto pp = static_cast<std::size_t>(p);
      for (std::size_t e = 0; e <= 1; ++e) {
        if (head + e > n) continue;
        t[head + e] += 1;
        // next index j' with j >= p j' + e
        if (j < e) continue;
        const std::size_t below = (j - e) / pp;
        if (below < 1) continue;
        for (std::size_t d = head + e; d <= n; ++d) t[d] += prefix[below][d - head - e];
      }
    }
    for (std::size_t d = 0; d <= n; ++d) prefix[j][d] = prefix[j - 1][d] + t[d];
  }
  std::vector<bigint> c(n + 1, 0);
  const std::size_t lead_max = p == 2 ? 0 : 1;  // optional leading Bockstein
  for (std::size_t e = 0; e <= lead_max && e <= n; ++e) {
    c[e] += 1;
    for (std::size_t d = e; d <= n; ++d) c[d] += prefix[jmax][d - e];
  }
  return TruncatedSeries(std::move(c));
}

/// Default upper-bound series for varpi_A(t): the May E1-page with q_0
/// dropped.
inline TruncatedSeries default_varpi_A(std::int64_t p, std::int64_t N) {
  return hilbert(preset(PresetId{PresetName::may_e1, p, std::nullopt, true}), N);
}

/// P(A;t) varpi_A(t) P(M;t): bound for the unstable Ext rank series of a
/// connected module M.
inline TruncatedSeries unstable_ext_bound(std::int64_t p, const TruncatedSeries& module,
                                          const TruncatedSeries& varpi_a,
                                          std::int64_t N) {
  return mul(mul(admissible_series(p, N), varpi_a), module);
}

/// 2 P(A;t) varpi_A(t) h(Omega X;t); coefficient n bounds rank_p pi_{n+1}(X).
inline TruncatedSeries unstable_rank_bound(std::int64_t p,
                                           const TruncatedSeries& loops_homology,
                                           const TruncatedSeries& varpi_a,
                                           std::int64_t N) {
  if (loops_homology[0] != 1) {
    throw validation_error("loop space homology must have rank 1 in degree 0");
  }
  return scale(unstable_ext_bound(p, loops_homology, varpi_a, N), 2);
}

}  // namespace stemsize
