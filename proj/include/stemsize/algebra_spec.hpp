// SPDX-License-Identifier: Apache-2.0
//
// Symbolic description of a graded commutative algebra: a prime plus a list
// of indexed generator families.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stemsize/arith.hpp"
#include "stemsize/expr.hpp"
#include "stemsize/series.hpp"

namespace stemsize {

struct IndexRange {
  std::string name;
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;  // nullopt: unbounded

  bool bounded() const noexcept { return upper.has_value(); }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// One line of the DSL: generators of a single kind, one per index tuple,
/// at degree `degree`, each repeated `multiplicity` times.
struct GeneratorFamily {
  GeneratorKind kind = GeneratorKind::polynomial();
  DegreeExpr degree;
  DegreeExpr multiplicity = DegreeExpr::literal(1);
  std::vector<IndexRange> ranges;

  friend bool operator==(const GeneratorFamily&,
                         const GeneratorFamily&) = default;
};

class AlgebraSpec {
 public:
  AlgebraSpec(std::int64_t p, std::vector<GeneratorFamily> families,
              std::string label = {})
      : p_(p), families_(std::move(families)), label_(std::move(label)) {
    require_prime(p_);
    for (std::size_t f = 0; f < families_.size(); ++f) check_family(f);
  }

  std::int64_t p() const noexcept { return p_; }
  const std::vector<GeneratorFamily>& families() const noexcept {
    return families_;
  }
  const std::string& label() const noexcept { return label_; }

  /// Union of the families of both specs (the tensor product).
  friend AlgebraSpec tensor(const AlgebraSpec& a, const AlgebraSpec& b) {
    if (a.p_ != b.p_) {
      throw validation_error("cannot tensor algebras over different primes (" +
                             std::to_string(a.p_) + " vs " +
                             std::to_string(b.p_) + ")");
    }
    std::vector<GeneratorFamily> fams = a.families_;
    fams.insert(fams.end(), b.families_.begin(), b.families_.end());
    std::string label = a.label_.empty() || b.label_.empty()
                            ? a.label_ + b.label_
                            : a.label_ + " (x) " + b.label_;
    return AlgebraSpec(a.p_, std::move(fams), std::move(label));
  }

  /// Equality ignores the label.
  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.p_ == b.p_ && a.families_ == b.families_;
  }

 private:
  void check_family(std::size_t f) const {
    const auto& fam = families_[f];
    std::set<std::string> bound;
    for (const auto& r : fam.ranges) {
      if (r.name == "p") {
        throw validation_error("family " + std::to_string(f + 1) +
                               ": 'p' is reserved for the prime");
      }
      if (!bound.insert(r.name).second) {
        throw validation_error("family " + std::to_string(f + 1) +
                               ": index '" + r.name + "' bound twice");
      }
    }
    for (const auto* e : {&fam.degree, &fam.multiplicity}) {
      for (const auto& v : e->variables()) {
        if (!bound.count(v)) {
          throw validation_error("family " + std::to_string(f + 1) +
                                 ": unknown identifier '" + v + "'");
        }
      }
    }
  }

  std::int64_t p_;
  std::vector<GeneratorFamily> families_;
  std::string label_;
};

}  // namespace stemsize
