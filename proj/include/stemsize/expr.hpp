// SPDX-License-Identifier: Apache-2.0
//
// Integer degree expressions over literals, the prime p and bound index
// variables. Evaluation is exact (GMP); printing is canonical and re-parses
// to the same tree.

#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>

#include "stemsize/error.hpp"
#include "stemsize/series.hpp"

namespace stemsize {

/// Values for the free symbols of an expression.
struct Bindings {
  std::int64_t p = 2;
  std::span<const std::string> names;
  std::span<const std::int64_t> values;
};

class DegreeExpr {
 public:
  enum class Op { literal, prime, variable, add, sub, mul, pow, min, binom };

  /// Default-constructs the literal 1, the default multiplicity.
  DegreeExpr() : DegreeExpr(literal(1)) {}

  static DegreeExpr literal(std::int64_t value) {
    if (value < 0) {
      throw validation_error("degree expressions have no negative literals");
    }
    auto n = std::make_shared<Node>();
    n->op = Op::literal;
    n->value = value;
    return DegreeExpr(std::move(n));
  }
  static DegreeExpr prime() {
    auto n = std::make_shared<Node>();
    n->op = Op::prime;
    return DegreeExpr(std::move(n));
  }
  static DegreeExpr variable(std::string name) {
    auto n = std::make_shared<Node>();
    n->op = Op::variable;
    n->name = std::move(name);
    return DegreeExpr(std::move(n));
  }
  static DegreeExpr binary(Op op, DegreeExpr lhs, DegreeExpr rhs) {
    if (op == Op::literal || op == Op::prime || op == Op::variable) {
      throw validation_error("binary() needs an operator");
    }
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(lhs.node_);
    n->rhs = std::move(rhs.node_);
    return DegreeExpr(std::move(n));
  }

  Op op() const noexcept { return node_->op; }

  bigint eval(const Bindings& env) const { return eval(*node_, env); }

  /// Variables referenced anywhere in the tree.
  std::set<std::string> variables() const {
    std::set<std::string> out;
    collect(*node_, out);
    return out;
  }

  std::string to_string() const { return print(*node_); }

  friend bool operator==(const DegreeExpr& a, const DegreeExpr& b) {
    return same(*a.node_, *b.node_);
  }

 private:
  struct Node {
    Op op = Op::literal;
    std::int64_t value = 0;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit DegreeExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  // Exponents past this are certainly runaway degree formulas.
  static constexpr unsigned long kMaxExponent = 1UL << 16;

  static bigint eval(const Node& n, const Bindings& env) {
    switch (n.op) {
      case Op::literal: return bigint(static_cast<long>(n.value));
      case Op::prime: return bigint(static_cast<long>(env.p));
      case Op::variable:
        for (std::size_t i = 0; i < env.names.size(); ++i) {
          if (env.names[i] == n.name) {
            return bigint(static_cast<long>(env.values[i]));
          }
        }
        throw validation_error("unbound variable '" + n.name + "'");
      case Op::add: return eval(*n.lhs, env) + eval(*n.rhs, env);
      case Op::sub: return eval(*n.lhs, env) - eval(*n.rhs, env);
      case Op::mul: return eval(*n.lhs, env) * eval(*n.rhs, env);
      case Op::min: {
        bigint a = eval(*n.lhs, env);
        bigint b = eval(*n.rhs, env);
        return a < b ? a : b;
      }
      case Op::pow: {
        const bigint base = eval(*n.lhs, env);
        const bigint e = eval(*n.rhs, env);
        if (sgn(e) < 0) {
          throw validation_error("negative exponent in " + print(n));
        }
        if (e > kMaxExponent) {
          throw validation_error("exponent too large in " + print(n));
        }
        bigint r;
        mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e.get_ui());
        return r;
      }
      case Op::binom: {
        const bigint top = eval(*n.lhs, env);
        const bigint k = eval(*n.rhs, env);
        if (sgn(k) < 0 || k > top) return 0;
        if (!k.fits_ulong_p()) throw validation_error("binom argument too large");
        bigint r;
        mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k.get_ui());
        return r;
      }
    }
    return 0;
  }

  static void collect(const Node& n, std::set<std::string>& out) {
    if (n.op == Op::variable) out.insert(n.name);
    if (n.lhs) collect(*n.lhs, out);
    if (n.rhs) collect(*n.rhs, out);
  }

  static bool same(const Node& a, const Node& b) {
    if (a.op != b.op) return false;
    switch (a.op) {
      case Op::literal: return a.value == b.value;
      case Op::prime: return true;
      case Op::variable: return a.name == b.name;
      default: return same(*a.lhs, *b.lhs) && same(*a.rhs, *b.rhs);
    }
  }

  // 1: + -, 2: *, 3: ^, 4: atoms and calls.
  static int precedence(const Node& n) {
    switch (n.op) {
      case Op::add:
      case Op::sub: return 1;
      case Op::mul: return 2;
      case Op::pow: return 3;
      default: return 4;
    }
  }

  static std::string wrap(const Node& n, bool parens) {
    return parens ? "(" + print(n) + ")" : print(n);
  }

  static std::string print(const Node& n) {
    switch (n.op) {
      case Op::literal: return std::to_string(n.value);
      case Op::prime: return "p";
      case Op::variable: return n.name;
      case Op::add:
      case Op::sub:
        return print(*n.lhs) + (n.op == Op::add ? " + " : " - ") +
               wrap(*n.rhs, precedence(*n.rhs) <= 1);
      case Op::mul:
        return wrap(*n.lhs, precedence(*n.lhs) < 2) + "*" +
               wrap(*n.rhs, precedence(*n.rhs) <= 2);
      case Op::pow:
        return wrap(*n.lhs, precedence(*n.lhs) < 4) + "^" +
               wrap(*n.rhs, precedence(*n.rhs) < 4);
      case Op::min: return "min(" + print(*n.lhs) + ", " + print(*n.rhs) + ")";
      case Op::binom:
        return "binom(" + print(*n.lhs) + ", " + print(*n.rhs) + ")";
    }
    return {};
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace stemsize
