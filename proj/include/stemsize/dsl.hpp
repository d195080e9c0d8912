// SPDX-License-Identifier: Apache-2.0
//
// Line-oriented algebra DSL:
//
//   spec  := "p" "=" INT NEWLINE line*
//   line  := "gen" kind "deg" "=" expr ["mult" "=" expr] ["for" ranges] NEWLINE
//   kind  := "poly" | "ext" | "trunc(" INT ")"
//   ranges:= range ("," range)*
//   range := IDENT "=" INT ".." (INT | "inf")
//   expr  := term (("+"|"-") term)*
//   term  := pow ("*" pow)*
//   pow   := atom ["^" atom]
//   atom  := INT | "p" | IDENT | "(" expr ")" | "min(" expr "," expr ")"
//          | "binom(" expr "," expr ")"
//
// Whitespace inside a line is insignificant, blank lines are skipped and '#'
// starts a comment. print_spec() emits the normal form.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stemsize/algebra_spec.hpp"
#include "stemsize/arith.hpp"
#include "stemsize/error.hpp"
#include "stemsize/expr.hpp"

namespace stemsize {

namespace detail {

enum class Tok { integer, ident, symbol, newline, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, std::size_t c) {
    out.push_back(Token{k, std::move(text), line, c});
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '\n') {
      push(Tok::newline, "\\n", col);
      ++i;
      ++line;
      col = 1;
    } else if (ch == '#') {
      while (i < src.size() && src[i] != '\n') {
        ++i;
        ++col;
      }
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        ++i;
      }
      push(Tok::integer, std::string(src.substr(start, i - start)), col);
      col += i - start;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                src[i] == '_')) {
        ++i;
      }
      push(Tok::ident, std::string(src.substr(start, i - start)), col);
      col += i - start;
    } else if (ch == '.' && i + 1 < src.size() && src[i + 1] == '.') {
      push(Tok::symbol, "..", col);
      i += 2;
      col += 2;
    } else if (std::string_view("=+-*^(),").find(ch) != std::string_view::npos) {
      push(Tok::symbol, std::string(1, ch), col);
      ++i;
      ++col;
    } else {
      throw parse_error(line, col, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back(Token{Tok::end, "end of input", line, col});
  return out;
}

inline bool reserved(const std::string& s) {
  static const std::set<std::string> words = {
      "p", "gen", "poly", "ext", "trunc", "deg", "mult", "for", "inf", "min",
      "binom"};
  return words.count(s) > 0;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  AlgebraSpec parse() {
    skip_newlines();
    expect_ident("p");
    expect_symbol("=");
    const Token& pt = peek();
    const std::int64_t p = integer();
    if (!is_prime(p)) {
      throw parse_error(pt.line, pt.column,
                        "p = " + std::to_string(p) + " is not prime");
    }
    end_of_line();
    std::vector<GeneratorFamily> families;
    for (;;) {
      skip_newlines();
      if (peek().kind == Tok::end) break;
      families.push_back(family());
    }
    return AlgebraSpec(p, std::move(families));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw parse_error(t.line, t.column, what + ", found '" + t.text + "'");
  }

  bool at_symbol(std::string_view s) const {
    return peek().kind == Tok::symbol && peek().text == s;
  }
  bool at_ident(std::string_view s) const {
    return peek().kind == Tok::ident && peek().text == s;
  }
  void expect_symbol(std::string_view s) {
    if (!at_symbol(s)) fail(peek(), "expected '" + std::string(s) + "'");
    ++pos_;
  }
  void expect_ident(std::string_view s) {
    if (!at_ident(s)) fail(peek(), "expected '" + std::string(s) + "'");
    ++pos_;
  }
  void skip_newlines() {
    while (peek().kind == Tok::newline) ++pos_;
  }
  void end_of_line() {
    if (peek().kind == Tok::end) return;
    if (peek().kind != Tok::newline) fail(peek(), "expected end of line");
    ++pos_;
  }

  std::int64_t integer() {
    const Token& t = peek();
    if (t.kind != Tok::integer) fail(t, "expected an integer");
    std::int64_t v = 0;
    const auto res =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (res.ec != std::errc{}) {
      throw parse_error(t.line, t.column, "integer out of range: " + t.text);
    }
    ++pos_;
    return v;
  }

  GeneratorFamily family() {
    used_.clear();
    expect_ident("gen");
    GeneratorFamily fam;
    fam.kind = kind();
    expect_ident("deg");
    expect_symbol("=");
    fam.degree = expr();
    if (at_ident("mult")) {
      ++pos_;
      expect_symbol("=");
      fam.multiplicity = expr();
    }
    if (at_ident("for")) {
      ++pos_;
      fam.ranges.push_back(range());
      while (at_symbol(",")) {
        ++pos_;
        fam.ranges.push_back(range());
      }
    }
    end_of_line();
    for (const auto& [name, tok] : used_) {
      bool declared = false;
      for (const auto& r : fam.ranges) declared = declared || r.name == name;
      if (!declared) {
        throw parse_error(tok.line, tok.column,
                          "unknown identifier '" + name + "'");
      }
    }
    return fam;
  }

  GeneratorKind kind() {
    const Token& t = peek();
    if (at_ident("poly")) {
      ++pos_;
      return GeneratorKind::polynomial();
    }
    if (at_ident("ext")) {
      ++pos_;
      return GeneratorKind::exterior();
    }
    if (at_ident("trunc")) {
      ++pos_;
      expect_symbol("(");
      const Token& kt = peek();
      const std::int64_t k = integer();
      expect_symbol(")");
      if (k < 2) {
        throw parse_error(kt.line, kt.column,
                          "truncation order must be at least 2, got " +
                              std::to_string(k));
      }
      if (k > (1 << 30)) {
        throw parse_error(kt.line, kt.column, "truncation order too large");
      }
      return GeneratorKind::truncated(static_cast<int>(k));
    }
    fail(t, "expected generator kind poly, ext or trunc(k)");
  }

  IndexRange range() {
    const Token& t = peek();
    if (t.kind != Tok::ident) fail(t, "expected an index name");
    if (reserved(t.text)) fail(t, "reserved word used as index name");
    IndexRange r;
    r.name = next().text;
    expect_symbol("=");
    r.lower = integer();
    expect_symbol("..");
    if (at_ident("inf")) {
      ++pos_;
    } else {
      r.upper = integer();
    }
    return r;
  }

  DegreeExpr expr() {
    DegreeExpr lhs = term();
    while (at_symbol("+") || at_symbol("-")) {
      const auto op = next().text == "+" ? DegreeExpr::Op::add : DegreeExpr::Op::sub;
      lhs = DegreeExpr::binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  DegreeExpr term() {
    DegreeExpr lhs = power();
    while (at_symbol("*")) {
      ++pos_;
      lhs = DegreeExpr::binary(DegreeExpr::Op::mul, std::move(lhs), power());
    }
    return lhs;
  }

  DegreeExpr power() {
    DegreeExpr base = atom();
    if (at_symbol("^")) {
      ++pos_;
      return DegreeExpr::binary(DegreeExpr::Op::pow, std::move(base), atom());
    }
    return base;
  }

  DegreeExpr atom() {
    const Token& t = peek();
    if (t.kind == Tok::integer) return DegreeExpr::literal(integer());
    if (at_symbol("(")) {
      ++pos_;
      DegreeExpr e = expr();
      expect_symbol(")");
      return e;
    }
    if (t.kind == Tok::ident) {
      if (t.text == "p") {
        ++pos_;
        return DegreeExpr::prime();
      }
      if (t.text == "min" || t.text == "binom") {
        const auto op = t.text == "min" ? DegreeExpr::Op::min : DegreeExpr::Op::binom;
        ++pos_;
        expect_symbol("(");
        DegreeExpr a = expr();
        expect_symbol(",");
        DegreeExpr b = expr();
        expect_symbol(")");
        return DegreeExpr::binary(op, std::move(a), std::move(b));
      }
      if (reserved(t.text)) fail(t, "unexpected keyword in expression");
      used_.emplace_back(t.text, t);
      ++pos_;
      return DegreeExpr::variable(t.text);
    }
    fail(t, "expected an expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, Token>> used_;
};

}  // namespace detail

inline AlgebraSpec parse_spec(std::string_view text) {
  return detail::Parser(text).parse();
}

inline std::string print_range(const IndexRange& r) {
  return r.name + " = " + std::to_string(r.lower) + ".." +
         (r.upper ? std::to_string(*r.upper) : std::string("inf"));
}

inline std::string print_family(const GeneratorFamily& fam) {
  std::string out = "gen " + fam.kind.to_string() + " deg = " + fam.degree.to_string();
  if (!(fam.multiplicity == DegreeExpr::literal(1))) {
    out += " mult = " + fam.multiplicity.to_string();
  }
  for (std::size_t i = 0; i < fam.ranges.size(); ++i) {
    out += (i == 0 ? " for " : ", ") + print_range(fam.ranges[i]);
  }
  return out;
}

/// Canonical text; parse_spec(print_spec(s)) == s.
inline std::string print_spec(const AlgebraSpec& spec) {
  std::string out;
  if (!spec.label().empty()) {
    std::string label = spec.label();
    std::replace(label.begin(), label.end(), '\n', ' ');
    out += "# " + label + "\n";
  }
  out += "p = " + std::to_string(spec.p()) + "\n";
  for (const auto& fam : spec.families()) out += print_family(fam) + "\n";
  return out;
}

}  // namespace stemsize
