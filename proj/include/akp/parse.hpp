#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "akp/base_field.hpp"
#include "akp/error.hpp"
#include "akp/poly.hpp"

namespace akp {

namespace detail {

// Recursive-descent parser for
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := factor { ('*'|'/') factor }
//   factor  := primary [ '^' integer ]
//   primary := integer | 'x' | <field variable> | '(' expr ')'
// evaluated directly into K[x]. Division is allowed by nonzero constants only,
// which covers fractions a/b and ratios of t-polynomials.
template <ValuedField F>
class ExpressionParser {
 public:
  ExpressionParser(const F& field, std::string_view text, bool allow_x)
      : field_(field), text_(text), allow_x_(allow_x) {}

  Poly<F> parse() {
    skip_blanks();
    if (at_end()) fail("empty input");
    Poly<F> result = expr();
    skip_blanks();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  static constexpr std::size_t kMaxExponent = 4096;

  Poly<F> expr() {
    skip_blanks();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Poly<F> acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_blanks();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly<F> rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Poly<F> term() {
    Poly<F> acc = factor();
    for (;;) {
      skip_blanks();
      char c = peek();
      if (c != '*' && c != '/') break;
      std::size_t op_pos = pos_;
      ++pos_;
      Poly<F> rhs = factor();
      if (c == '*') {
        acc = acc * rhs;
        continue;
      }
      if (rhs.is_zero()) fail_at("division by zero", op_pos);
      if (!rhs.is_constant()) fail_at("division by a non-constant polynomial", op_pos);
      acc = acc.scaled(field_.inverse(rhs.leading()));
    }
    return acc;
  }

  Poly<F> factor() {
    Poly<F> base = primary();
    skip_blanks();
    if (peek() != '^') return base;
    ++pos_;
    skip_blanks();
    std::size_t start = pos_;
    mpz_class e = integer();
    if (e > static_cast<unsigned long>(kMaxExponent)) fail_at("exponent too large", start);
    return base.pow(e.get_ui());
  }

  Poly<F> primary() {
    skip_blanks();
    if (at_end()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly<F>::constant(field_, field_.from_integer(integer()));
    if (c == '(') {
      ++pos_;
      Poly<F> inner = expr();
      skip_blanks();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      if (!allow_x_) fail("the polynomial variable x is not allowed in a field element");
      ++pos_;
      return Poly<F>::x(field_);
    }
    if (field_.variable() != '\0' && c == field_.variable()) {
      ++pos_;
      return Poly<F>::constant(field_, field_.generator());
    }
    if (static_cast<unsigned char>(c) >= 0x80) fail("non-ASCII character");
    fail(std::string("unexpected '") + c + "'");
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_blanks() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at + 1); }

  const F& field_;
  std::string_view text_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in x with coefficients in the base field's grammar,
/// e.g. "x^2 + 2", "1/2*x - 3", "(t+1)*x^2 + 1/t". Whitespace is ignored.
template <ValuedField F>
Poly<F> parse_poly(const F& field, std::string_view text) {
  return detail::ExpressionParser<F>(field, text, true).parse();
}

/// Parses an element of the base field: "-3/4", "t^2/(t+1)", "(t^2+1)/t".
template <ValuedField F>
typename F::element parse_field_elem(const F& field, std::string_view text) {
  Poly<F> p = detail::ExpressionParser<F>(field, text, false).parse();
  return p.coeff(0);
}

}  // namespace akp
