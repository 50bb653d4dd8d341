#pragma once

// Parser for algebra expressions: sums of signed terms, each an optional
// rational coefficient times a product of powers of x1, x2, y1, y2, t1..t9.
// Exponents are written ^k and may be negative only for y1, y2 and the
// t-variables.  Whitespace is insignificant.  Example: "x1*x2 - y1^2 - 1".
//
// The parsed expression is evaluated directly in the algebra, so products
// reduce to the canonical basis as they are built.

#include "polyptych/algebra.hpp"
#include "polyptych/rational.hpp"

#include <cctype>
#include <string>

namespace polyptych {

namespace detail {

struct ExprCursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    bool neg = eat('-');
    skip_ws();
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError(start, "expected an integer");
    long long v = std::stoll(text.substr(digits, pos - digits));
    return neg ? -v : v;
  }
};

// factor := identifier ['^' integer]
inline AlgebraElement parse_factor(ExprCursor& cur) {
  std::size_t start = cur.pos;
  char base = cur.peek();
  if (base != 'x' && base != 'y' && base != 't')
    throw ParseError(start, "expected a variable (x1, x2, y1, y2, t1..t9)");
  ++cur.pos;
  if (cur.pos >= cur.text.size() || !std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
    throw ParseError(cur.pos, "expected a variable index");
  int index = cur.text[cur.pos] - '0';
  ++cur.pos;
  if ((base == 'x' || base == 'y') && index != 1 && index != 2)
    throw ParseError(start, "only x1, x2, y1, y2 exist");
  if (base == 't' && (index < 1 || index > 9))
    throw ParseError(start, "t-variables are t1..t9");

  long long exp = 1;
  if (cur.eat('^')) exp = cur.integer();

  if (base == 'x' && exp < 0)
    throw ParseError(start, "negative exponents are only allowed for y and t variables");

  if (base == 'y' && index == 2) return algebra_one();  // y2 = 1
  if (base == 'y') return algebra_monomial(monomial(0, 0, exp));
  if (base == 't') {
    std::vector<long long> t(static_cast<std::size_t>(index), 0);
    t[static_cast<std::size_t>(index - 1)] = exp;
    return algebra_monomial(monomial(0, 0, 0, std::move(t)));
  }
  // x1 or x2 with a nonnegative exponent
  if (index == 1) return algebra_monomial(monomial(exp, 0, 0));
  return algebra_monomial(monomial(0, exp, 0));
}

// term := [rational] ('*'? factor)*
inline AlgebraElement parse_term(ShearParam s, ExprCursor& cur) {
  Rational coeff(1);
  bool have_any = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    std::size_t start = cur.pos;
    long long num = cur.integer();
    if (cur.eat('/')) {
      long long den = cur.integer();
      if (den == 0) throw ParseError(start, "zero denominator");
      coeff = Rational(num, den);
    } else {
      coeff = num;
    }
    have_any = true;
  }
  AlgebraElement acc = scale(algebra_one(), coeff);
  for (;;) {
    char c = cur.peek();
    if (c == '*') {
      cur.eat('*');
      c = cur.peek();
      if (c != 'x' && c != 'y' && c != 't') throw ParseError(cur.pos, "expected a variable after '*'");
    } else if (c != 'x' && c != 'y' && c != 't') {
      break;
    }
    acc = multiply(s, acc, parse_factor(cur));
    have_any = true;
  }
  if (!have_any) throw ParseError(cur.pos, "expected a term");
  return acc;
}

}  // namespace detail

inline AlgebraElement parse_expression(ShearParam s, const std::string& text) {
  detail::ExprCursor cur{text};
  AlgebraElement acc;
  bool first = true;
  while (!cur.done()) {
    Rational sgn(1);
    if (cur.eat('-')) sgn = -1;
    else if (cur.eat('+')) sgn = 1;
    else if (!first) throw ParseError(cur.pos, "expected '+' or '-'");
    if (cur.done()) throw ParseError(cur.pos, "dangling sign");
    acc = add(acc, scale(detail::parse_term(s, cur), sgn));
    first = false;
  }
  if (first) throw ParseError(0, "empty expression");
  return acc;
}

}  // namespace polyptych
