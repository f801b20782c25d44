#pragma once

// Recursive-descent reader for polynomial expressions in one variable.
//
//   input       := expr ('/' nat_product)?
//   expr        := '-'? term (('+' | '-') term)*
//   term        := factor ('*' factor)*
//   factor      := base ('^' nat)?
//   base        := nat | 'x' | 'X' | '(' expr ')'
//   nat_product := nat ('*' nat)* | '(' nat_product ')'
//
// Whitespace is ignored. When the numerator is a single product, its factors
// are returned separately so a known factorization survives parsing.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ivfact/error.hpp"
#include "ivfact/poly.hpp"

namespace ivfact {

struct ParsedInput {
  std::vector<Poly> factors;  // numerator pieces; their product is the numerator
  bool prefactored = false;   // true when the numerator was written as a product
  Integer denominator = 1;

  Poly numerator() const { return product(factors); }
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ParsedInput input() {
    ParsedInput out;
    skip();
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
    }
    std::vector<Poly> first = term();
    skip();
    if (peek() == '+' || peek() == '-') {
      Poly sum = product(first);
      if (negative) sum = -sum;
      sum = sum_tail(std::move(sum));
      out.factors = {std::move(sum)};
    } else {
      out.factors = std::move(first);
      if (negative) out.factors.insert(out.factors.begin(), Poly::constant(-1));
      out.prefactored = out.factors.size() > 1;
    }
    skip();
    if (peek() == '/') {
      ++pos_;
      out.denominator = nat_product();
      skip();
    }
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  Poly expr() {
    skip();
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
    }
    Poly acc = product(term());
    if (negative) acc = -acc;
    return sum_tail(std::move(acc));
  }

  Poly sum_tail(Poly acc) {
    for (;;) {
      skip();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Poly t = product(term());
      acc = c == '+' ? acc + t : acc - t;
    }
  }

  std::vector<Poly> term() {
    std::vector<Poly> out;
    factor(out);
    for (;;) {
      skip();
      if (peek() != '*') return out;
      ++pos_;
      factor(out);
    }
  }

  void factor(std::vector<Poly>& out) {
    Poly b = base();
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      const Integer e = nat();
      if (e > 1000) throw SyntaxError(at, "exponent too large");
      const auto n = e.convert_to<unsigned>();
      if (n == 0) {
        out.push_back(Poly::constant(1));
        return;
      }
      for (unsigned k = 0; k < n; ++k) out.push_back(b);
      return;
    }
    out.push_back(std::move(b));
  }

  Poly base() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(nat());
    if (c == 'x' || c == 'X') {
      ++pos_;
      return Poly::x();
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail(c == '\0' ? "expected a number, 'x' or '(' but reached the end" : "expected a number, 'x' or '('");
  }

  Integer nat() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer");
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Integer nat_product() {
    skip();
    Integer d;
    if (peek() == '(') {
      ++pos_;
      d = nat_product();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else {
      d = nat();
    }
    for (;;) {
      skip();
      if (peek() != '*') return d;
      ++pos_;
      d *= nat();
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ParsedInput parse(std::string_view text) { return detail::Parser(text).input(); }

}  // namespace ivfact
