#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivfact/integer.hpp"

namespace ivfact {

/// Dense univariate polynomial over Z. coeffs()[k] is the coefficient of X^k;
/// the highest stored coefficient is nonzero, and the zero polynomial has no
/// coefficients at all.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Poly constant(const Integer& c) { return Poly(std::vector<Integer>{c}); }
  static Poly x() { return Poly{0, 1}; }
  /// a*X + b
  static Poly linear(const Integer& a, const Integer& b) { return Poly(std::vector<Integer>{b, a}); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t k) const { return coeffs_[k]; }
  Integer leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }

  Integer eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Value at x reduced to [0, m).
  std::uint64_t eval_mod(std::uint64_t x, std::uint64_t m) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * x + *it) % m;
    return mod(acc, m);
  }

  Poly derivative() const {
    std::vector<Integer> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * k);
    return Poly(std::move(d));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r[k] += b.coeffs_[k];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(r));
  }

  friend Poly operator*(const Integer& c, const Poly& a) { return Poly::constant(c) * a; }

  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }

  Poly pow(unsigned e) const {
    Poly r = Poly::constant(1);
    for (unsigned k = 0; k < e; ++k) r *= *this;
    return r;
  }

  /// Divide every coefficient by c; c must divide all of them.
  Poly divide_exact(const Integer& c) const {
    std::vector<Integer> r = coeffs_;
    for (auto& v : r) v /= c;
    return Poly(std::move(r));
  }

  /// Quotient q with a == q*b over Z, or nullopt when b does not divide a in Z[X].
  static std::optional<Poly> exact_quotient(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Poly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Integer> rem = a.coeffs_;
    std::vector<Integer> q(a.coeffs_.size() - b.coeffs_.size() + 1);
    const Integer& lb = b.coeffs_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const Integer& top = rem[k + b.degree()];
      if (top % lb != 0) return std::nullopt;
      Integer c = top / lb;
      q[k] = c;
      if (c != 0)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[k + j] -= c * b.coeffs_[j];
    }
    for (const auto& r : rem)
      if (r != 0) return std::nullopt;
    return Poly(std::move(q));
  }

  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Canonical order: by degree, then coefficient sequence from the leading term down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (int k = a.degree(); k >= 0; --k) {
      if (auto c = compare(a.coeffs_[k], b.coeffs_[k]); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  /// ASCII rendering, e.g. "x^2 - 3*x + 2".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Integer& c = coeffs_[k];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Integer a = neg ? Integer(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (k == 0) {
        out += a.str();
      } else {
        if (a != 1) out += a.str() + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline Integer eval(const Poly& g, const Integer& n) { return g.eval(n); }

inline Poly product(std::span<const Poly> polys) {
  Poly r = Poly::constant(1);
  for (const auto& p : polys) r *= p;
  return r;
}

/// gcd of the coefficients; 0 for the zero polynomial.
inline Integer content(const Poly& g) {
  Integer c = 0;
  for (const auto& a : g.coeffs()) {
    c = gcd(c, a);
    if (c == 1) break;
  }
  return c;
}

inline bool is_primitive(const Poly& g) { return content(g) == 1; }

/// gcd{g(n) : n in Z}. The values at 0..deg g determine it: g is an integer
/// combination of the binomials C(X,k), k <= deg g, whose coefficients are the
/// forward differences at 0.
inline Integer fixed_divisor(const Poly& g) {
  if (g.is_zero()) return 0;
  Integer d = 0;
  for (int n = 0; n <= g.degree(); ++n) {
    d = gcd(d, g.eval(n));
    if (d == 1) break;
  }
  return d;
}

/// Fixed divisor of a product, evaluating each factor separately.
inline Integer fixed_divisor_of_product(std::span<const Poly> factors) {
  int deg = 0;
  for (const auto& f : factors) {
    if (f.is_zero()) return 0;
    deg += f.degree();
  }
  Integer d = 0;
  for (int n = 0; n <= deg; ++n) {
    Integer v = 1;
    for (const auto& f : factors) v *= f.eval(n);
    d = gcd(d, v);
    if (d == 1) break;
  }
  return d;
}

}  // namespace ivfact
