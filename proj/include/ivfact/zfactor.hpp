#pragma once

// Factorization in Z[X] for small degrees: content, rational roots, then
// Kronecker's interpolation search for the remaining factors.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ivfact/integer.hpp"
#include "ivfact/poly.hpp"

namespace ivfact {

inline constexpr int kDefaultMaxDegree = 10;

struct ZFactor {
  Poly poly;  // primitive, irreducible, positive leading coefficient
  unsigned multiplicity = 1;

  friend bool operator==(const ZFactor&, const ZFactor&) = default;
};

struct ZFactorization {
  int sign = 1;
  std::vector<Integer> constant_primes;  // with repetition, ascending
  std::vector<ZFactor> factors;          // canonical order

  /// sign * constant_primes * prod factors^multiplicity
  Poly expand() const {
    Integer c = sign;
    for (const auto& q : constant_primes) c *= q;
    Poly r = Poly::constant(c);
    for (const auto& f : factors) r *= f.poly.pow(f.multiplicity);
    return r;
  }
};

namespace detail {

/// Normalize to a primitive polynomial with positive leading coefficient.
inline Poly primitive_part(const Poly& g) {
  Poly r = g.divide_exact(content(g));
  return r.leading() < 0 ? -r : r;
}

/// A primitive linear factor q*X - p of g, or nullopt when g has no rational root.
inline std::optional<Poly> rational_root_factor(const Poly& g) {
  if (g.degree() < 1) return std::nullopt;
  if (g[0] == 0) return Poly::x();
  const auto numerators = positive_divisors(g[0]);
  const auto denominators = positive_divisors(g.leading());
  const int n = g.degree();
  for (const auto& q : denominators) {
    for (const auto& p0 : numerators) {
      if (gcd(p0, q) != 1) continue;
      for (int s : {1, -1}) {
        const Integer p = s * p0;
        // q^n * g(p/q)
        Integer acc = 0;
        Integer pk = 1;
        std::vector<Integer> qpow(n + 1, 1);
        for (int k = 1; k <= n; ++k) qpow[k] = qpow[k - 1] * q;
        for (int k = 0; k <= n; ++k) {
          acc += g[k] * pk * qpow[n - k];
          pk *= p;
        }
        if (acc == 0) return Poly::linear(q, -p);
      }
    }
  }
  return std::nullopt;
}

/// Coefficients of the interpolating polynomial through (xs[i], ys[i]),
/// or nullopt when they are not all integers.
inline std::optional<Poly> interpolate_integer(const std::vector<Integer>& xs,
                                               const std::vector<Integer>& ys) {
  const std::size_t m = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  // Horner over the Newton basis.
  std::vector<Rational> coeffs{dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    // coeffs := coeffs * (X - xs[i]) + dd[i]
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= coeffs[k] * Rational(xs[i]);
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  std::vector<Integer> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
    out.push_back(boost::multiprecision::numerator(c));
  }
  return Poly(std::move(out));
}

/// A factor of g of exact degree s, found by Kronecker's method.
/// g must be primitive without rational roots and deg g >= 2s.
inline std::optional<Poly> kronecker_factor(const Poly& g, int s) {
  struct Sample {
    Integer x;
    Integer value;
    std::size_t divisors;
  };
  std::vector<Sample> samples;
  const int range = std::max(20, 4 * g.degree());
  for (int t = 0; t <= 2 * range; ++t) {
    const int x = (t % 2 == 0) ? t / 2 : -(t + 1) / 2;
    Integer v = g.eval(x);
    samples.push_back({Integer(x), v, divisor_count(v)});
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Sample& a, const Sample& b) { return a.divisors < b.divisors; });
  samples.resize(s + 1);

  std::vector<Integer> xs;
  std::vector<std::vector<Integer>> candidates;
  for (const auto& smp : samples) {
    xs.push_back(smp.x);
    auto divs = positive_divisors(smp.value);
    std::vector<Integer> signed_divs;
    for (const auto& d : divs) {
      signed_divs.push_back(d);
      if (!candidates.empty()) signed_divs.push_back(-d);  // first value fixed positive
    }
    candidates.push_back(std::move(signed_divs));
  }

  std::vector<Integer> ys(s + 1);
  std::optional<Poly> found;
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (found) return;
    if (i == xs.size()) {
      auto h = interpolate_integer(xs, ys);
      if (!h || h->degree() != s) return;
      if (g.leading() % h->leading() != 0 || (*h)[0] == 0 || g[0] % (*h)[0] != 0) return;
      if (Poly::exact_quotient(g, *h)) found = primitive_part(*h);
      return;
    }
    for (const auto& y : candidates[i]) {
      bool ok = true;
      // h in Z[X] forces (x_i - x_j) | (h(x_i) - h(x_j)).
      for (std::size_t j = 0; j < i && ok; ++j) ok = (y - ys[j]) % (xs[i] - xs[j]) == 0;
      if (!ok) continue;
      ys[i] = y;
      search(i + 1);
      if (found) return;
    }
  };
  search(0);
  return found;
}

/// Irreducible factors (with repetition) of a primitive g with positive leading coefficient.
inline void split_primitive(const Poly& g, std::vector<Poly>& out) {
  if (g.degree() < 1) return;
  if (g.degree() == 1) {
    out.push_back(g);
    return;
  }
  if (auto lin = rational_root_factor(g)) {
    out.push_back(*lin);
    split_primitive(*Poly::exact_quotient(g, *lin), out);
    return;
  }
  for (int s = 2; 2 * s <= g.degree(); ++s) {
    if (auto h = kronecker_factor(g, s)) {
      out.push_back(*h);
      split_primitive(primitive_part(*Poly::exact_quotient(g, *h)), out);
      return;
    }
  }
  out.push_back(g);
}

}  // namespace detail

/// Complete factorization of a nonzero g in Z[X].
inline ZFactorization factor_over_integers(const Poly& g, int max_degree = kDefaultMaxDegree) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  if (g.degree() > max_degree)
    throw Error(ErrorKind::DegreeTooLarge,
                "degree " + std::to_string(g.degree()) + " exceeds the factorization bound " +
                    std::to_string(max_degree) + " (supply the numerator as a product of factors)");
  ZFactorization out;
  out.sign = g.leading() < 0 ? -1 : 1;
  const Integer c = content(g);
  auto cfac = factor_integer(c);
  if (!cfac) throw Error(ErrorKind::TooLarge, "cannot factor content " + c.str());
  for (const auto& [q, e] : *cfac)
    for (unsigned k = 0; k < e; ++k) out.constant_primes.push_back(q);

  std::vector<Poly> parts;
  detail::split_primitive(detail::primitive_part(g), parts);
  std::sort(parts.begin(), parts.end());
  for (const auto& p : parts) {
    if (!out.factors.empty() && out.factors.back().poly == p)
      ++out.factors.back().multiplicity;
    else
      out.factors.push_back({p, 1});
  }
  return out;
}

/// g must be primitive of positive degree.
inline bool is_irreducible_over_integers(const Poly& g, int max_degree = kDefaultMaxDegree) {
  if (g.degree() < 1 || !is_primitive(g))
    throw Error(ErrorKind::InvalidArgument, "expected a primitive polynomial of positive degree");
  const auto z = factor_over_integers(g, max_degree);
  return z.factors.size() == 1 && z.factors.front().multiplicity == 1;
}

}  // namespace ivfact
