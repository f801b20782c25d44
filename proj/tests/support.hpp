#pragma once

// Random instance generators and small brute-force helpers shared by the
// unit and acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "ivfact/ivfact.hpp"

namespace ivfact::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random polynomial with coefficients in [-bound, bound] and exact degree deg.
inline Poly random_poly(Rng& rng, int deg, long bound) {
  std::vector<Integer> c(deg + 1);
  for (auto& v : c) v = uniform(rng, -bound, bound);
  while (c.back() == 0) c.back() = uniform(rng, -bound, bound);
  return Poly(std::move(c));
}

/// Primitive linear factor: mostly monic X - a, sometimes a*X + b.
inline Poly random_linear(Rng& rng) {
  if (uniform(rng, 0, 4) > 0) return Poly::linear(1, uniform(rng, -20, 20));
  for (;;) {
    const long a = uniform(rng, 2, 5), b = uniform(rng, -20, 20);
    if (gcd(a, b) == 1) return Poly::linear(a, b);
  }
}

inline bool is_square(const Integer& n) {
  if (n < 0) return false;
  const Integer r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

/// Irreducible primitive quadratic with |coefficients| <= 20.
inline Poly random_quadratic(Rng& rng) {
  for (;;) {
    const long a = uniform(rng, 0, 3) == 0 ? uniform(rng, 2, 3) : 1;
    const long b = uniform(rng, -20, 20), c = uniform(rng, -20, 20);
    if (c == 0) continue;
    if (gcd(gcd(a, b), c) != 1) continue;
    if (is_square(Integer(b) * b - Integer(4) * a * c)) continue;
    return Poly{c, b, a};
  }
}

/// 1..max_count irreducible factors of degree <= 2 with total degree <= max_degree.
inline std::vector<Poly> random_factors(Rng& rng, std::size_t max_count, int max_degree) {
  const auto count = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_count)));
  std::vector<Poly> out;
  int deg = 0;
  while (out.size() < count) {
    Poly g = uniform(rng, 0, 2) == 0 && deg + 2 <= max_degree ? random_quadratic(rng) : random_linear(rng);
    if (deg + g.degree() > max_degree) break;
    deg += g.degree();
    out.push_back(std::move(g));
  }
  return out;
}

struct InstanceSpec {
  std::size_t max_factors = 6;
  int max_degree = 8;
  std::vector<Prime> allowed_primes{2, 3, 5, 7};
  std::size_t min_primes = 0;
  std::size_t max_primes = 64;
};

/// A square-free product of allowed primes, or 0 when d has another factor.
inline Integer allowed_squarefree(const Integer& d, const InstanceSpec& spec, std::size_t& nprimes) {
  Integer m = d;
  nprimes = 0;
  for (auto p : spec.allowed_primes) {
    if (m % p == 0) {
      m /= p;
      ++nprimes;
      if (m % p == 0) return 0;
    }
  }
  return m == 1 ? d : Integer(0);
}

/// Random image-primitive element: the denominator is the numerator's fixed divisor.
inline FactoredIVP random_image_primitive(Rng& rng, const InstanceSpec& spec = {}) {
  for (;;) {
    auto factors = random_factors(rng, spec.max_factors, spec.max_degree);
    const Integer fd = fixed_divisor_of_product(factors);
    std::size_t n = 0;
    if (allowed_squarefree(fd, spec, n) == 0) continue;
    if (n < spec.min_primes || n > spec.max_primes) continue;
    return to_ivp(factors, fd);
  }
}

/// Random integer-valued element whose denominator is a nontrivial
/// square-free divisor of the numerator's fixed divisor (image primitive or not).
inline FactoredIVP random_integer_valued(Rng& rng, const InstanceSpec& spec = {}) {
  for (;;) {
    auto factors = random_factors(rng, spec.max_factors, spec.max_degree);
    const Integer fd = fixed_divisor_of_product(factors);
    Integer d = 1;
    for (auto p : spec.allowed_primes)
      if (fd % p == 0 && uniform(rng, 0, 3) > 0) d *= p;
    if (d == 1) continue;
    return to_ivp(factors, d);
  }
}

/// Whether J is a minimal p-covering, by checking every proper subset directly.
inline bool brute_minimal_cover(const CoverInstance& inst, IndexSet J) {
  if (!is_cover(inst, J)) return false;
  for (auto i : J.members())
    if (inst.sets[i].empty()) return false;
  for (std::uint64_t sub = (J.bits() - 1) & J.bits();; sub = (sub - 1) & J.bits()) {
    if (is_cover(inst, IndexSet(sub))) return false;
    if (sub == 0) break;
  }
  return true;
}

/// Minimal covers by enumerating every subset of I.
inline std::vector<IndexSet> brute_minimal_covers(const CoverInstance& inst) {
  std::vector<IndexSet> out;
  const std::uint64_t n = std::uint64_t{1} << inst.sets.size();
  for (std::uint64_t J = 1; J < n; ++J)
    if (brute_minimal_cover(inst, IndexSet(J))) out.push_back(IndexSet(J));
  return out;
}

inline FactoredIVP ivp(std::vector<Poly> factors, long d) { return to_ivp(factors, Integer(d)); }

/// Parse and validate an expression, as the CLI does.
inline FactoredIVP ivp(const std::string& expr) {
  const auto in = parse(expr);
  return to_ivp(in.factors, in.denominator);
}

inline Part part(std::vector<Poly> factors, std::vector<Prime> primes) {
  std::sort(factors.begin(), factors.end());
  return Part{std::move(factors), std::move(primes), {}};
}

/// The worked examples: every expression the library is expected to reproduce.
inline const std::vector<std::string>& worked_examples() {
  static const std::vector<std::string> list{
      "(x^2-x+3)*(x^2+2)/3",
      "x*(x-1)^2/2",
      "x^2*(x-1)^2/2",
      "(x^2+4)*(x^2+3)/2",
      "x*(x-1)*(x-2)/6",
      "x^2*(x-1)*(x^2+4)/2",
      "x*(x^2-2*x+5)*(x+6)/2",
      "(x-1)*(x-2)*(x-3)*(x-9)/6",
      "(x^2+12)*(x^2+2)*(x^2+10)*(x^2+16)*(x^2+4)/15",
      "x*(x^2+2)*(x^2+16)*(x^2+4)/15",
      "x*(x^2+1)*(x^2+x+1)*(x^2+2*x+4)/6",
      "x^2+x+2",
      "(x^2+x+2)/2",
      "x*(x-1)/2",
  };
  return list;
}

}  // namespace ivfact::testing
