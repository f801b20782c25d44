#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ivfact/covers.hpp"
#include "ivfact/integer.hpp"
#include "ivfact/poly.hpp"
#include "ivfact/zfactor.hpp"

namespace ivfact {

/// An integer-valued polynomial
///     sign * constant * prod_i factors[i] / prod_k primes[k]
/// with irreducible primitive factors (positive leading coefficients, copies
/// of a repeated factor at distinct indices) and distinct primes.
struct FactoredIVP {
  int sign = 1;
  Integer constant = 1;
  std::vector<Poly> factors;
  std::vector<Prime> primes;

  std::size_t size() const noexcept { return factors.size(); }
  IndexSet all() const { return IndexSet::range(factors.size()); }

  Integer denominator() const {
    Integer d = 1;
    for (auto p : primes) d *= p;
    return d;
  }

  Poly numerator() const { return Poly::constant(sign * constant) * product(factors); }

  /// Fixed divisor of the numerator.
  Integer numerator_fixed_divisor() const {
    return constant * fixed_divisor_of_product(factors);
  }

  bool is_unit() const { return factors.empty() && primes.empty() && constant == 1; }

  std::string str() const {
    std::string s = sign < 0 ? "-" : "";
    if (constant != 1 || factors.empty()) s += constant.str() + (factors.empty() ? "" : "*");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += "*";
      s += "(" + factors[i].str() + ")";
    }
    if (!primes.empty()) s += "/" + denominator().str();
    return s;
  }
};

/// Factor the supplied numerator pieces over Z without looking at any
/// denominator. Each piece is re-checked, so a product the caller already
/// split only needs each piece within the degree bound.
inline FactoredIVP factor_numerator(std::span<const Poly> numerator,
                                    int max_degree = kDefaultMaxDegree) {
  if (numerator.empty()) throw Error(ErrorKind::InvalidArgument, "empty numerator");
  FactoredIVP f;
  for (const auto& piece : numerator) {
    if (piece.is_zero()) throw Error(ErrorKind::InvalidArgument, "the numerator is zero");
    if (piece.is_constant()) {
      f.sign *= piece[0] < 0 ? -1 : 1;
      f.constant *= abs(piece[0]);
      continue;
    }
    const auto z = factor_over_integers(piece, max_degree);
    f.sign *= z.sign;
    for (const auto& q : z.constant_primes) f.constant *= q;
    for (const auto& zf : z.factors)
      for (unsigned k = 0; k < zf.multiplicity; ++k) f.factors.push_back(zf.poly);
  }
  if (f.factors.size() > kMaxFactors)
    throw Error(ErrorKind::TooLarge, "at most 64 irreducible numerator factors are supported");
  return f;
}

/// Factor the numerator and validate the denominator: square-free, coprime
/// to the numerator content, and dividing the numerator's fixed divisor.
inline FactoredIVP to_ivp(std::span<const Poly> numerator, const Integer& denominator,
                          int max_degree = kDefaultMaxDegree) {
  if (denominator < 1)
    throw Error(ErrorKind::InvalidArgument, "denominator must be a positive integer");
  FactoredIVP f = factor_numerator(numerator, max_degree);

  const std::string dstr = denominator.str();
  auto dfac = factor_integer(denominator, 1'000'000);
  if (!dfac) throw Error(ErrorKind::TooLarge, "cannot factor denominator " + dstr);
  for (const auto& [q, e] : *dfac) {
    if (e > 1) throw Error(ErrorKind::NotSquareFree, "denominator " + dstr + " is not square-free");
  }
  if (gcd(denominator, f.constant) != 1)
    throw Error(ErrorKind::ContentNotCoprime, "denominator " + dstr +
                                                  " shares a factor with the numerator content " +
                                                  f.constant.str());
  const Integer fd = f.numerator_fixed_divisor();
  if (fd % denominator != 0)
    throw Error(ErrorKind::NotIntegerValued, "denominator " + dstr +
                                                 " does not divide the fixed divisor " + fd.str() +
                                                 " of the numerator");
  for (const auto& [q, e] : *dfac) {
    if (q > std::numeric_limits<Prime>::max())
      throw Error(ErrorKind::TooLarge, "denominator prime " + q.str() + " is too large");
    f.primes.push_back(q.convert_to<Prime>());
  }
  if (f.primes.size() > 64) throw Error(ErrorKind::TooLarge, "too many denominator primes");
  return f;
}

inline FactoredIVP to_ivp(const Poly& numerator, const Integer& denominator,
                          int max_degree = kDefaultMaxDegree) {
  return to_ivp(std::span<const Poly>(&numerator, 1), denominator, max_degree);
}

}  // namespace ivfact
