#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivfact/error.hpp"

namespace ivfact {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Prime = std::uint64_t;

inline std::strong_ordering compare(const Integer& a, const Integer& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Nonnegative residue of `a` modulo `m` (m > 0).
inline std::uint64_t mod(const Integer& a, std::uint64_t m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q <= n / q; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

/// Prime factorization of |n| as (prime, exponent) pairs, ascending.
/// Trial division: desk-scale values only. Returns nullopt when a cofactor
/// larger than `trial_limit`^2 survives and cannot be certified prime.
inline std::optional<std::vector<std::pair<Integer, unsigned>>> factor_integer(
    const Integer& n, std::uint64_t trial_limit = 2'000'000) {
  std::vector<std::pair<Integer, unsigned>> out;
  Integer m = abs(n);
  if (m <= 1) return out;
  for (std::uint64_t q = 2; Integer(q) * q <= m; q += (q == 2 ? 1 : 2)) {
    if (q > trial_limit) return std::nullopt;
    if (m % q == 0) {
      unsigned e = 0;
      while (m % q == 0) {
        m /= q;
        ++e;
      }
      out.emplace_back(Integer(q), e);
    }
  }
  if (m > 1) out.emplace_back(m, 1u);
  return out;
}

/// All positive divisors of |n| (n != 0), ascending.
inline std::vector<Integer> positive_divisors(const Integer& n) {
  auto fac = factor_integer(n);
  if (!fac) throw Error(ErrorKind::TooLarge, "cannot factor " + n.str());
  std::vector<Integer> divs{1};
  for (const auto& [q, e] : *fac) {
    const std::size_t base = divs.size();
    Integer power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= q;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline std::size_t divisor_count(const Integer& n) {
  auto fac = factor_integer(n, 100'000);
  if (!fac) return static_cast<std::size_t>(-1);
  std::size_t c = 1;
  for (const auto& pe : *fac) c *= pe.second + 1;
  return c;
}

}  // namespace ivfact
