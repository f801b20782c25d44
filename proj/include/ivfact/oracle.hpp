#pragma once

// Brute-force ground truth. Nothing here uses root sets or coverings: g_J / d_T
// is integer-valued iff d_T divides the fixed divisor of g_J, and it divides f
// iff the cofactor (I \ J, K \ T) passes the same test. Fixed divisors are
// gcds over a symmetric window of integer arguments.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ivfact/factorization.hpp"
#include "ivfact/ivp.hpp"

namespace ivfact::oracle {

inline constexpr std::size_t kMaxFactors = 8;
inline constexpr Prime kMaxPrime = 13;

/// gcd of g(n) for n = -window, ..., window.
inline Integer brute_fixed_divisor(const Poly& g, long window) {
  if (window < g.degree() + 1)
    throw Error(ErrorKind::WindowTooSmall, "window " + std::to_string(window) +
                                               " is smaller than deg + 1 = " +
                                               std::to_string(g.degree() + 1));
  Integer d = 0;
  for (long n = -window; n <= window; ++n) d = gcd(d, g.eval(n));
  return d;
}

class BruteForce {
 public:
  /// `window` is widened per subset to at least deg(g_J) + 1.
  explicit BruteForce(FactoredIVP f, long window = 10) : f_(std::move(f)), window_(window) {
    if (f_.size() > kMaxFactors)
      throw Error(ErrorKind::TooLarge, "oracle supports at most " + std::to_string(kMaxFactors) +
                                           " numerator factors");
    for (auto p : f_.primes)
      if (p > kMaxPrime)
        throw Error(ErrorKind::TooLarge, "oracle supports denominator primes up to " +
                                             std::to_string(kMaxPrime));
    const std::uint64_t subsets = std::uint64_t{1} << f_.size();
    fd_.resize(subsets);
    for (std::uint64_t J = 0; J < subsets; ++J) {
      Poly g = Poly::constant(f_.constant);
      for (auto i : IndexSet(J).members()) g *= f_.factors[i];
      fd_[J] = brute_fixed_divisor(g, std::max<long>(window_, g.degree() + 1));
    }
  }

  const FactoredIVP& ivp() const noexcept { return f_; }

  /// d_T | d(g_J). The constant content travels with every subset.
  bool valid(std::uint64_t J, std::uint64_t T) const { return fd_[J] % d_of(T) == 0; }

  /// All (J, T) with J subset of I, T subset of K such that g_J / d_T is
  /// integer-valued; includes the unit and f itself. Whether the cofactor is
  /// integer-valued as well is not checked here.
  std::vector<IvpFactor> ivp_divisors() const {
    std::vector<IvpFactor> out;
    const std::uint64_t all = full_mask(), allT = full_primes();
    for (std::uint64_t J = 0; J <= all; ++J)
      for (std::uint64_t T = 0; T <= allT; ++T)
        if (valid(J, T))
          out.push_back({IndexSet(J), primes_of(T), 1});
    return out;
  }

  /// No split of (J, T) into two non-unit divisors.
  bool irreducible(std::uint64_t J, std::uint64_t T) const {
    if (J == 0) return false;
    for (std::uint64_t A = (J - 1) & J; A != 0; A = (A - 1) & J)
      for (std::uint64_t S = T;; S = (S - 1) & T) {
        if (valid(A, S) && valid(J & ~A, T & ~S)) return false;
        if (S == 0) break;
      }
    return true;
  }

  FactorizationSet factorizations() {
    if (!valid(full_mask(), full_primes()) || fd_[full_mask()] != d_of(full_primes()))
      throw Error(ErrorKind::NotImagePrimitive, "oracle input must be image primitive");
    if (full_mask() == 0) throw Error(ErrorKind::InvalidArgument, "a unit has no factorization");
    FactorizationSet out;
    for (const auto& parts : split(full_mask(), full_primes())) {
      Factorization fz;
      fz.unit = f_.sign;
      for (const auto& [J, T] : parts) fz.parts.push_back(make_part(f_, IndexSet(J), primes_of(T)));
      fz.canonicalize();
      out.insert(std::move(fz));
    }
    return out;
  }

 private:
  using Block = std::pair<std::uint64_t, std::uint64_t>;

  /// All ways to write block (J, T) as a product of irreducible blocks. The
  /// part holding the smallest index of J is chosen first.
  const std::vector<std::vector<Block>>& split(std::uint64_t J, std::uint64_t T) {
    const Block key{J, T};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<std::vector<Block>> result;
    const std::uint64_t low = J & (~J + 1);
    const std::uint64_t rest = J & ~low;
    for (std::uint64_t B = rest;; B = (B - 1) & rest) {
      const std::uint64_t A = B | low;
      for (std::uint64_t S = T;; S = (S - 1) & T) {
        if (valid(A, S) && irreducible(A, S)) {
          if (A == J && S == T) {
            result.push_back({{A, S}});
          } else if (A != J && valid(J & ~A, T & ~S)) {
            for (const auto& tail : split(J & ~A, T & ~S)) {
              std::vector<Block> parts{{A, S}};
              parts.insert(parts.end(), tail.begin(), tail.end());
              result.push_back(std::move(parts));
            }
          }
        }
        if (S == 0) break;
      }
      if (B == 0) break;
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  std::uint64_t full_mask() const { return (std::uint64_t{1} << f_.size()) - 1; }
  std::uint64_t full_primes() const { return (std::uint64_t{1} << f_.primes.size()) - 1; }

  Integer d_of(std::uint64_t T) const {
    Integer d = 1;
    for (std::size_t k = 0; k < f_.primes.size(); ++k)
      if ((T >> k) & 1u) d *= f_.primes[k];
    return d;
  }

  std::vector<Prime> primes_of(std::uint64_t T) const {
    std::vector<Prime> out;
    for (std::size_t k = 0; k < f_.primes.size(); ++k)
      if ((T >> k) & 1u) out.push_back(f_.primes[k]);
    return out;
  }

  FactoredIVP f_;
  long window_;
  std::vector<Integer> fd_;
  std::map<Block, std::vector<std::vector<Block>>> memo_;
};

inline std::vector<IvpFactor> ivp_divisors(const FactoredIVP& f, long window = 10) {
  return BruteForce(f, window).ivp_divisors();
}

inline FactorizationSet brute_factorizations(const FactoredIVP& f, long window = 10) {
  return BruteForce(f, window).factorizations();
}

}  // namespace ivfact::oracle
