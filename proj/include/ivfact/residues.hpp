#pragma once

// Root sets modulo p and membership in the maximal ideals (p, X - j) of Z[X]
// and their squares. (p, X - j) contains g iff p | g(j); the square
// (p^2, p(X - j), (X - j)^2) contains g iff p^2 | g(j) and p | g'(j), by
// Taylor expansion of g at j.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "ivfact/integer.hpp"
#include "ivfact/poly.hpp"

namespace ivfact {

/// Residues j in {0, ..., p-1} with p | g(j), ascending.
struct ResidueSet {
  Prime prime = 2;
  std::vector<std::uint64_t> members;

  bool empty() const noexcept { return members.empty(); }
  bool contains(std::uint64_t j) const {
    return std::binary_search(members.begin(), members.end(), j);
  }
  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

enum class MembershipOrder { NotInM, SimpleInM, InMSquared };

constexpr const char* to_string(MembershipOrder m) {
  switch (m) {
    case MembershipOrder::NotInM: return "not in M";
    case MembershipOrder::SimpleInM: return "in M \\ M^2";
    case MembershipOrder::InMSquared: return "in M^2";
  }
  return "?";
}

inline ResidueSet root_set_mod_p(const Poly& g, Prime p) {
  require_prime(p);
  ResidueSet r{p, {}};
  for (std::uint64_t j = 0; j < p; ++j)
    if (g.eval_mod(j, p) == 0) r.members.push_back(j);
  return r;
}

inline MembershipOrder membership_order(const Poly& g, Prime p, std::uint64_t j) {
  require_prime(p);
  if (j >= p)
    throw Error(ErrorKind::ResidueOutOfRange,
                "residue " + std::to_string(j) + " is not in [0, " + std::to_string(p) + ")");
  if (g.eval_mod(j, p) != 0) return MembershipOrder::NotInM;
  const bool square = g.eval_mod(j, p * p) == 0 && g.derivative().eval_mod(j, p) == 0;
  return square ? MembershipOrder::InMSquared : MembershipOrder::SimpleInM;
}

/// Whether the product of the underlying polynomials lies in (p, X^p - X),
/// i.e. whether the root sets jointly cover every residue class.
inline bool product_in_Ip(std::span<const ResidueSet> root_sets) {
  if (root_sets.empty()) return false;
  const Prime p = root_sets.front().prime;
  std::vector<bool> hit(p, false);
  for (const auto& r : root_sets) {
    if (r.prime != p) throw Error(ErrorKind::MixedPrimes, "root sets for different primes");
    for (auto j : r.members) hit[j] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace ivfact
