#pragma once

// Irreducibility and complete factorization of image-primitive elements of
// Int(Z) with square-free denominator, through families of minimal prime
// coverings of the numerator factors.
//
// A block g_J / d_T (J nonempty, T nonempty) is irreducible iff every family
// of minimal p-coverings (p in T) drawn from J has union exactly J and a
// connected overlap graph. Every factorization of f arises from some family
// over all of K by taking the overlap components as blocks and leaving the
// uncovered factors as integer parts; candidate blocks are re-checked.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivfact/covers.hpp"
#include "ivfact/factorization.hpp"
#include "ivfact/ivp.hpp"
#include "ivfact/residues.hpp"

namespace ivfact {

struct StructuralWitness {
  std::size_t index = 0;     // the unique factor in M_{p,j}
  std::uint64_t residue = 0; // j
};

struct StructuralVerdict {
  bool holds = false;
  std::optional<StructuralWitness> witness;
};

enum class IrreducibleReason {
  Unit,                 // f = +-1
  SingleIntegerFactor,  // no denominator, one irreducible factor
  IntegerProduct,       // no denominator, several factors
  AllFamiliesConnected, // every family covers I and is not partitionable
  UncoveredFactor,      // some family leaves a factor outside every covering
  Partitionable,        // some family splits into disjoint blocks
};

struct IrreducibleVerdict {
  bool irreducible = false;
  IrreducibleReason reason = IrreducibleReason::Unit;
  std::optional<CoveringFamily> family;        // the violating family
  std::optional<std::pair<Part, Part>> split;  // f = first * second
  std::optional<Prime> fast_prime;             // I is the unique minimal covering for it
};

inline std::string describe(const IrreducibleVerdict& v) {
  switch (v.reason) {
    case IrreducibleReason::Unit: return "a unit is not irreducible";
    case IrreducibleReason::SingleIntegerFactor:
      return "image primitive and irreducible in Z[X]";
    case IrreducibleReason::IntegerProduct: return "product of several integer polynomials";
    case IrreducibleReason::AllFamiliesConnected:
      if (v.fast_prime)
        return "unique minimal " + std::to_string(*v.fast_prime) + "-covering equals I";
      return "every covering family covers I and is not partitionable";
    case IrreducibleReason::UncoveredFactor:
      return "family " + to_string(*v.family) + " leaves a factor uncovered";
    case IrreducibleReason::Partitionable:
      return "family " + to_string(*v.family) + " is partitionable";
  }
  return "";
}

inline bool is_image_primitive(const FactoredIVP& f) {
  return f.numerator_fixed_divisor() == f.denominator();
}

inline void require_image_primitive(const FactoredIVP& f) {
  if (!is_image_primitive(f))
    throw Error(ErrorKind::NotImagePrimitive,
                "not image primitive: fixed divisor of numerator is " +
                    f.numerator_fixed_divisor().str() + " but the denominator is " +
                    f.denominator().str());
}

/// Structural p-image-primitivity for p dividing the denominator exactly:
/// some residue j is a root of exactly one factor, and a simple one.
inline StructuralVerdict p_image_primitive_structural(const FactoredIVP& f, Prime p) {
  if (std::find(f.primes.begin(), f.primes.end(), p) == f.primes.end())
    throw Error(ErrorKind::PrimeNotInDenominator,
                std::to_string(p) + " does not divide the denominator");
  for (std::uint64_t j = 0; j < p; ++j) {
    std::size_t count = 0;
    std::size_t last = 0;
    MembershipOrder order = MembershipOrder::NotInM;
    for (std::size_t i = 0; i < f.size() && count < 2; ++i) {
      const auto m = membership_order(f.factors[i], p, j);
      if (m == MembershipOrder::NotInM) continue;
      ++count;
      last = i;
      order = m;
    }
    if (count == 1 && order == MembershipOrder::SimpleInM)
      return {true, StructuralWitness{last, j}};
  }
  return {false, std::nullopt};
}

/// Memoizing engine bound to one polynomial. Sub-blocks are addressed by an
/// index set J and a bit mask over positions in f.primes.
class Factorizer {
 public:
  explicit Factorizer(FactoredIVP f) : f_(std::move(f)) {
    for (auto p : f_.primes) covers_.push_back(minimal_covers(CoverInstance::of(f_.factors, p)));
  }

  const FactoredIVP& ivp() const noexcept { return f_; }

  /// Minimal coverings of every denominator prime, keyed by prime.
  std::map<Prime, std::vector<IndexSet>> minimal_coverings() const {
    std::map<Prime, std::vector<IndexSet>> out;
    for (std::size_t k = 0; k < f_.primes.size(); ++k) out.emplace(f_.primes[k], covers_[k]);
    return out;
  }

  /// Sufficient test: true when I itself is a minimal covering for some prime.
  std::optional<bool> is_irreducible_fast() const {
    require_image_primitive(f_);
    if (fast_prime(f_.all())) return true;
    return std::nullopt;
  }

  IrreducibleVerdict is_irreducible() {
    require_image_primitive(f_);
    return check_block(f_.all(), all_primes());
  }

  /// Every factorization into irreducibles, deduplicated.
  FactorizationSet factorizations() {
    require_image_primitive(f_);
    if (f_.is_unit()) throw Error(ErrorKind::InvalidArgument, "a unit has no factorization");
    FactorizationSet out;
    if (f_.primes.empty()) {
      Factorization fz;
      fz.unit = f_.sign;
      for (auto i : f_.all().members()) fz.parts.push_back(make_part(f_, IndexSet{i}, {}));
      fz.canonicalize();
      out.insert(std::move(fz));
      return out;
    }
    auto stream = families_within(f_.all(), all_primes());
    while (auto family = stream.next()) {
      auto blocks = overlap_components(*family);
      IndexSet covered;
      bool all_irreducible = true;
      Factorization fz;
      fz.unit = f_.sign;
      for (const auto& block : blocks) {
        const IndexSet U = union_over(*family, block);
        covered |= U;
        if (!block_irreducible(U, mask_of(block))) {
          all_irreducible = false;
          break;
        }
        fz.parts.push_back(make_part(f_, U, block));
      }
      if (!all_irreducible) continue;
      for (auto i : (f_.all() - covered).members()) fz.parts.push_back(make_part(f_, IndexSet{i}, {}));
      fz.canonicalize();
      fz.certificate = Certificate{*family, blocks};
      out.insert(std::move(fz));
    }
    return out;
  }

  std::vector<std::size_t> lengths() {
    std::vector<std::size_t> out;
    for (const auto& fz : factorizations()) out.push_back(fz.length());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Irreducibility of the sub-block g_J / d_T (memoized).
  bool block_irreducible(IndexSet J, std::uint64_t prime_mask) {
    const auto key = std::make_pair(J.bits(), prime_mask);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool r = check_block(J, prime_mask).irreducible;
    memo_.emplace(key, r);
    return r;
  }

 private:
  std::uint64_t all_primes() const {
    return f_.primes.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f_.primes.size()) - 1;
  }

  std::vector<Prime> primes_of(std::uint64_t mask) const {
    std::vector<Prime> out;
    for (std::size_t k = 0; k < f_.primes.size(); ++k)
      if ((mask >> k) & 1u) out.push_back(f_.primes[k]);
    return out;
  }

  std::uint64_t mask_of(const std::vector<Prime>& ps) const {
    std::uint64_t m = 0;
    for (auto p : ps) {
      auto it = std::find(f_.primes.begin(), f_.primes.end(), p);
      m |= std::uint64_t{1} << (it - f_.primes.begin());
    }
    return m;
  }

  /// Minimal coverings inside J are exactly the global ones contained in J.
  FamilyStream families_within(IndexSet J, std::uint64_t prime_mask) const {
    std::map<Prime, std::vector<IndexSet>> choices;
    for (std::size_t k = 0; k < f_.primes.size(); ++k) {
      if (!((prime_mask >> k) & 1u)) continue;
      auto& list = choices[f_.primes[k]];
      for (const auto& c : covers_[k])
        if (c.subset_of(J)) list.push_back(c);
    }
    return FamilyStream(std::move(choices));
  }

  std::optional<Prime> fast_prime(IndexSet J) const {
    for (std::size_t k = 0; k < f_.primes.size(); ++k)
      for (const auto& c : covers_[k])
        if (c == J) return f_.primes[k];
    return std::nullopt;
  }

  IrreducibleVerdict check_block(IndexSet J, std::uint64_t prime_mask) {
    IrreducibleVerdict v;
    if (J.empty()) {
      v.reason = IrreducibleReason::Unit;
      return v;
    }
    if (prime_mask == 0) {
      if (J.size() == 1) {
        v.irreducible = true;
        v.reason = IrreducibleReason::SingleIntegerFactor;
      } else {
        v.reason = IrreducibleReason::IntegerProduct;
        const IndexSet first{J.front()};
        v.split = std::make_pair(make_part(f_, first, {}), make_part(f_, J - first, {}));
      }
      return v;
    }
    const auto T = primes_of(prime_mask);
    auto stream = families_within(J, prime_mask);
    if (stream.count() == 0)
      throw Error(ErrorKind::NotIntegerValued, "block is not integer-valued");
    while (auto family = stream.next()) {
      const IndexSet U = union_over(*family);
      if (U != J) {
        v.reason = IrreducibleReason::UncoveredFactor;
        v.family = *family;
        v.split = std::make_pair(make_part(f_, U, T), make_part(f_, J - U, {}));
        return v;
      }
      auto blocks = overlap_components(*family);
      if (blocks.size() >= 2) {
        v.reason = IrreducibleReason::Partitionable;
        v.family = *family;
        const IndexSet U1 = union_over(*family, blocks.front());
        std::vector<Prime> rest;
        for (auto p : T)
          if (std::find(blocks.front().begin(), blocks.front().end(), p) == blocks.front().end())
            rest.push_back(p);
        v.split = std::make_pair(make_part(f_, U1, blocks.front()), make_part(f_, J - U1, rest));
        return v;
      }
    }
    v.irreducible = true;
    v.reason = IrreducibleReason::AllFamiliesConnected;
    v.fast_prime = fast_prime(J);
    return v;
  }

  FactoredIVP f_;
  std::vector<std::vector<IndexSet>> covers_;  // per position in f_.primes
  std::map<std::pair<std::uint64_t, std::uint64_t>, bool> memo_;
};

inline IrreducibleVerdict is_irreducible(const FactoredIVP& f) {
  if (f.is_unit()) return {};
  return Factorizer(f).is_irreducible();
}

inline std::optional<bool> is_irreducible_fast(const FactoredIVP& f) {
  return Factorizer(f).is_irreducible_fast();
}

inline FactorizationSet factorizations(const FactoredIVP& f) { return Factorizer(f).factorizations(); }

inline std::vector<std::size_t> lengths(const FactoredIVP& f) { return Factorizer(f).lengths(); }

}  // namespace ivfact
