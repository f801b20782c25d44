#pragma once

// Minimal p-coverings of a list of root sets, families of coverings over
// several primes, and the overlap partition of a family.

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ivfact/residues.hpp"

namespace ivfact {

inline constexpr std::size_t kMaxFactors = 64;

/// Subset of factor indices {0, ..., 63}, stored as a bit mask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<std::size_t> idx) {
    for (auto i : idx) insert(i);
  }

  static IndexSet range(std::size_t n) {
    return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(std::size_t i) const noexcept { return i < 64 && ((bits_ >> i) & 1u); }
  void insert(std::size_t i) {
    if (i >= kMaxFactors) throw Error(ErrorKind::TooLarge, "at most 64 factors are supported");
    bits_ |= std::uint64_t{1} << i;
  }
  void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr bool subset_of(IndexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(IndexSet o) const noexcept { return (bits_ & o.bits_) != 0; }
  /// Smallest member; the set must be nonempty.
  std::size_t front() const noexcept { return std::countr_zero(bits_); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  IndexSet& operator|=(IndexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

  /// "{1,2,3}" with indices shifted by `base`.
  std::string str(std::size_t base = 1) const {
    std::string s = "{";
    bool first = true;
    for (auto i : members()) {
      if (!first) s += ",";
      s += std::to_string(i + base);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Root sets C_{p,g_i} of the numerator factors for one prime; position i in
/// `sets` is factor index i (repeated factors occupy distinct positions).
struct CoverInstance {
  Prime prime = 2;
  std::vector<ResidueSet> sets;

  static CoverInstance of(std::span<const Poly> factors, Prime p) {
    CoverInstance inst{p, {}};
    for (const auto& g : factors) inst.sets.push_back(root_set_mod_p(g, p));
    return inst;
  }

  IndexSet all() const { return IndexSet::range(sets.size()); }
};

namespace detail {

inline void check_indices(const CoverInstance& inst, IndexSet J) {
  if (!J.subset_of(inst.all()))
    throw Error(ErrorKind::UnknownIndex, "index set " + J.str() + " refers to a missing factor");
}

}  // namespace detail

inline bool is_cover(const CoverInstance& inst, IndexSet J) {
  detail::check_indices(inst, J);
  std::vector<bool> hit(inst.prime, false);
  std::size_t covered = 0;
  for (auto i : J.members())
    for (auto j : inst.sets[i].members)
      if (!hit[j]) {
        hit[j] = true;
        ++covered;
      }
  return covered == inst.prime;
}

/// All minimal proper p-coverings, ascending by bit mask. Branches on the
/// smallest uncovered residue: only sets containing it can extend the
/// partial cover. Non-minimal leaves are filtered out afterwards.
inline std::vector<IndexSet> minimal_covers(const CoverInstance& inst) {
  const Prime p = inst.prime;
  std::vector<std::vector<std::size_t>> holders(p);
  for (std::size_t i = 0; i < inst.sets.size(); ++i)
    for (auto j : inst.sets[i].members) holders[j].push_back(i);

  std::set<IndexSet> found;
  std::vector<unsigned> hits(p, 0);
  IndexSet chosen;
  auto search = [&](auto&& self) -> void {
    std::uint64_t r = 0;
    while (r < p && hits[r] > 0) ++r;
    if (r == p) {
      found.insert(chosen);
      return;
    }
    for (auto i : holders[r]) {
      if (chosen.contains(i)) continue;
      chosen.insert(i);
      for (auto j : inst.sets[i].members) ++hits[j];
      self(self);
      for (auto j : inst.sets[i].members) --hits[j];
      chosen.erase(i);
    }
  };
  search(search);

  std::vector<IndexSet> out;
  for (const auto& J : found) {
    bool minimal = true;
    for (auto i : J.members()) {
      IndexSet smaller = J;
      smaller.erase(i);
      if (is_cover(inst, smaller)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(J);
  }
  return out;
}

/// One minimal p_k-covering per prime, keyed by prime.
using CoveringFamily = std::map<Prime, IndexSet>;

inline std::string to_string(const CoveringFamily& family) {
  std::string s = "{";
  bool first = true;
  for (const auto& [p, J] : family) {
    if (!first) s += ", ";
    s += "J_" + std::to_string(p) + "=" + J.str();
    first = false;
  }
  return s + "}";
}

/// Lazily walks the Cartesian product of per-prime minimal coverings.
class FamilyStream {
 public:
  /// `choices[p]` lists the minimal p-coverings to combine.
  explicit FamilyStream(std::map<Prime, std::vector<IndexSet>> choices)
      : choices_(std::move(choices)), cursor_(choices_.size(), 0) {
    for (const auto& [p, list] : choices_)
      if (list.empty()) done_ = true;
  }

  std::optional<CoveringFamily> next() {
    if (done_) return std::nullopt;
    CoveringFamily family;
    std::size_t k = 0;
    for (const auto& [p, list] : choices_) family.emplace(p, list[cursor_[k++]]);
    advance();
    return family;
  }

  /// Number of families in the full product.
  std::size_t count() const {
    std::size_t n = 1;
    for (const auto& [p, list] : choices_) n *= list.size();
    return n;
  }

 private:
  void advance() {
    std::size_t k = 0;
    for (const auto& [p, list] : choices_) {
      if (++cursor_[k] < list.size()) return;
      cursor_[k++] = 0;
    }
    done_ = true;
  }

  std::map<Prime, std::vector<IndexSet>> choices_;
  std::vector<std::size_t> cursor_;
  bool done_ = false;
};

inline FamilyStream covering_families(const std::map<Prime, CoverInstance>& instances) {
  std::map<Prime, std::vector<IndexSet>> choices;
  for (const auto& [p, inst] : instances) choices.emplace(p, minimal_covers(inst));
  return FamilyStream(std::move(choices));
}

/// Union of J_k over the primes in T.
inline IndexSet union_over(const CoveringFamily& family, const std::vector<Prime>& T) {
  IndexSet u;
  for (auto p : T) {
    auto it = family.find(p);
    if (it == family.end())
      throw Error(ErrorKind::UnknownPrime, "prime " + std::to_string(p) + " is not in the family");
    u |= it->second;
  }
  return u;
}

inline IndexSet union_over(const CoveringFamily& family) {
  IndexSet u;
  for (const auto& [p, J] : family) u |= J;
  return u;
}

/// Finest partition of the primes such that the unions over distinct blocks
/// are pairwise disjoint: connected components of the graph joining two
/// primes when their coverings share an index. Blocks ascend by smallest prime.
inline std::vector<std::vector<Prime>> overlap_components(const CoveringFamily& family) {
  std::vector<Prime> primes;
  std::vector<IndexSet> sets;
  for (const auto& [p, J] : family) {
    primes.push_back(p);
    sets.push_back(J);
  }
  std::vector<std::size_t> parent(primes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < primes.size(); ++a)
    for (std::size_t b = a + 1; b < primes.size(); ++b)
      if (sets[a].intersects(sets[b])) parent[find(b)] = find(a);

  std::map<std::size_t, std::vector<Prime>> blocks;
  for (std::size_t a = 0; a < primes.size(); ++a) blocks[find(a)].push_back(primes[a]);
  std::vector<std::vector<Prime>> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_partitionable(const CoveringFamily& family) {
  return overlap_components(family).size() >= 2;
}

}  // namespace ivfact
