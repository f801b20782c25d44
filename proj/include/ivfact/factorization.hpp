#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ivfact/covers.hpp"
#include "ivfact/ivp.hpp"

namespace ivfact {

/// A divisor g_J / d_T of a FactoredIVP, named by index and prime subsets.
struct IvpFactor {
  IndexSet indices;
  std::vector<Prime> primes;  // ascending
  int sign = 1;

  friend bool operator==(const IvpFactor&, const IvpFactor&) = default;
};

/// One irreducible part of a factorization in canonical form: the numerator
/// factors sorted, with the index set kept only as provenance.
struct Part {
  std::vector<Poly> numerator_factors;
  std::vector<Prime> denominator_primes;
  IndexSet indices;

  Integer denominator() const {
    Integer d = 1;
    for (auto p : denominator_primes) d *= p;
    return d;
  }
  Poly numerator() const { return product(numerator_factors); }

  std::string str() const {
    std::string s;
    const bool bare = denominator_primes.empty() && numerator_factors.size() == 1;
    if (bare) return numerator_factors.front().str();
    if (numerator_factors.empty()) s = "1";
    for (std::size_t i = 0; i < numerator_factors.size(); ++i) {
      if (i) s += "*";
      s += "(" + numerator_factors[i].str() + ")";
    }
    if (!denominator_primes.empty()) s += "/" + denominator().str();
    return s;
  }

  /// Ordered by denominator, then numerator degree and coefficients.
  friend std::strong_ordering operator<=>(const Part& a, const Part& b) {
    if (auto c = compare(a.denominator(), b.denominator()); c != 0) return c;
    if (auto c = a.numerator() <=> b.numerator(); c != 0) return c;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Part& a, const Part& b) {
    return a.denominator_primes == b.denominator_primes && a.numerator_factors == b.numerator_factors;
  }
};

inline Part make_part(const FactoredIVP& f, IndexSet J, std::vector<Prime> T) {
  Part part;
  for (auto i : J.members()) part.numerator_factors.push_back(f.factors.at(i));
  std::sort(part.numerator_factors.begin(), part.numerator_factors.end());
  std::sort(T.begin(), T.end());
  part.denominator_primes = std::move(T);
  part.indices = J;
  return part;
}

struct Certificate {
  CoveringFamily family;
  std::vector<std::vector<Prime>> partition;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// A factorization into irreducibles: a global unit times sorted parts.
/// Identity ignores the certificate and the index provenance of the parts,
/// so factorizations differing only in which copy of a repeated factor went
/// where compare equal.
struct Factorization {
  int unit = 1;
  std::vector<Part> parts;
  std::optional<Certificate> certificate;

  std::size_t length() const noexcept { return parts.size(); }

  void canonicalize() { std::sort(parts.begin(), parts.end()); }

  std::string str() const {
    std::string s = unit < 0 ? "-" : "";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += " * ";
      s += "[" + parts[i].str() + "]";
    }
    return s;
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.unit == b.unit && a.parts == b.parts;
  }
  friend std::strong_ordering operator<=>(const Factorization& a, const Factorization& b) {
    if (auto c = a.unit <=> b.unit; c != 0) return c;
    return std::lexicographical_compare_three_way(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                                  b.parts.end());
  }
};

using FactorizationSet = std::set<Factorization>;

/// Whether the parts multiply back to f exactly.
inline bool reconstructs(const Factorization& fz, const FactoredIVP& f) {
  Poly num = Poly::constant(fz.unit);
  Integer den = 1;
  for (const auto& part : fz.parts) {
    num *= part.numerator();
    den *= part.denominator();
  }
  return Poly::constant(f.denominator()) * num == Poly::constant(den) * f.numerator();
}

/// Whether a part is an element of Int(Z).
inline bool part_is_integer_valued(const Part& part) {
  return fixed_divisor_of_product(part.numerator_factors) % part.denominator() == 0;
}

}  // namespace ivfact
