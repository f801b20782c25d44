#include <gtest/gtest.h>

#include "ivfact/factorize.hpp"
#include "ivfact/oracle.hpp"
#include "support.hpp"

namespace ivfact {
namespace {

using testing::ivp;
using testing::part;

const Poly X = Poly::x();

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

std::size_t index_of(const FactoredIVP& f, const Poly& g) {
  return static_cast<std::size_t>(std::find(f.factors.begin(), f.factors.end(), g) - f.factors.begin());
}

TEST(ToIvp, Examples) {
  const auto f = ivp("x*(x-1)*(x-2)/6");
  EXPECT_EQ(f.factors, (std::vector<Poly>{X, {-1, 1}, {-2, 1}}));
  EXPECT_EQ(f.primes, (std::vector<Prime>{2, 3}));
  EXPECT_EQ(kind_of([] { ivp("x*(x-1)/4"); }), ErrorKind::NotSquareFree);
  EXPECT_EQ(kind_of([] { ivp("x^2+1/3"); }), ErrorKind::NotIntegerValued);
  EXPECT_EQ(kind_of([] { ivp("2*x*(x-1)/2"); }), ErrorKind::ContentNotCoprime);
  EXPECT_EQ(kind_of([] { to_ivp(X, Integer(0)); }), ErrorKind::InvalidArgument);
}

TEST(ToIvp, RefactorsComposites) {
  const auto f = ivp("(x^2-1)*(x^2+x)/2");
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.numerator(), (Poly{-1, 0, 1} * Poly{0, 1, 1}));
  const auto g = ivp("x^2 + x + 2");
  EXPECT_EQ(g.factors, (std::vector<Poly>{{2, 1, 1}}));
  EXPECT_TRUE(g.primes.empty());
}

TEST(ImagePrimitive, Examples) {
  EXPECT_TRUE(is_image_primitive(ivp("x*(x-1)^2/2")));
  EXPECT_FALSE(is_image_primitive(ivp("x^2*(x-1)^2/2")));
  EXPECT_FALSE(is_image_primitive(ivp("(x^2+4)*(x^2+3)/2")));
  EXPECT_TRUE(is_image_primitive(ivp("x*(x^2+2)*(x^2+16)*(x^2+4)/15")));
}

TEST(Structural, Examples) {
  const auto f = ivp("x^2*(x-1)*(x^2+4)/2");
  const auto v = p_image_primitive_structural(f, 2);
  EXPECT_TRUE(v.holds);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->index, index_of(f, Poly{-1, 1}));
  EXPECT_EQ(v.witness->residue, 1u);

  EXPECT_FALSE(p_image_primitive_structural(ivp("x*(x^2-2*x+5)*(x+6)/2"), 2).holds);
  EXPECT_FALSE(p_image_primitive_structural(ivp("(x^2+4)*(x^2+3)/2"), 2).holds);
  EXPECT_EQ(kind_of([&] { p_image_primitive_structural(f, 3); }), ErrorKind::PrimeNotInDenominator);
}

TEST(Irreducible, Examples) {
  const auto v123 = is_irreducible(ivp("x*(x-1)*(x-2)/6"));
  EXPECT_TRUE(v123.irreducible);
  EXPECT_EQ(describe(v123), "unique minimal 3-covering equals I");
  EXPECT_TRUE(is_irreducible(ivp("x*(x^2+2)*(x^2+16)*(x^2+4)/15")).irreducible);
  EXPECT_TRUE(is_irreducible(ivp("x*(x^2+1)*(x^2+x+1)*(x^2+2*x+4)/6")).irreducible);
  EXPECT_TRUE(is_irreducible(ivp("(x^2-x+3)*(x^2+2)/3")).irreducible);
  EXPECT_TRUE(is_irreducible(ivp("x^2+1")).irreducible);
  EXPECT_FALSE(is_irreducible(ivp("(x^2+1)*(x^2+3)")).irreducible);

  const auto four_linears = ivp("(x-1)*(x-2)*(x-3)*(x-9)/6");
  const auto v = is_irreducible(four_linears);
  EXPECT_FALSE(v.irreducible);
  ASSERT_TRUE(v.family);
  EXPECT_EQ(v.reason, IrreducibleReason::UncoveredFactor);
  EXPECT_NE(union_over(*v.family), four_linears.all());
  ASSERT_TRUE(v.split);
  Factorization fz{1, {v.split->first, v.split->second}, std::nullopt};
  EXPECT_TRUE(reconstructs(fz, four_linears));
  EXPECT_TRUE(part_is_integer_valued(v.split->first));
  EXPECT_TRUE(part_is_integer_valued(v.split->second));
}

TEST(Irreducible, RequiresImagePrimitive) {
  EXPECT_EQ(kind_of([] { is_irreducible(ivp("(x^2+4)*(x^2+3)/2")); }), ErrorKind::NotImagePrimitive);
  EXPECT_EQ(kind_of([] { factorizations(ivp("(x^2+4)*(x^2+3)/2")); }), ErrorKind::NotImagePrimitive);
  EXPECT_EQ(kind_of([] { is_irreducible_fast(ivp("(x^2+4)*(x^2+3)/2")); }), ErrorKind::NotImagePrimitive);
  try {
    is_irreducible(ivp("(x^2+4)*(x^2+3)/2"));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("fixed divisor of numerator is 4"), std::string::npos);
  }
}

TEST(IrreducibleFast, Examples) {
  EXPECT_EQ(is_irreducible_fast(ivp("x*(x-1)*(x-2)/6")), std::optional<bool>(true));
  EXPECT_EQ(is_irreducible_fast(ivp("x*(x^2+2)*(x^2+16)*(x^2+4)/15")), std::nullopt);
  EXPECT_EQ(is_irreducible_fast(ivp("(x^2+x)/2")), std::optional<bool>(true));
  EXPECT_EQ(is_irreducible_fast(ivp("x*(x-1)*(x-3)/2")), std::nullopt);
  EXPECT_FALSE(is_irreducible(ivp("x*(x-1)*(x-3)/2")).irreducible);
  EXPECT_EQ(is_irreducible_fast(ivp("(x^2-x+2)/2")), std::optional<bool>(true));
}

TEST(Factorizations, TwoDisjointBlocks) {
  const auto f = ivp("(x^2+12)*(x^2+2)*(x^2+10)*(x^2+16)*(x^2+4)/15");
  const auto all = factorizations(f);
  ASSERT_EQ(all.size(), 1u);
  const Factorization expected{
      1,
      {part({{12, 0, 1}, {2, 0, 1}}, {3}), part({{10, 0, 1}, {16, 0, 1}, {4, 0, 1}}, {5})},
      std::nullopt};
  EXPECT_EQ(*all.begin(), expected);
  ASSERT_TRUE(all.begin()->certificate);
  EXPECT_EQ(all.begin()->certificate->partition, (std::vector<std::vector<Prime>>{{3}, {5}}));
  EXPECT_EQ(lengths(f), std::vector<std::size_t>{2});
}

TEST(Factorizations, BinomialThree) {
  const auto f = ivp("x*(x-1)*(x-2)/6");
  const auto all = factorizations(f);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all.begin()->length(), 1u);
  EXPECT_EQ(lengths(f), std::vector<std::size_t>{1});
}

TEST(Factorizations, FourLinears) {
  const auto f = ivp("(x-1)*(x-2)*(x-3)*(x-9)/6");
  const auto all = factorizations(f);
  EXPECT_EQ(all, oracle::brute_factorizations(f));
  const Factorization with9{1, {part({{-9, 1}}, {}), part({{-1, 1}, {-2, 1}, {-3, 1}}, {2, 3})}, std::nullopt};
  EXPECT_TRUE(all.contains(with9));
  for (const auto& fz : all) {
    EXPECT_TRUE(reconstructs(fz, f));
    EXPECT_EQ(fz.length(), 2u);
  }
  EXPECT_EQ(lengths(f), (std::vector<std::size_t>(all.size(), 2)));
}

TEST(Factorizations, RepeatedFactor) {
  const auto f = ivp("x*(x-1)^2/2");
  const auto all = factorizations(f);
  EXPECT_EQ(all, oracle::brute_factorizations(f));
  bool found = false;
  for (const auto& fz : all)
    for (const auto& pt : fz.parts) found = found || pt == part({{-1, 1}}, {});
  EXPECT_TRUE(found);
}

TEST(Factorizations, NoDenominator) {
  const auto f = ivp("-(x^2+x+1)*x*(x+2)");
  const auto all = factorizations(f);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all.begin()->unit, -1);
  EXPECT_EQ(all.begin()->length(), 3u);
  EXPECT_TRUE(reconstructs(*all.begin(), f));
}

TEST(Factorizations, NoTwoPartSplitOfBinomialThree) {
  for (const auto& fz : factorizations(ivp("x*(x-1)*(x-2)/6"))) EXPECT_NE(fz.length(), 2u);
}

// Each emitted factorization multiplies back to f, and each part is an
// irreducible element of Int(Z).
void check_sound(const FactoredIVP& f, const FactorizationSet& all) {
  ASSERT_FALSE(all.empty());
  for (const auto& fz : all) {
    EXPECT_TRUE(reconstructs(fz, f)) << fz.str();
    for (const auto& pt : fz.parts) {
      EXPECT_TRUE(part_is_integer_valued(pt)) << pt.str();
      const auto sub = to_ivp(pt.numerator_factors, pt.denominator());
      EXPECT_TRUE(is_irreducible(sub).irreducible) << pt.str();
    }
  }
}

TEST(FactorizeProperties, SoundAndConsistent) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = testing::random_image_primitive(rng);
    Factorizer fx(f);
    const auto all = fx.factorizations();
    check_sound(f, all);
    EXPECT_EQ(all.size() == 1 && all.begin()->length() == 1, fx.is_irreducible().irreducible) << f.str();
    if (fx.is_irreducible_fast()) {
      EXPECT_TRUE(fx.is_irreducible().irreducible);
    }
  }
}

TEST(FactorizeProperties, SingleFactorizationIffIrreducible) {
  testing::Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = testing::random_image_primitive(rng, {.min_primes = 1});
    const auto all = factorizations(f);
    EXPECT_EQ(all.size() == 1 && all.begin()->length() == 1, is_irreducible(f).irreducible) << f.str();
  }
}

TEST(FactorizeProperties, StructuralMatchesSquareTest) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = trial % 2 ? testing::random_image_primitive(rng, {.min_primes = 1})
                             : testing::random_integer_valued(rng);
    const Integer fd = f.numerator_fixed_divisor();
    for (auto p : f.primes) {
      const auto v = p_image_primitive_structural(f, p);
      EXPECT_EQ(v.holds, fd % (p * p) != 0) << f.str() << " p=" << p;
      if (!v.holds) continue;
      // The witness factor lies in every minimal p-covering.
      const auto covers = minimal_covers(CoverInstance::of(f.factors, p));
      for (const auto& J : covers) EXPECT_TRUE(J.contains(v.witness->index)) << f.str();
      for (std::size_t a = 0; a < covers.size(); ++a)
        for (std::size_t b = a + 1; b < covers.size(); ++b) EXPECT_TRUE(covers[a].intersects(covers[b]));
    }
  }
}

TEST(FactorizeProperties, SignInvariance) {
  testing::Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing::random_image_primitive(rng);
    auto neg = f;
    neg.sign = -f.sign;
    const auto a = factorizations(f), b = factorizations(neg);
    ASSERT_EQ(a.size(), b.size());
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
      EXPECT_EQ(ia->unit, -ib->unit);
      EXPECT_EQ(ia->parts, ib->parts);
    }
  }
}

}  // namespace
}  // namespace ivfact
