#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcff/error.hpp"
#include "qcff/factor.hpp"

using namespace qcff;

TEST(PolyFactor, SquareOfLinear) {
  const auto f3 = FieldCtx::prime(3);
  const auto fac = poly_factor(f3, Poly({1, 2, 1}));
  ASSERT_EQ(fac.factors.size(), 1U);
  EXPECT_EQ(fac.factors[0].prime, Poly({1, 1}));
  EXPECT_EQ(fac.factors[0].exp, 2U);
  EXPECT_TRUE(fac.lead.is_one());
}

TEST(PolyFactor, TCubedMinusT) {
  const auto f3 = FieldCtx::prime(3);
  const auto fac = poly_factor(f3, Poly({0, 2, 0, 1}));
  const std::vector<PrimePower> expected = {
      {Poly({0, 1}), 1}, {Poly({1, 1}), 1}, {Poly({2, 1}), 1}};
  EXPECT_EQ(fac.factors, expected);
}

TEST(PolyFactor, IrreducibleStaysWhole) {
  const auto f3 = FieldCtx::prime(3);
  const auto fac = poly_factor(f3, Poly({1, 0, 1}));
  ASSERT_EQ(fac.factors.size(), 1U);
  EXPECT_EQ(fac.factors[0], (PrimePower{Poly({1, 0, 1}), 1}));
}

TEST(PolyFactor, InseparablePowers) {
  const auto f3 = FieldCtx::prime(3);
  // (T+1)^3 T^2 (T^2+1)^6
  const Poly f = mul(f3, mul(f3, pow(f3, Poly({1, 1}), 3), pow(f3, Poly::t(), 2)),
                     pow(f3, Poly({1, 0, 1}), 6));
  const auto fac = poly_factor(f3, scale(f3, f, Fq{2}));
  const std::vector<PrimePower> expected = {
      {Poly({0, 1}), 2}, {Poly({1, 1}), 3}, {Poly({1, 0, 1}), 6}};
  EXPECT_EQ(fac.factors, expected);
  EXPECT_EQ(fac.lead.enc, 2U);
  // T^9 over F_9 exercises the p-th root on a nonprime field
  const auto f9 = field_for_order(9);
  const auto fac9 = poly_factor(f9, pow(f9, Poly({4, 1}), 9));
  ASSERT_EQ(fac9.factors.size(), 1U);
  EXPECT_EQ(fac9.factors[0].exp, 9U);
}

TEST(PolyFactor, ConstantRejected) {
  const auto f3 = FieldCtx::prime(3);
  EXPECT_THROW(poly_factor(f3, Poly({2})), Error);
  try {
    poly_factor(f3, Poly{});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConstantInput);
  }
}

TEST(PolyFactor, RandomRoundTripAndCertification) {
  std::mt19937_64 rng(2024);
  for (std::uint64_t q : {3U, 5U, 9U}) {
    const auto ctx = field_for_order(q);
    std::uniform_int_distribution<std::uint32_t> coeff(0, ctx.q() - 1);
    std::uniform_int_distribution<int> degree(1, 8);
    for (int i = 0; i < 150; ++i) {
      std::vector<Fq> c(static_cast<std::size_t>(degree(rng)) + 1);
      for (auto& x : c) x = Fq{coeff(rng)};
      if (c.back().is_zero()) c.back() = Fq{1};
      const Poly f(std::move(c));
      const auto fac = poly_factor(ctx, f, rng());
      ASSERT_EQ(expand(ctx, fac), f);
      for (std::size_t k = 0; k < fac.factors.size(); ++k) {
        const auto& pp = fac.factors[k];
        ASSERT_TRUE(pp.prime.is_monic());
        ASSERT_TRUE(poly_is_irreducible(ctx, pp.prime));
        ASSERT_TRUE(oracle::irreducible_by_trial_division(ctx, pp.prime));
        if (k > 0) ASSERT_TRUE(poly_cmp(fac.factors[k - 1].prime, pp.prime) < 0);
      }
    }
  }
}

TEST(PolyFactor, ResultIndependentOfSeed) {
  const auto f5 = FieldCtx::prime(5);
  // product of all monic linears and a few quadratics
  Poly f({1});
  for (std::uint32_t a = 0; a < 5; ++a) f = mul(f5, f, Poly({a, 1}));
  f = mul(f5, f, Poly({2, 0, 1}));
  f = mul(f5, f, Poly({3, 0, 1}));
  const auto base = poly_factor(f5, f, 0).factors;
  for (std::uint64_t seed = 1; seed < 20; ++seed) EXPECT_EQ(poly_factor(f5, f, seed).factors, base);
}

TEST(PolyPhi, Examples) {
  const auto f3 = FieldCtx::prime(3);
  const PrimePower t1[] = {{Poly::t(), 1}};
  const PrimePower t2[] = {{Poly::t(), 2}};
  const PrimePower tt1[] = {{Poly::t(), 1}, {Poly({1, 1}), 1}};
  EXPECT_EQ(poly_phi(f3, t1), 2);
  EXPECT_EQ(poly_phi(f3, t2), 6);
  EXPECT_EQ(poly_phi(f3, tt1), 4);
  EXPECT_EQ(poly_phi(f3, std::span<const PrimePower>{}), 1);
}

TEST(PolyPhi, MatchesUnitCount) {
  for (std::uint64_t q : {3U, 5U}) {
    const auto ctx = field_for_order(q);
    for (const auto& m : enumerate_monic_below(ctx, 4)) {
      if (m.is_constant()) continue;
      const auto fac = poly_factor(ctx, m);
      ASSERT_EQ(poly_phi(ctx, fac.factors), oracle::unit_count(ctx, m)) << q;
    }
  }
}
