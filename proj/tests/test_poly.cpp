#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcff/error.hpp"
#include "qcff/poly.hpp"

using namespace qcff;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::OracleFailure;
}

Poly random_poly(const FieldCtx& ctx, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<std::uint32_t> c(0, ctx.q() - 1);
  std::vector<Fq> v(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : v) x = Fq{c(rng)};
  return Poly(std::move(v));
}

}  // namespace

TEST(Poly, Canonical) {
  const Poly z({0, 0});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), Poly::kZeroDegree);
  const Poly f({1, 2, 0});
  EXPECT_EQ(f.degree(), 1);
  EXPECT_EQ(f.coeffs().size(), 2U);
  EXPECT_FALSE(f.is_monic());
  EXPECT_TRUE(Poly({2, 1}).is_monic());
}

TEST(PolyArith, DivremExample) {
  const auto f3 = FieldCtx::prime(3);
  // T^2 + 1 = (T + 2)(T + 1) + 2
  const auto [quot, r] = divrem(f3, Poly({1, 0, 1}), Poly({1, 1}));
  EXPECT_EQ(quot, Poly({2, 1}));
  EXPECT_EQ(r, Poly({2}));
}

TEST(PolyArith, GcdExample) {
  const auto f3 = FieldCtx::prime(3);
  EXPECT_EQ(gcd(f3, Poly({1, 2, 1}), Poly({1, 1})), Poly({1, 1}));
  EXPECT_EQ(gcd(f3, Poly({2, 2}), Poly{}), Poly({1, 1}));
  EXPECT_EQ(error_of([&] { gcd(f3, Poly{}, Poly{}); }), Errc::GcdOfZeros);
}

TEST(PolyArith, PowmodExample) {
  const auto f3 = FieldCtx::prime(3);
  EXPECT_EQ(powmod(f3, Poly::t(), 4, Poly({1, 0, 1})), Poly({1}));
  EXPECT_EQ(powmod(f3, Poly::t(), BigInt(4), Poly({1, 0, 1})), Poly({1}));
  EXPECT_EQ(powmod(f3, Poly::t(), 0, Poly({1, 0, 1})), Poly({1}));
  EXPECT_EQ(error_of([&] { powmod(f3, Poly::t(), 3, Poly{}); }), Errc::DivisionByZero);
  EXPECT_EQ(error_of([&] { powmod(f3, Poly::t(), 3, Poly({2})); }), Errc::ConstantInput);
  EXPECT_EQ(error_of([&] { divrem(f3, Poly::t(), Poly{}); }), Errc::DivisionByZero);
}

TEST(PolyArith, DivremRoundTripRandomized) {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {3U, 5U, 9U, 25U}) {
    const auto ctx = field_for_order(q);
    for (int i = 0; i < 300; ++i) {
      const Poly a = random_poly(ctx, 12, rng);
      Poly b = random_poly(ctx, 6, rng);
      if (b.is_zero()) b = Poly({1});
      const auto [quot, r] = divrem(ctx, a, b);
      ASSERT_EQ(add(ctx, mul(ctx, quot, b), r), a);
      ASSERT_LT(r.degree(), b.degree());
    }
  }
}

TEST(PolyArith, RingIdentitiesRandomized) {
  std::mt19937_64 rng(11);
  const auto ctx = field_for_order(9);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(ctx, 6, rng);
    const Poly b = random_poly(ctx, 6, rng);
    const Poly c = random_poly(ctx, 6, rng);
    ASSERT_EQ(mul(ctx, a, add(ctx, b, c)), add(ctx, mul(ctx, a, b), mul(ctx, a, c)));
    ASSERT_EQ(sub(ctx, add(ctx, a, b), b), a);
    ASSERT_EQ(mul(ctx, a, b), mul(ctx, b, a));
    if (!a.is_zero() || !b.is_zero()) {
      const Poly g = gcd(ctx, a, b);
      ASSERT_TRUE(g.is_monic());
      ASSERT_TRUE(rem(ctx, a, g).is_zero());
      ASSERT_TRUE(rem(ctx, b, g).is_zero());
    }
  }
}

TEST(PolyArith, PowmodMatchesRepeatedMultiplication) {
  std::mt19937_64 rng(3);
  const auto ctx = field_for_order(5);
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_poly(ctx, 5, rng);
    Poly m = random_poly(ctx, 4, rng);
    if (m.is_constant()) m = Poly({1, 0, 1});
    const std::uint64_t n = rng() % 40;
    const Poly expected = oracle::slow_power(ctx, a, n, m);
    ASSERT_EQ(powmod(ctx, a, n, m), expected);
    ASSERT_EQ(powmod(ctx, a, BigInt(n), m), expected);
  }
}

TEST(PolyIrreducible, Examples) {
  const auto f3 = FieldCtx::prime(3);
  EXPECT_TRUE(poly_is_irreducible(f3, Poly::t()));
  EXPECT_TRUE(poly_is_irreducible(f3, Poly({1, 0, 1})));
  EXPECT_FALSE(poly_is_irreducible(f3, Poly({2, 0, 1})));
  EXPECT_EQ(error_of([&] { poly_is_irreducible(f3, Poly({2})); }), Errc::ConstantInput);
  EXPECT_EQ(error_of([&] { poly_is_irreducible(f3, Poly{}); }), Errc::ConstantInput);
}

TEST(PolyIrreducible, AgreesWithTrialDivisionAndGaussCount) {
  for (auto [q, max_deg] : {std::pair{3, 6}, std::pair{5, 4}, std::pair{9, 3}, std::pair{7, 3}}) {
    const auto ctx = field_for_order(static_cast<std::uint64_t>(q));
    for (int d = 1; d <= max_deg; ++d) {
      std::int64_t count = 0;
      for (const auto& f : enumerate_monic_of_degree(ctx, d)) {
        const bool rabin = poly_is_irreducible(ctx, f);
        if (d <= 4) ASSERT_EQ(rabin, oracle::irreducible_by_trial_division(ctx, f)) << q << " " << d;
        count += rabin ? 1 : 0;
      }
      EXPECT_EQ(count, oracle::gauss_count(q, d)) << "q=" << q << " d=" << d;
    }
  }
}

TEST(PolyCmp, Examples) {
  EXPECT_EQ(poly_cmp(Poly::t(), Poly({1, 1})), std::strong_ordering::less);
  EXPECT_EQ(poly_cmp(Poly({2, 1}), Poly({0, 0, 1})), std::strong_ordering::less);
  EXPECT_EQ(poly_cmp(Poly({1, 2, 1}), Poly({1, 2, 1})), std::strong_ordering::equal);
  EXPECT_EQ(poly_cmp(Poly{}, Poly({1})), std::strong_ordering::less);
}

TEST(PolyCmp, StrictTotalOrderRandomized) {
  std::mt19937_64 rng(5);
  const auto ctx = field_for_order(3);
  for (int i = 0; i < 2000; ++i) {
    const Poly a = random_poly(ctx, 3, rng);
    const Poly b = random_poly(ctx, 3, rng);
    const Poly c = random_poly(ctx, 3, rng);
    const auto ab = poly_cmp(a, b);
    ASSERT_EQ(ab == 0, a == b);
    ASSERT_EQ(ab < 0, poly_cmp(b, a) > 0);
    if (ab < 0 && poly_cmp(b, c) < 0) ASSERT_TRUE(poly_cmp(a, c) < 0);
  }
}

TEST(MonicEnumerator, Examples) {
  const auto f3 = FieldCtx::prime(3);
  EXPECT_EQ(enumerate_monic_below(f3, 1), (std::vector<Poly>{Poly({1})}));
  EXPECT_EQ(enumerate_monic_below(f3, 2),
            (std::vector<Poly>{Poly({1}), Poly({0, 1}), Poly({1, 1}), Poly({2, 1})}));
  EXPECT_EQ(enumerate_monic_below(FieldCtx::prime(5), 2).size(), 6U);
  EXPECT_EQ(error_of([&] { MonicEnumerator(f3, 0); }), Errc::NonpositiveBound);
}

TEST(MonicEnumerator, CountDistinctAndOrdered) {
  for (std::uint64_t q : {3U, 5U, 9U}) {
    const auto ctx = field_for_order(q);
    for (int d = 1; d <= 4; ++d) {
      const auto all = enumerate_monic_below(ctx, d);
      std::uint64_t expected = 0;
      std::uint64_t pw = 1;
      for (int i = 0; i < d; ++i) {
        expected += pw;
        pw *= q;
      }
      ASSERT_EQ(all.size(), expected);
      for (std::size_t i = 0; i < all.size(); ++i) {
        ASSERT_TRUE(all[i].is_monic());
        ASSERT_LT(all[i].degree(), d);
        if (i > 0) ASSERT_TRUE(poly_cmp(all[i - 1], all[i]) < 0);
      }
    }
  }
}

TEST(PolyArith, Derivative) {
  const auto f3 = FieldCtx::prime(3);
  // d/dT (T^3 + 2T^2 + T) = 3T^2 + 4T + 1 = T + 1
  EXPECT_EQ(derivative(f3, Poly({0, 1, 2, 1})), Poly({1, 1}));
}
