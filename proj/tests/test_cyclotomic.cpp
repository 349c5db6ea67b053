#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcff/cyclotomic.hpp"
#include "qcff/error.hpp"
#include "qcff/poly_io.hpp"

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

const Poly kT = Poly({0, 1});
const Poly kT1 = Poly({1, 1});
const Poly kT2p1 = Poly({1, 0, 1});

BigInt genus_of(std::uint64_t q, std::vector<PrimePower> f) {
  const auto ctx = field_for_order(q);
  const auto c = conductor_create(ctx, std::move(f));
  const auto a = genus_K_closed(ctx, c);
  EXPECT_EQ(a, genus_K_assembly(ctx, c));
  return a;
}

}  // namespace

TEST(Conductor, FromFactorsSortsAndMultiplies) {
  const auto f3 = FieldCtx::prime(3);
  const auto c = conductor_create(f3, {{kT2p1, 1}, {kT1, 2}, {kT, 1}});
  ASSERT_EQ(c.factors.size(), 3U);
  EXPECT_EQ(c.factors[0].prime, kT);
  EXPECT_EQ(c.factors[1].prime, kT1);
  EXPECT_EQ(c.factors[2].prime, kT2p1);
  EXPECT_EQ(c.degree(), 5);
  EXPECT_EQ(c.modulus, mul(f3, mul(f3, kT, mul(f3, kT1, kT1)), kT2p1));
  // Phi = 2 * (3 * 2) * 8
  EXPECT_EQ(c.phi, BigInt(96));
  EXPECT_EQ(c.index_of(kT1), 1);
  EXPECT_EQ(c.index_of(Poly({2, 1})), -1);
}

TEST(Conductor, FromPolynomial) {
  const auto f3 = FieldCtx::prime(3);
  const auto c = conductor_create(f3, mul(f3, kT2p1, mul(f3, kT, kT)));
  ASSERT_EQ(c.factors.size(), 2U);
  EXPECT_EQ(c.factors[0], (PrimePower{kT, 2}));
  EXPECT_EQ(c.factors[1], (PrimePower{kT2p1, 1}));
}

TEST(Conductor, Errors) {
  const auto f3 = FieldCtx::prime(3);
  EXPECT_EQ(error_of([&] { conductor_create(f3, std::vector<PrimePower>{}); }),
            Errc::ConstantConductor);
  EXPECT_EQ(error_of([&] { conductor_create(f3, Poly({1})); }), Errc::ConstantConductor);
  EXPECT_EQ(error_of([&] { conductor_create(f3, Poly({1, 2})); }), Errc::NotMonic);
  EXPECT_EQ(error_of([&] { conductor_create(f3, {{Poly({2, 0, 1}), 1}}); }),
            Errc::ReducibleClaimedPrime);
  EXPECT_EQ(error_of([&] { conductor_create(f3, {{Poly({2}), 1}}); }),
            Errc::ReducibleClaimedPrime);
  EXPECT_EQ(error_of([&] { conductor_create(f3, {{Poly({0, 2}), 1}}); }), Errc::NotMonic);
  EXPECT_EQ(error_of([&] { conductor_create(f3, {{kT, 1}, {kT, 2}}); }), Errc::DuplicatePrime);
  EXPECT_EQ(error_of([&] { conductor_create(f3, {{kT, 0}}); }), Errc::BadFactorization);
}

TEST(GaloisStructure, Examples) {
  const auto f3 = FieldCtx::prime(3);
  auto g = galois_structure(f3, conductor_create(f3, {{kT, 1}}));
  EXPECT_EQ(g.cyclic_parts, std::vector<BigInt>{2});
  EXPECT_EQ(g.p_part_order, 1);
  EXPECT_EQ(g.total_order, 2);

  g = galois_structure(f3, conductor_create(f3, {{kT, 2}}));
  EXPECT_EQ(g.cyclic_parts, std::vector<BigInt>{2});
  EXPECT_EQ(g.p_part_order, 3);
  EXPECT_EQ(g.total_order, 6);

  g = galois_structure(f3, conductor_create(f3, {{kT, 1}, {kT2p1, 1}}));
  EXPECT_EQ(g.cyclic_parts, (std::vector<BigInt>{2, 8}));
  EXPECT_EQ(g.p_part_order, 1);
  EXPECT_EQ(g.total_order, 16);
}

TEST(Different, Exponents) {
  const auto f3 = FieldCtx::prime(3);
  EXPECT_EQ(different_data(f3, conductor_create(f3, {{kT, 1}})).primes[0].s, 1);
  EXPECT_EQ(different_data(f3, conductor_create(f3, {{kT, 2}})).primes[0].s, 9);
  EXPECT_EQ(different_data(f3, conductor_create(f3, {{kT2p1, 1}})).primes[0].s, 7);

  const auto d = different_data(f3, conductor_create(f3, {{kT, 1}, {kT2p1, 1}}));
  EXPECT_EQ(d.primes[0].phi_co, 8);
  EXPECT_EQ(d.primes[1].phi_co, 2);
  EXPECT_EQ(d.infinite_count, 8);
  EXPECT_EQ(d.infinite_diff_coeff, 1);
}

TEST(GenusK, Fixtures) {
  EXPECT_EQ(genus_of(3, {{kT, 1}}), 0);
  EXPECT_EQ(genus_of(3, {{kT, 1}, {kT1, 1}}), 0);
  EXPECT_EQ(genus_of(3, {{kT2p1, 1}}), 2);
  EXPECT_EQ(genus_of(5, {{kT, 1}}), 0);
}

TEST(GenusK, LinearConductorsHaveGenusZero) {
  for (std::uint64_t q : {3U, 5U, 7U, 9U, 11U}) {
    const auto ctx = field_for_order(q);
    for (const auto& p : oracle::primes_up_to(ctx, 1)) {
      const auto c = conductor_create(ctx, {{p, 1}});
      EXPECT_EQ(genus_K_closed(ctx, c), 0) << q;
      EXPECT_EQ(genus_K_assembly(ctx, c), 0) << q;
    }
  }
}

TEST(GenusK, PathsAgreeExhaustively) {
  for (auto [q, max_deg] : {std::pair{3, 4}, std::pair{5, 3}, std::pair{7, 2}, std::pair{9, 2}}) {
    const auto ctx = field_for_order(static_cast<std::uint64_t>(q));
    for (int d = 1; d <= max_deg; ++d) {
      for (const auto& m : enumerate_monic_of_degree(ctx, d)) {
        const auto c = conductor_create(ctx, m);
        const auto g = genus_K_closed(ctx, c);
        ASSERT_EQ(g, genus_K_assembly(ctx, c)) << format_poly(m);
        ASSERT_GE(g, 0);
      }
    }
  }
}

TEST(GenusK, QMinusOneDividesPhi) {
  for (std::uint64_t q : {3U, 5U, 9U}) {
    const auto ctx = field_for_order(q);
    for (const auto& m : enumerate_monic_of_degree(ctx, 3)) {
      const auto c = conductor_create(ctx, m);
      ASSERT_EQ(c.phi % (q - 1), 0);
      ASSERT_EQ(c.phi, BigInt(oracle::unit_count(ctx, m))) << format_poly(m);
    }
  }
}

TEST(GenusK, FactorOrderDoesNotMatter) {
  const auto f5 = FieldCtx::prime(5);
  std::vector<PrimePower> f = {{Poly({0, 1}), 2}, {Poly({2, 0, 1}), 1}, {Poly({1, 1}), 1}};
  const auto base = genus_K_closed(f5, conductor_create(f5, f));
  const auto by_prime = [](const PrimePower& a, const PrimePower& b) {
    return poly_cmp(a.prime, b.prime) < 0;
  };
  std::sort(f.begin(), f.end(), by_prime);
  int seen = 0;
  do {
    EXPECT_EQ(genus_K_closed(f5, conductor_create(f5, f)), base);
    ++seen;
  } while (std::next_permutation(f.begin(), f.end(), by_prime));
  EXPECT_EQ(seen, 6);
}
