#include <random>

#include <benchmark/benchmark.h>

#include "qcff/cyclotomic.hpp"
#include "qcff/factor.hpp"
#include "qcff/quasicyclo.hpp"
#include "qcff/symbols.hpp"

using namespace qcff;

namespace {

Poly random_monic(const FieldCtx& ctx, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> c(0, ctx.q() - 1);
  std::vector<Fq> v(static_cast<std::size_t>(deg) + 1);
  for (auto& x : v) x = Fq{c(rng)};
  v.back() = ctx.one();
  return Poly(std::move(v));
}

Poly random_prime(const FieldCtx& ctx, int deg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    Poly f = random_monic(ctx, deg, rng);
    if (poly_is_irreducible(ctx, f)) return f;
  }
}

void BM_PolyMul(benchmark::State& state) {
  const auto ctx = field_for_order(9);
  std::mt19937_64 rng(1);
  const Poly a = random_monic(ctx, static_cast<int>(state.range(0)), rng);
  const Poly b = random_monic(ctx, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(mul(ctx, a, b));
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32)->Arg(128);

void BM_PowMod(benchmark::State& state) {
  const auto ctx = FieldCtx::prime(5);
  std::mt19937_64 rng(2);
  const Poly m = random_monic(ctx, static_cast<int>(state.range(0)), rng);
  const Poly a = random_monic(ctx, static_cast<int>(state.range(0)) - 1, rng);
  const BigInt k = ipow(BigInt(5), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(powmod(ctx, a, k, m));
}
BENCHMARK(BM_PowMod)->Arg(8)->Arg(24);

void BM_Factor(benchmark::State& state) {
  const auto ctx = field_for_order(static_cast<std::uint64_t>(state.range(0)));
  std::mt19937_64 rng(3);
  const Poly f = random_monic(ctx, static_cast<int>(state.range(1)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(poly_factor(ctx, f, 0));
}
BENCHMARK(BM_Factor)->Args({3, 8})->Args({9, 8})->Args({5, 24});

void BM_ResidueSymbol(benchmark::State& state) {
  const auto ctx = FieldCtx::prime(7);
  const Poly r = random_prime(ctx, static_cast<int>(state.range(0)), 40);
  std::mt19937_64 rng(4);
  const Poly a = random_monic(ctx, static_cast<int>(state.range(0)) - 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(residue_symbol(ctx, a, r));
}
BENCHMARK(BM_ResidueSymbol)->Arg(2)->Arg(6)->Arg(12);

void BM_APQ(benchmark::State& state) {
  const auto ctx = FieldCtx::prime(static_cast<std::uint32_t>(state.range(0)));
  const Poly p = Poly::t();
  const Poly q = random_prime(ctx, static_cast<int>(state.range(1)), 41);
  for (auto _ : state) benchmark::DoNotOptimize(a_pq_formal(ctx, p, q));
}
BENCHMARK(BM_APQ)->Args({3, 3})->Args({5, 2});

void BM_Genus(benchmark::State& state) {
  const auto ctx = FieldCtx::prime(3);
  const Poly t({0, 1}), t1({1, 1});
  const auto c = conductor_create(ctx, {{t, 3}, {t1, 2}, {random_prime(ctx, 5, 42), 1}});
  const auto ps = pairset_create(ctx, c, {{t, t1}});
  for (auto _ : state) {
    const BigInt gk = genus_K_closed(ctx, c);
    const auto rt = ramification_table(ctx, c, ps);
    benchmark::DoNotOptimize(genus_quasi(ctx, c, ps, gk, rt));
  }
}
BENCHMARK(BM_Genus);

}  // namespace

BENCHMARK_MAIN();
