#include "qcff/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "qcff/error.hpp"

namespace qcff {

namespace {

using Multiset = std::map<Poly, std::uint32_t, PolyLess>;

// g(T)^{1/p} for g with nonzero coefficients only at multiples of p.
Poly pth_root(const FieldCtx& ctx, const Poly& g) {
  const std::uint32_t p = ctx.p();
  std::uint64_t root_exp = 1;
  for (std::uint32_t i = 1; i < ctx.e(); ++i) root_exp *= p;
  std::vector<Fq> out(g.coeffs().size() / p + 1);
  for (std::size_t i = 0; i < g.coeffs().size(); i += p) {
    out[i / p] = ctx.pow(g.coeffs()[i], root_exp);
  }
  return Poly(std::move(out));
}

// f monic, nonconstant. Appends (squarefree part, multiplicity) entries.
void squarefree(const FieldCtx& ctx, const Poly& f, std::uint32_t mult,
                std::vector<std::pair<Poly, std::uint32_t>>& out) {
  const Poly df = derivative(ctx, f);
  if (df.is_zero()) {
    squarefree(ctx, pth_root(ctx, f), mult * ctx.p(), out);
    return;
  }
  Poly c = gcd(ctx, f, df);
  Poly w = div_exact(ctx, f, c);
  std::uint32_t i = 1;
  while (!w.is_one()) {
    Poly y = gcd(ctx, w, c);
    Poly fac = div_exact(ctx, w, y);
    if (!fac.is_one()) out.emplace_back(std::move(fac), i * mult);
    w = std::move(y);
    c = div_exact(ctx, c, w);
    ++i;
  }
  if (!c.is_one()) squarefree(ctx, pth_root(ctx, c), mult * ctx.p(), out);
}

// f monic squarefree. Returns (product of all degree-d factors, d).
std::vector<std::pair<Poly, int>> distinct_degree(const FieldCtx& ctx, Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const Poly t = Poly::t();
  Poly h = t;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(ctx, h, std::uint64_t{ctx.q()}, f);
    Poly g = gcd(ctx, sub(ctx, h, t), f);
    if (!g.is_one()) {
      f = div_exact(ctx, f, g);
      h = rem(ctx, h, f.is_constant() ? t : f);
      out.emplace_back(std::move(g), d);
    }
  }
  if (!f.is_one()) {
    const int d = f.degree();
    out.emplace_back(std::move(f), d);
  }
  return out;
}

Poly random_poly(const FieldCtx& ctx, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, ctx.q() - 1);
  std::vector<Fq> v(static_cast<std::size_t>(below_degree));
  for (auto& c : v) c = Fq{coeff(rng)};
  return Poly(std::move(v));
}

// f monic squarefree, every irreducible factor of degree d.
void equal_degree(const FieldCtx& ctx, const Poly& f, int d, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const BigInt half = (ipow(BigInt(ctx.q()), static_cast<std::uint64_t>(d)) - 1) / 2;
  const Poly one = Poly::constant(ctx.one());
  for (;;) {
    const Poly a = random_poly(ctx, f.degree(), rng);
    if (a.is_constant()) continue;
    Poly g = gcd(ctx, a, f);
    if (g.is_one()) {
      g = gcd(ctx, sub(ctx, powmod(ctx, a, half, f), one), f);
    }
    if (!g.is_one() && g.degree() < f.degree()) {
      equal_degree(ctx, g, d, rng, out);
      equal_degree(ctx, div_exact(ctx, f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization poly_factor(const FieldCtx& ctx, const Poly& f, std::uint64_t seed) {
  if (f.is_constant()) throw Error(Errc::ConstantInput, "cannot factor a constant polynomial");
  std::mt19937_64 rng(seed);

  Factorization result;
  result.lead = f.lead();
  std::vector<std::pair<Poly, std::uint32_t>> sqf;
  squarefree(ctx, make_monic(ctx, f), 1, sqf);

  Multiset primes;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(ctx, part)) {
      std::vector<Poly> irreducibles;
      equal_degree(ctx, block, d, rng, irreducibles);
      for (auto& pr : irreducibles) primes[pr] += mult;
    }
  }
  for (auto& [pr, mult] : primes) result.factors.push_back(PrimePower{pr, mult});
  return result;
}

Poly expand(const FieldCtx& ctx, std::span<const PrimePower> factors) {
  Poly acc = Poly::constant(ctx.one());
  for (const auto& pp : factors) acc = mul(ctx, acc, pow(ctx, pp.prime, pp.exp));
  return acc;
}

Poly expand(const FieldCtx& ctx, const Factorization& fac) {
  return scale(ctx, expand(ctx, std::span<const PrimePower>(fac.factors)), fac.lead);
}

BigInt poly_phi(const FieldCtx& ctx, std::span<const PrimePower> factors) {
  BigInt phi = 1;
  for (const auto& pp : factors) {
    const BigInt norm = pp.norm(ctx);
    phi *= ipow(norm, pp.exp - 1) * (norm - 1);
  }
  return phi;
}

}  // namespace qcff
