#include "qcff/cyclotomic.hpp"

#include <algorithm>
#include <string>

#include "qcff/error.hpp"
#include "qcff/poly_io.hpp"

namespace qcff {

int Conductor::index_of(const Poly& prime) const noexcept {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].prime == prime) return static_cast<int>(i);
  }
  return -1;
}

Conductor conductor_create(const FieldCtx& ctx, std::vector<PrimePower> factors) {
  if (factors.empty()) throw Error(Errc::ConstantConductor, "conductor has no prime factors");
  for (const auto& pp : factors) {
    if (pp.exp == 0) {
      throw Error(Errc::BadFactorization, "exponent of " + format_poly(pp.prime) + " must be >= 1");
    }
    if (pp.prime.is_constant()) {
      throw Error(Errc::ReducibleClaimedPrime, "constant " + format_poly(pp.prime) + " is not a prime");
    }
    if (!pp.prime.is_monic()) throw Error(Errc::NotMonic, format_poly(pp.prime) + " is not monic");
    if (!poly_is_irreducible(ctx, pp.prime)) {
      throw Error(Errc::ReducibleClaimedPrime, format_poly(pp.prime) + " is reducible");
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return poly_cmp(a.prime, b.prime) < 0; });
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].prime == factors[i - 1].prime) {
      throw Error(Errc::DuplicatePrime, format_poly(factors[i].prime) + " listed twice");
    }
  }
  Conductor c;
  c.modulus = expand(ctx, std::span<const PrimePower>(factors));
  c.phi = poly_phi(ctx, factors);
  c.factors = std::move(factors);
  return c;
}

Conductor conductor_create(const FieldCtx& ctx, const Poly& m, std::uint64_t seed) {
  if (m.is_constant()) throw Error(Errc::ConstantConductor, "conductor must be nonconstant");
  if (!m.is_monic()) throw Error(Errc::NotMonic, format_poly(m) + " is not monic");
  return conductor_create(ctx, poly_factor(ctx, m, seed).factors);
}

GStructure galois_structure(const FieldCtx& ctx, const Conductor& c) {
  GStructure g;
  g.p_part_order = 1;
  BigInt cyclic_product = 1;
  for (const auto& pp : c.factors) {
    const BigInt norm = pp.norm(ctx);
    g.cyclic_parts.push_back(norm - 1);
    cyclic_product *= norm - 1;
    g.p_part_order *= ipow(norm, pp.exp - 1);
  }
  g.total_order = c.phi;
  if (g.p_part_order * cyclic_product != g.total_order) {
    throw Error(Errc::OracleFailure, "|G^(p)| * |G'| != Phi(M)");
  }
  return g;
}

DifferentData different_data(const FieldCtx& ctx, const Conductor& c) {
  DifferentData dd;
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    const auto& pp = c.factors[i];
    PrimeDifferent pd;
    pd.prime = pp.prime;
    pd.degree = pp.degree();
    pd.exp = pp.exp;
    const PrimePower local[] = {pp};
    const BigInt phi_local = poly_phi(ctx, local);
    pd.s = BigInt(pp.exp) * phi_local -
           ipow(BigInt(ctx.q()), static_cast<std::uint64_t>(pd.degree) * (pp.exp - 1));
    pd.phi_co = c.phi / phi_local;
    dd.primes.push_back(std::move(pd));
  }
  if (c.phi % ctx.w() != 0) throw Error(Errc::OracleFailure, "(q - 1) does not divide Phi(M)");
  dd.infinite_count = c.phi / ctx.w();
  dd.infinite_diff_coeff = BigInt(ctx.q()) - 2;
  return dd;
}

BigInt genus_K_closed(const FieldCtx& ctx, const Conductor& c) {
  const BigInt q = ctx.q();
  Rational g = (Rational(q - 2, 2 * (q - 1)) - 1) * Rational(c.phi);
  Rational half_sum = 0;
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    const auto& pp = c.factors[i];
    const std::uint64_t d = static_cast<std::uint64_t>(pp.degree());
    // Phi(P^r) and Phi(M/P^r) straight from poly_phi on the factor lists.
    std::vector<PrimePower> others;
    for (std::size_t j = 0; j < c.factors.size(); ++j) {
      if (j != i) others.push_back(c.factors[j]);
    }
    const PrimePower local[] = {pp};
    const BigInt s = BigInt(pp.exp) * poly_phi(ctx, local) - ipow(q, d * (pp.exp - 1));
    half_sum += Rational(s * d * poly_phi(ctx, others));
  }
  g += half_sum / 2 + 1;
  if (denominator(g) != 1) {
    throw Error(Errc::NonIntegerGenus, "closed-form genus of K is not an integer");
  }
  const BigInt out = numerator(g);
  if (out < 0) throw Error(Errc::NegativeGenus, "closed-form genus of K is negative");
  return out;
}

BigInt genus_K_assembly(const FieldCtx& ctx, const Conductor& c) {
  const DifferentData dd = different_data(ctx, c);
  // deg D_{K/k}: finite part, each prime above P_i has degree f_i d_i and
  // there are g_i of them with f_i g_i = Phi(M/P_i^{r_i}).
  BigInt deg_different = 0;
  for (const auto& pd : dd.primes) deg_different += pd.s * pd.degree * pd.phi_co;
  // infinite part: Phi(M)/(q-1) primes of degree 1
  deg_different += dd.infinite_diff_coeff * dd.infinite_count;

  const BigInt two_g_minus_two = c.phi * (-2) + deg_different;
  if (two_g_minus_two % 2 != 0) {
    throw Error(Errc::NonIntegerGenus, "Riemann-Hurwitz assembly gives odd 2g - 2");
  }
  const BigInt g = two_g_minus_two / 2 + 1;
  if (g < 0) throw Error(Errc::NegativeGenus, "assembled genus of K is negative");
  return g;
}

}  // namespace qcff
