#include "qcff/symbols.hpp"

#include "qcff/error.hpp"
#include "qcff/poly_io.hpp"

namespace qcff {

SymbolValue residue_symbol(const FieldCtx& ctx, const Poly& a, const Poly& r, bool validate_prime) {
  if (r.is_constant() || !r.is_monic()) {
    throw Error(Errc::NotPrimeModulus, "symbol modulus must be monic and nonconstant");
  }
  if (validate_prime && !poly_is_irreducible(ctx, r)) {
    throw Error(Errc::NotPrimeModulus, format_poly(r) + " is reducible");
  }
  const Poly a_red = rem(ctx, a, r);
  if (a_red.is_zero() || !gcd(ctx, a_red, r).is_one()) {
    throw Error(Errc::NotCoprime, format_poly(a) + " and " + format_poly(r) + " are not coprime");
  }
  const BigInt exponent = (poly_norm(ctx, r.degree()) - 1) / ctx.w();
  const Poly v = powmod(ctx, a_red, exponent, r);
  if (!v.is_constant() || v.is_zero()) {
    throw Error(Errc::NotPrimeModulus,
                "residue power is not a constant modulo " + format_poly(r) + "; modulus reducible");
  }
  const Fq value = v.lead();
  return SymbolValue{value, ctx.dlog(value)};
}

SymbolValue jacobi_symbol(const FieldCtx& ctx, const Poly& a, const Poly& b,
                          std::span<const PrimePower> b_factors, bool validate_prime) {
  if (!b.is_monic()) throw Error(Errc::BadFactorization, "lower entry must be monic");
  if (expand(ctx, b_factors) != b) {
    throw Error(Errc::BadFactorization, "factors do not multiply to " + format_poly(b));
  }
  std::uint64_t log = 0;
  for (const auto& pp : b_factors) {
    const auto s = residue_symbol(ctx, a, pp.prime, validate_prime);
    log = (log + std::uint64_t{s.dlog} * pp.exp) % ctx.w();
  }
  const auto dl = static_cast<std::uint32_t>(log);
  return SymbolValue{ctx.gamma_pow(dl), dl};
}

bool check_reciprocity(const FieldCtx& ctx, const Poly& p1, const Poly& p2) {
  if (p1 == p2) throw Error(Errc::EqualPrimes, "reciprocity needs two distinct primes");
  const Fq lhs = residue_symbol(ctx, p2, p1).value;
  Fq rhs = residue_symbol(ctx, p1, p2).value;
  if ((p1.degree() * p2.degree()) % 2 != 0) rhs = ctx.neg(rhs);
  return lhs == rhs;
}

}  // namespace qcff
