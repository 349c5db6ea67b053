#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcff/bigint.hpp"
#include "qcff/field.hpp"
#include "qcff/poly.hpp"

namespace qcff {

/// A monic irreducible P together with an exponent r >= 1.
struct PrimePower {
  Poly prime;
  std::uint32_t exp = 1;

  int degree() const noexcept { return prime.degree(); }
  BigInt norm(const FieldCtx& ctx) const { return poly_norm(ctx, prime.degree()); }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  Fq lead;
  /// Pairwise distinct monic primes, sorted by poly_cmp.
  std::vector<PrimePower> factors;
};

/// Squarefree decomposition, distinct-degree splitting and Cantor-Zassenhaus
/// equal-degree splitting. `seed` drives the random splitting polynomials;
/// the result itself does not depend on it.
Factorization poly_factor(const FieldCtx& ctx, const Poly& f, std::uint64_t seed = 0);

/// lead * prod prime^exp.
Poly expand(const FieldCtx& ctx, const Factorization& fac);
Poly expand(const FieldCtx& ctx, std::span<const PrimePower> factors);

/// Phi(M) = |(A/M)^*| = prod q^{d(r-1)} (q^d - 1). Empty input gives 1.
BigInt poly_phi(const FieldCtx& ctx, std::span<const PrimePower> factors);

}  // namespace qcff
