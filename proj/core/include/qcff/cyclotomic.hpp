#pragma once

#include <cstdint>
#include <vector>

#include "qcff/bigint.hpp"
#include "qcff/factor.hpp"
#include "qcff/field.hpp"
#include "qcff/poly.hpp"

namespace qcff {

/// The conductor M = prod P_i^{r_i} of the cyclotomic field K = k(e_C(pi/M)).
struct Conductor {
  /// Distinct monic primes, sorted by poly_cmp.
  std::vector<PrimePower> factors;
  Poly modulus;
  BigInt phi;

  int degree() const noexcept { return modulus.degree(); }
  /// Index of `prime` in `factors`, or -1.
  int index_of(const Poly& prime) const noexcept;
};

/// Builds a conductor from a claimed factorization. Every claimed prime is
/// checked monic and irreducible; the input order is irrelevant.
Conductor conductor_create(const FieldCtx& ctx, std::vector<PrimePower> factors);

/// Builds a conductor from a monic nonconstant M, factoring it.
Conductor conductor_create(const FieldCtx& ctx, const Poly& m, std::uint64_t seed = 0);

/// G = Gal(K/k) = G^(p) x <sigma_P1> x ... x <sigma_Pn>.
struct GStructure {
  /// ord(sigma_{P_i}) = |P_i| - 1, in conductor order.
  std::vector<BigInt> cyclic_parts;
  /// prod |P_i|^{r_i - 1}
  BigInt p_part_order;
  /// Phi(M)
  BigInt total_order;
};

GStructure galois_structure(const FieldCtx& ctx, const Conductor& c);

struct PrimeDifferent {
  Poly prime;
  int degree = 0;
  std::uint32_t exp = 0;
  /// s = r Phi(P^r) - q^{d(r-1)}, the exponent of each prime above P in the
  /// different of K/k.
  BigInt s;
  /// Phi(M / P^r) = g_P f_P, the number of primes above P times their
  /// residue degree.
  BigInt phi_co;
};

struct DifferentData {
  std::vector<PrimeDifferent> primes;
  /// Number of primes of K above infinity: Phi(M) / (q - 1).
  BigInt infinite_count;
  /// Different exponent at each of them: q - 2 (tame, e = q - 1).
  BigInt infinite_diff_coeff;
};

DifferentData different_data(const FieldCtx& ctx, const Conductor& c);

/// Genus of K from the closed form
///   g = [(q-2)/(2(q-1)) - 1] Phi(M) + 1/2 sum s_i d_i Phi(M/P_i^{r_i}) + 1
/// in exact rational arithmetic.
BigInt genus_K_closed(const FieldCtx& ctx, const Conductor& c);

/// Genus of K by assembling the different divisor of K/k and applying
/// Riemann-Hurwitz over the genus-0 base:
///   2g - 2 = -2 Phi(M) + sum_i s_i d_i Phi(M/P_i^{r_i}) + (q-2) Phi(M)/(q-1).
BigInt genus_K_assembly(const FieldCtx& ctx, const Conductor& c);

}  // namespace qcff
