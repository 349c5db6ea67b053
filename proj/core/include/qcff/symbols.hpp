#pragma once

#include <cstdint>
#include <span>

#include "qcff/factor.hpp"
#include "qcff/field.hpp"
#include "qcff/poly.hpp"

namespace qcff {

/// A value of the (q-1)-th power residue symbol, with its logarithm to base
/// gamma.
struct SymbolValue {
  Fq value;
  std::uint32_t dlog = 0;

  friend bool operator==(const SymbolValue&, const SymbolValue&) = default;
};

/// (a / r): the element of F_q^* congruent to a^{(|r|-1)/(q-1)} mod r, for a
/// monic irreducible r not dividing a. With `validate_prime` set, r is run
/// through the irreducibility test first (NotPrimeModulus); otherwise a
/// reducible r is only caught if the power fails to land in F_q.
SymbolValue residue_symbol(const FieldCtx& ctx, const Poly& a, const Poly& r,
                           bool validate_prime = false);

/// (a / b) for composite monic b = prod L_i^{r_i}, extended multiplicatively:
/// prod (a / L_i)^{r_i}. b = 1 gives 1. `b_factors` must multiply back to b
/// (BadFactorization).
SymbolValue jacobi_symbol(const FieldCtx& ctx, const Poly& a, const Poly& b,
                          std::span<const PrimePower> b_factors, bool validate_prime = false);

/// Evaluates both sides of (p2 / p1) = (-1)^{deg p1 deg p2} (p1 / p2)
/// independently and reports whether they agree.
bool check_reciprocity(const FieldCtx& ctx, const Poly& p1, const Poly& p2);

}  // namespace qcff
