#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcff/field.hpp"
#include "qcff/poly.hpp"

namespace qcff {

/// Canonical text form, highest degree first: "2*T^3+T+1". Coefficients are
/// field encodings; a coefficient of 1 is omitted on non-constant terms. The
/// zero polynomial prints as "0".
std::string format_poly(const Poly& f, char var = 'T');

/// Parses the text form. Grammar (whitespace ignored):
///   poly := term ('+' term)*
///   term := c | V | V '^' k | c '*' V | c '*' V '^' k
/// where c and k are decimal integers, c < q, and V is `var`. Terms with the
/// same exponent are summed in F_q. Throws ParseError.
Poly parse_poly(const FieldCtx& ctx, std::string_view text, char var = 'T');

/// Ascending coefficient encodings.
std::vector<std::uint32_t> to_coeff_array(const Poly& f);
/// Throws BadElement on entries outside [0, q).
Poly from_coeff_array(const FieldCtx& ctx, const std::vector<std::int64_t>& coeffs);

}  // namespace qcff
