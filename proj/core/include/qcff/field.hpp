#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qcff {

/// An element of F_q, held by its canonical encoding
/// enc = sum digits[i] * p^i over the polynomial basis.
struct Fq {
  std::uint32_t enc = 0;

  constexpr Fq() = default;
  constexpr explicit Fq(std::uint32_t v) : enc(v) {}

  constexpr bool is_zero() const noexcept { return enc == 0; }
  constexpr bool is_one() const noexcept { return enc == 1; }

  friend constexpr auto operator<=>(Fq, Fq) = default;
};

/// The finite field F_q, q = p^e with p odd.
///
/// Elements are little-endian coordinate vectors over F_p modulo a monic
/// irreducible `modulus` of degree e. Multiplication goes through
/// exponent/log tables built from the canonical generator gamma, which is
/// the element of smallest encoding whose multiplicative order is q - 1.
///
/// Instances are immutable after construction and safe to share between
/// threads.
class FieldCtx {
 public:
  /// Largest supported field order; tables are O(q).
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// `modulus` holds ascending F_p coefficients of a monic degree-e
  /// polynomial. Required iff e > 1.
  static FieldCtx create(std::uint32_t p, std::uint32_t e,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// The prime field F_p.
  static FieldCtx prime(std::uint32_t p) { return create(p, 1); }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  /// w = q - 1, the order of F_q^*.
  std::uint32_t w() const noexcept { return q_ - 1; }
  Fq gamma() const noexcept { return gamma_; }
  /// Empty when e == 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Fq zero() const noexcept { return Fq{0}; }
  Fq one() const noexcept { return Fq{1}; }
  /// Throws BadElement if v >= q.
  Fq element(std::uint64_t v) const;
  /// The image of the integer n under Z -> F_p -> F_q.
  Fq from_int(std::int64_t n) const noexcept;

  std::vector<std::uint32_t> digits(Fq x) const;
  Fq from_digits(std::span<const std::uint32_t> digits) const;

  Fq add(Fq a, Fq b) const noexcept;
  Fq sub(Fq a, Fq b) const noexcept;
  Fq neg(Fq a) const noexcept;
  Fq mul(Fq a, Fq b) const noexcept;
  /// Throws DivisionByZero on a == 0.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const;
  Fq pow(Fq a, std::uint64_t n) const noexcept;

  /// gamma^k for any integer k (negative allowed).
  Fq gamma_pow(std::int64_t k) const noexcept;

  /// Discrete logarithm to base gamma, in [0, w). Throws LogOfZero.
  std::uint32_t dlog(Fq x) const;

 private:
  FieldCtx() = default;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  Fq gamma_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = gamma^i, length 2w
  std::vector<std::uint32_t> log_;  // log_[x] for x != 0
};

/// Alias matching the usual name for the element type.
using FqElem = Fq;

/// Reference multiplication straight from the coordinate representation,
/// without the log tables. Used to build the tables and by tests.
Fq fq_mul_reference(std::uint32_t p, std::span<const std::uint32_t> modulus, std::uint32_t e, Fq a,
                    Fq b);

/// Ascending F_p coefficients of the first monic irreducible of degree e in
/// canonical polynomial order.
std::vector<std::uint32_t> smallest_irreducible_modulus(std::uint32_t p, std::uint32_t e);

/// F_q for an odd prime power q; when q is not prime the modulus is
/// smallest_irreducible_modulus. Throws NonPrimeP if q is not a prime power.
FieldCtx field_for_order(std::uint64_t q);

bool is_prime_u64(std::uint64_t n) noexcept;
/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace qcff
