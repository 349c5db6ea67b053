#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "qcff/bigint.hpp"
#include "qcff/field.hpp"

namespace qcff {

/// An element of A = F_q[T], coefficients ascending by degree with no
/// trailing zeros. The zero polynomial has an empty coefficient vector and
/// degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Fq> coeffs);
  /// Convenience constructor from raw encodings (ascending degree).
  Poly(std::initializer_list<std::uint32_t> encs);

  static Poly constant(Fq c);
  static Poly monomial(Fq c, std::size_t degree);
  /// The indeterminate T.
  static Poly t();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  /// True for zero and for nonzero constants.
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Fq lead() const noexcept { return coeffs_.empty() ? Fq{} : coeffs_.back(); }
  Fq coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Fq{}; }
  const std::vector<Fq>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();
  std::vector<Fq> coeffs_;
};

/// The canonical total order on A: by degree, then by coefficients from the
/// top down, each compared by encoding.
std::strong_ordering poly_cmp(const Poly& a, const Poly& b) noexcept;

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const noexcept { return poly_cmp(a, b) < 0; }
};

Poly add(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly sub(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly neg(const FieldCtx& ctx, const Poly& a);
Poly mul(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly scale(const FieldCtx& ctx, const Poly& a, Fq c);

struct DivRem {
  Poly quot;
  Poly rem;
};

/// a = quot * b + rem, deg rem < deg b. Throws DivisionByZero.
DivRem divrem(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly rem(const FieldCtx& ctx, const Poly& a, const Poly& b);
/// Exact quotient; throws BadFactorization if b does not divide a.
Poly div_exact(const FieldCtx& ctx, const Poly& a, const Poly& b);

/// Scales a nonzero polynomial to leading coefficient 1.
Poly make_monic(const FieldCtx& ctx, const Poly& a);

/// Monic gcd. Throws GcdOfZeros when both inputs are zero.
Poly gcd(const FieldCtx& ctx, const Poly& a, const Poly& b);

Poly mulmod(const FieldCtx& ctx, const Poly& a, const Poly& b, const Poly& m);

/// a^n mod m by square-and-multiply. m must be nonconstant.
Poly powmod(const FieldCtx& ctx, const Poly& a, std::uint64_t n, const Poly& m);
Poly powmod(const FieldCtx& ctx, const Poly& a, const BigInt& n, const Poly& m);

Poly pow(const FieldCtx& ctx, const Poly& a, std::uint64_t n);
Poly derivative(const FieldCtx& ctx, const Poly& a);

/// Rabin's test: T^{q^n} = T mod f and gcd(T^{q^{n/r}} - T, f) = 1 for
/// every prime r | n. Throws ConstantInput on constant f.
bool poly_is_irreducible(const FieldCtx& ctx, const Poly& f);

/// |f| = q^deg f.
BigInt poly_norm(const FieldCtx& ctx, int degree);

/// Walks every monic polynomial of degree 0, 1, ..., bound - 1 exactly once,
/// in canonical order.
class MonicEnumerator {
 public:
  /// Throws NonpositiveBound if bound < 1.
  MonicEnumerator(const FieldCtx& ctx, int bound);

  /// Writes the next polynomial into `out`; false once exhausted.
  bool next(Poly& out);

 private:
  const FieldCtx* ctx_;
  int bound_;
  int degree_ = 0;
  std::vector<std::uint32_t> low_;  // coefficients below the leading 1
  bool started_ = false;
  bool done_ = false;
};

std::vector<Poly> enumerate_monic_below(const FieldCtx& ctx, int bound);
/// Every monic polynomial of exactly this degree.
std::vector<Poly> enumerate_monic_of_degree(const FieldCtx& ctx, int degree);
/// Every monic irreducible polynomial of exactly this degree.
std::vector<Poly> enumerate_monic_primes(const FieldCtx& ctx, int degree);

}  // namespace qcff
