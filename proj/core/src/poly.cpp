#include "qcff/poly.hpp"

#include <algorithm>
#include <string>

#include "qcff/error.hpp"

namespace qcff {

Poly::Poly(std::vector<Fq> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<std::uint32_t> encs) {
  coeffs_.reserve(encs.size());
  for (auto v : encs) coeffs_.emplace_back(v);
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(Fq c) { return Poly(std::vector<Fq>{c}); }

Poly Poly::monomial(Fq c, std::size_t degree) {
  std::vector<Fq> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::t() { return monomial(Fq{1}, 1); }

std::strong_ordering poly_cmp(const Poly& a, const Poly& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = ca.size(); i-- > 0;) {
    if (auto c = ca[i].enc <=> cb[i].enc; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Poly add(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<Fq> out(std::max(ca.size(), cb.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly neg(const FieldCtx& ctx, const Poly& a) {
  std::vector<Fq> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.neg(a.coeffs()[i]);
  return Poly(std::move(out));
}

Poly sub(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  std::vector<Fq> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(out));
}

Poly mul(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<Fq> out(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].is_zero()) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      out[i + j] = ctx.add(out[i + j], ctx.mul(ca[i], cb[j]));
    }
  }
  return Poly(std::move(out));
}

Poly scale(const FieldCtx& ctx, const Poly& a, Fq c) {
  std::vector<Fq> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.mul(a.coeffs()[i], c);
  return Poly(std::move(out));
}

DivRem divrem(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};

  std::vector<Fq> r = a.coeffs();
  const auto& cb = b.coeffs();
  const std::size_t db = cb.size() - 1;
  const Fq lead_inv = ctx.inv(b.lead());
  std::vector<Fq> quot(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    const Fq c = ctx.mul(r[k], lead_inv);
    quot[k - db] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k - db + j] = ctx.sub(r[k - db + j], ctx.mul(c, cb[j]));
    }
  }
  r.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly rem(const FieldCtx& ctx, const Poly& a, const Poly& b) { return divrem(ctx, a, b).rem; }

Poly div_exact(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  auto [quot, r] = divrem(ctx, a, b);
  if (!r.is_zero()) throw Error(Errc::BadFactorization, "inexact polynomial division");
  return quot;
}

Poly make_monic(const FieldCtx& ctx, const Poly& a) {
  if (a.is_zero()) return a;
  if (a.lead().is_one()) return a;
  return scale(ctx, a, ctx.inv(a.lead()));
}

Poly gcd(const FieldCtx& ctx, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::GcdOfZeros, "gcd(0, 0) is undefined");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = rem(ctx, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(ctx, x);
}

Poly mulmod(const FieldCtx& ctx, const Poly& a, const Poly& b, const Poly& m) {
  return rem(ctx, mul(ctx, a, b), m);
}

namespace {

void check_modulus(const Poly& m) {
  if (m.is_zero()) throw Error(Errc::DivisionByZero, "powmod modulus is zero");
  if (m.is_constant()) throw Error(Errc::ConstantInput, "powmod modulus must be nonconstant");
}

}  // namespace

Poly powmod(const FieldCtx& ctx, const Poly& a, std::uint64_t n, const Poly& m) {
  check_modulus(m);
  Poly result = Poly::constant(ctx.one());
  Poly base = rem(ctx, a, m);
  while (n != 0) {
    if (n & 1U) result = mulmod(ctx, result, base, m);
    n >>= 1U;
    if (n != 0) base = mulmod(ctx, base, base, m);
  }
  return result;
}

Poly powmod(const FieldCtx& ctx, const Poly& a, const BigInt& n, const Poly& m) {
  check_modulus(m);
  if (n < 0) throw Error(Errc::BadElement, "negative exponent");
  Poly result = Poly::constant(ctx.one());
  if (n == 0) return result;
  const Poly base = rem(ctx, a, m);
  for (auto i = static_cast<long>(boost::multiprecision::msb(n)); i >= 0; --i) {
    result = mulmod(ctx, result, result, m);
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) {
      result = mulmod(ctx, result, base, m);
    }
  }
  return result;
}

Poly pow(const FieldCtx& ctx, const Poly& a, std::uint64_t n) {
  Poly result = Poly::constant(ctx.one());
  Poly base = a;
  while (n != 0) {
    if (n & 1U) result = mul(ctx, result, base);
    n >>= 1U;
    if (n != 0) base = mul(ctx, base, base);
  }
  return result;
}

Poly derivative(const FieldCtx& ctx, const Poly& a) {
  if (a.degree() < 1) return {};
  std::vector<Fq> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    out[i - 1] = ctx.mul(ctx.from_int(static_cast<std::int64_t>(i)), a.coeffs()[i]);
  }
  return Poly(std::move(out));
}

bool poly_is_irreducible(const FieldCtx& ctx, const Poly& f) {
  if (f.is_constant()) throw Error(Errc::ConstantInput, "irreducibility of a constant");
  const int n = f.degree();
  if (n == 1) return true;
  const Poly g = make_monic(ctx, f);
  const Poly t = Poly::t();

  // frob[k] = T^{q^k} mod g
  std::vector<Poly> frob(static_cast<std::size_t>(n) + 1);
  frob[0] = t;
  for (int k = 1; k <= n; ++k) frob[k] = powmod(ctx, frob[k - 1], std::uint64_t{ctx.q()}, g);

  if (frob[n] != t) return false;
  for (auto r : prime_divisors(static_cast<std::uint64_t>(n))) {
    const auto k = static_cast<std::size_t>(n / static_cast<int>(r));
    if (!gcd(ctx, sub(ctx, frob[k], t), g).is_one()) return false;
  }
  return true;
}

BigInt poly_norm(const FieldCtx& ctx, int degree) {
  return ipow(BigInt(ctx.q()), static_cast<std::uint64_t>(degree));
}

MonicEnumerator::MonicEnumerator(const FieldCtx& ctx, int bound) : ctx_(&ctx), bound_(bound) {
  if (bound < 1) {
    throw Error(Errc::NonpositiveBound, "degree bound must be >= 1, got " + std::to_string(bound));
  }
}

bool MonicEnumerator::next(Poly& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    std::size_t i = 0;
    const std::uint32_t q = ctx_->q();
    while (i < low_.size() && ++low_[i] == q) {
      low_[i] = 0;
      ++i;
    }
    if (i == low_.size()) {
      ++degree_;
      if (degree_ >= bound_) {
        done_ = true;
        return false;
      }
      low_.assign(static_cast<std::size_t>(degree_), 0);
    }
  }
  std::vector<Fq> coeffs;
  coeffs.reserve(low_.size() + 1);
  for (auto c : low_) coeffs.emplace_back(c);
  coeffs.emplace_back(1);
  out = Poly(std::move(coeffs));
  return true;
}

std::vector<Poly> enumerate_monic_below(const FieldCtx& ctx, int bound) {
  MonicEnumerator it(ctx, bound);
  std::vector<Poly> out;
  Poly f;
  while (it.next(f)) out.push_back(f);
  return out;
}

std::vector<Poly> enumerate_monic_of_degree(const FieldCtx& ctx, int degree) {
  std::vector<Poly> out;
  MonicEnumerator it(ctx, degree + 1);
  Poly f;
  while (it.next(f)) {
    if (f.degree() == degree) out.push_back(f);
  }
  return out;
}

std::vector<Poly> enumerate_monic_primes(const FieldCtx& ctx, int degree) {
  std::vector<Poly> out;
  for (auto& f : enumerate_monic_of_degree(ctx, degree)) {
    if (poly_is_irreducible(ctx, f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace qcff
