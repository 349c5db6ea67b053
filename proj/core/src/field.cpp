#include "qcff/field.hpp"

#include <string>

#include "qcff/error.hpp"
#include "qcff/poly.hpp"

namespace qcff {

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

std::vector<std::uint32_t> decode(std::uint32_t p, std::uint32_t e, std::uint32_t enc) {
  std::vector<std::uint32_t> d(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = enc % p;
    enc /= p;
  }
  return d;
}

std::uint32_t encode(std::uint32_t p, std::span<const std::uint32_t> digits) {
  std::uint32_t enc = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) enc = enc * p + *it;
  return enc;
}

Fq pow_reference(std::uint32_t p, std::span<const std::uint32_t> modulus, std::uint32_t e, Fq a,
                 std::uint64_t n) {
  Fq result{1};
  while (n != 0) {
    if (n & 1U) result = fq_mul_reference(p, modulus, e, result, a);
    n >>= 1U;
    if (n != 0) a = fq_mul_reference(p, modulus, e, a, a);
  }
  return result;
}

}  // namespace

Fq fq_mul_reference(std::uint32_t p, std::span<const std::uint32_t> modulus, std::uint32_t e, Fq a,
                    Fq b) {
  if (e == 1) {
    return Fq{static_cast<std::uint32_t>(std::uint64_t{a.enc} * b.enc % p)};
  }
  const auto da = decode(p, e, a.enc);
  const auto db = decode(p, e, b.enc);
  std::vector<std::uint64_t> prod(2 * e - 1, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    for (std::uint32_t j = 0; j < e; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
    }
  }
  // modulus is monic of degree e: x^e = -sum_{i<e} m_i x^i
  for (std::size_t k = prod.size(); k-- > e;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < e; ++i) {
      const std::uint64_t sub = c * modulus[i] % p;
      prod[k - e + i] = (prod[k - e + i] + p - sub) % p;
    }
  }
  std::vector<std::uint32_t> digits(e);
  for (std::uint32_t i = 0; i < e; ++i) digits[i] = static_cast<std::uint32_t>(prod[i]);
  return Fq{encode(p, digits)};
}

FieldCtx FieldCtx::create(std::uint32_t p, std::uint32_t e,
                          std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime_u64(p)) throw Error(Errc::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  if (e == 0) throw Error(Errc::BadModulus, "extension degree must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(Errc::FieldTooLarge,
                  "q = p^e exceeds the supported maximum " + std::to_string(kMaxOrder));
    }
  }

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.e_ = e;
  ctx.q_ = static_cast<std::uint32_t>(q);

  if (e == 1) {
    if (modulus.has_value()) {
      throw Error(Errc::BadModulus, "a modulus is only meaningful for e > 1");
    }
  } else {
    if (!modulus.has_value()) {
      throw Error(Errc::MissingModulus, "e > 1 requires a degree-e modulus over F_p");
    }
    const auto& m = *modulus;
    if (m.size() != e + 1 || m.back() != 1) {
      throw Error(Errc::BadModulus, "modulus must be monic of degree " + std::to_string(e));
    }
    for (auto c : m) {
      if (c >= p) throw Error(Errc::BadModulus, "modulus coefficient out of range");
    }
    const FieldCtx base = FieldCtx::prime(p);
    std::vector<Fq> coeffs;
    coeffs.reserve(m.size());
    for (auto c : m) coeffs.emplace_back(c);
    if (!poly_is_irreducible(base, Poly(std::move(coeffs)))) {
      throw Error(Errc::ReducibleModulus, "modulus is reducible over F_p");
    }
    ctx.modulus_ = m;
  }

  const std::uint32_t w = ctx.q_ - 1;
  const auto factors = prime_divisors(w);
  const std::span<const std::uint32_t> mod{ctx.modulus_};
  for (std::uint32_t cand = 2; cand < ctx.q_; ++cand) {
    bool full = true;
    for (auto r : factors) {
      if (pow_reference(p, mod, e, Fq{cand}, w / r).is_one()) {
        full = false;
        break;
      }
    }
    if (full) {
      ctx.gamma_ = Fq{cand};
      break;
    }
  }

  ctx.exp_.assign(2 * std::size_t{w}, 0);
  ctx.log_.assign(ctx.q_, 0);
  Fq x{1};
  for (std::uint32_t i = 0; i < w; ++i) {
    ctx.exp_[i] = x.enc;
    ctx.exp_[i + w] = x.enc;
    ctx.log_[x.enc] = i;
    x = fq_mul_reference(p, mod, e, x, ctx.gamma_);
  }
  return ctx;
}

Fq FieldCtx::element(std::uint64_t v) const {
  if (v >= q_) {
    throw Error(Errc::BadElement,
                "element encoding " + std::to_string(v) + " is not below q = " + std::to_string(q_));
  }
  return Fq{static_cast<std::uint32_t>(v)};
}

Fq FieldCtx::from_int(std::int64_t n) const noexcept {
  const auto pp = static_cast<std::int64_t>(p_);
  return Fq{static_cast<std::uint32_t>(((n % pp) + pp) % pp)};
}

std::vector<std::uint32_t> FieldCtx::digits(Fq x) const { return decode(p_, e_, x.enc); }

Fq FieldCtx::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != e_) throw Error(Errc::BadElement, "digit vector must have length e");
  for (auto d : digits) {
    if (d >= p_) throw Error(Errc::BadElement, "digit out of range");
  }
  return Fq{encode(p_, digits)};
}

Fq FieldCtx::add(Fq a, Fq b) const noexcept {
  if (e_ == 1) return Fq{(a.enc + b.enc) % p_};
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a.enc;
  std::uint32_t y = b.enc;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Fq{out};
}

Fq FieldCtx::neg(Fq a) const noexcept {
  if (e_ == 1) return Fq{(p_ - a.enc) % p_};
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a.enc;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return Fq{out};
}

Fq FieldCtx::sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }

Fq FieldCtx::mul(Fq a, Fq b) const noexcept {
  if (a.is_zero() || b.is_zero()) return Fq{0};
  return Fq{exp_[std::size_t{log_[a.enc]} + log_[b.enc]]};
}

Fq FieldCtx::inv(Fq a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in F_q");
  const std::uint32_t l = log_[a.enc];
  return Fq{exp_[l == 0 ? 0 : w() - l]};
}

Fq FieldCtx::div(Fq a, Fq b) const { return mul(a, inv(b)); }

Fq FieldCtx::pow(Fq a, std::uint64_t n) const noexcept {
  if (n == 0) return one();
  if (a.is_zero()) return zero();
  const std::uint64_t l = (std::uint64_t{log_[a.enc]} * (n % w())) % w();
  return Fq{exp_[l]};
}

Fq FieldCtx::gamma_pow(std::int64_t k) const noexcept {
  const auto ww = static_cast<std::int64_t>(w());
  return Fq{exp_[static_cast<std::size_t>(((k % ww) + ww) % ww)]};
}

std::uint32_t FieldCtx::dlog(Fq x) const {
  if (x.is_zero()) throw Error(Errc::LogOfZero, "discrete logarithm of zero");
  if (x.enc >= q_) throw Error(Errc::BadElement, "element encoding out of range");
  return log_[x.enc];
}

std::vector<std::uint32_t> smallest_irreducible_modulus(std::uint32_t p, std::uint32_t e) {
  const FieldCtx base = FieldCtx::prime(p);
  MonicEnumerator it(base, static_cast<int>(e) + 1);
  Poly f;
  while (it.next(f)) {
    if (f.degree() == static_cast<int>(e) && poly_is_irreducible(base, f)) {
      std::vector<std::uint32_t> out;
      for (auto c : f.coeffs()) out.push_back(c.enc);
      return out;
    }
  }
  throw Error(Errc::BadModulus, "no irreducible of degree " + std::to_string(e));
}

FieldCtx field_for_order(std::uint64_t q) {
  if (q > FieldCtx::kMaxOrder) {
    throw Error(Errc::FieldTooLarge, "q = " + std::to_string(q) + " is too large");
  }
  const auto primes = prime_divisors(q);
  if (q < 2 || primes.size() != 1) {
    throw Error(Errc::NonPrimeP, "q = " + std::to_string(q) + " is not a prime power");
  }
  const auto p = static_cast<std::uint32_t>(primes.front());
  std::uint32_t e = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++e;
  if (e == 1) return FieldCtx::create(p, 1);
  if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  return FieldCtx::create(p, e, smallest_irreducible_modulus(p, e));
}

}  // namespace qcff
