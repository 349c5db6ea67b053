#include "qcff/selfcheck.hpp"

#include <random>
#include <set>

#include "qcff/cyclotomic.hpp"
#include "qcff/error.hpp"
#include "qcff/factor.hpp"
#include "qcff/poly_io.hpp"
#include "qcff/quasicyclo.hpp"
#include "qcff/symbols.hpp"

namespace qcff {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok) {
      if (result_.failures == 0) result_.first_failure = what;
      ++result_.failures;
    }
  }

  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::vector<Poly> primes_up_to(const FieldCtx& ctx, int max_degree) {
  std::vector<Poly> out;
  for (int d = 1; d <= max_degree; ++d) {
    for (auto& p : enumerate_monic_primes(ctx, d)) out.push_back(std::move(p));
  }
  return out;
}

// Every polynomial of degree < deg, zero included.
std::vector<Poly> residues(const FieldCtx& ctx, int deg) {
  std::vector<Poly> out;
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(deg), 0);
  for (;;) {
    std::vector<Fq> c;
    for (auto d : digits) c.emplace_back(d);
    out.emplace_back(std::move(c));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == ctx.q()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

SuiteResult reciprocity_suite(const FieldCtx& ctx, int max_degree) {
  Suite s("reciprocity F_" + std::to_string(ctx.q()) + " deg<=" + std::to_string(max_degree));
  const auto primes = primes_up_to(ctx, max_degree);
  for (const auto& a : primes) {
    for (const auto& b : primes) {
      if (a == b) continue;
      s.check(check_reciprocity(ctx, a, b), "(" + format_poly(a) + ", " + format_poly(b) + ")");
    }
  }
  return s.done();
}

SuiteResult phi_suite(const FieldCtx& ctx, int max_degree) {
  Suite s("phi brute force F_" + std::to_string(ctx.q()) + " deg<=" + std::to_string(max_degree));
  for (const auto& m : enumerate_monic_below(ctx, max_degree + 1)) {
    if (m.is_constant()) continue;
    BigInt units = 0;
    for (const auto& r : residues(ctx, m.degree())) {
      if (!r.is_zero() && gcd(ctx, r, m).is_one()) ++units;
    }
    const auto fac = poly_factor(ctx, m);
    s.check(poly_phi(ctx, fac.factors) == units, format_poly(m));
  }
  return s.done();
}

SuiteResult character_suite(const FieldCtx& ctx, int max_degree) {
  Suite s("symbol character F_" + std::to_string(ctx.q()) + " deg<=" + std::to_string(max_degree));
  for (const auto& r : primes_up_to(ctx, max_degree)) {
    std::set<Poly, PolyLess> powers;
    const auto res = residues(ctx, r.degree());
    for (const auto& x : res) {
      if (!x.is_zero()) powers.insert(powmod(ctx, x, std::uint64_t{ctx.w()}, r));
    }
    for (const auto& a : res) {
      if (a.is_zero()) continue;
      const bool is_one = residue_symbol(ctx, a, r).value.is_one();
      s.check(is_one == powers.contains(a), "(" + format_poly(a) + " / " + format_poly(r) + ")");
    }
  }
  return s.done();
}

SuiteResult genus_k_suite(const FieldCtx& ctx, int max_degree) {
  Suite s("genus K paths F_" + std::to_string(ctx.q()) + " deg<=" + std::to_string(max_degree));
  for (const auto& m : enumerate_monic_below(ctx, max_degree + 1)) {
    if (m.is_constant()) continue;
    const Conductor c = conductor_create(ctx, m);
    const BigInt closed = genus_K_closed(ctx, c);
    const BigInt assembled = genus_K_assembly(ctx, c);
    s.check(closed == assembled && (m.degree() != 1 || closed == 0), format_poly(m));
  }
  return s.done();
}

SuiteResult genus_quasi_suite(const FieldCtx& ctx, int max_degree) {
  Suite s("genus quasi paths F_" + std::to_string(ctx.q()) + " deg<=" + std::to_string(max_degree));
  for (const auto& m : enumerate_monic_below(ctx, max_degree + 1)) {
    if (m.is_constant()) continue;
    const Conductor c = conductor_create(ctx, m);
    const BigInt gk = genus_K_closed(ctx, c);
    for (std::size_t i = 0; i < c.factors.size(); ++i) {
      for (std::size_t j = i + 1; j < c.factors.size(); ++j) {
        const PairSet ps = pairset_create(ctx, c, {{c.factors[i].prime, c.factors[j].prime}});
        const RamTable rt = ramification_table(ctx, c, ps);
        const std::string what = format_poly(m) + " pair " + std::to_string(i) + "," + std::to_string(j);
        try {
          s.check(genus_quasi(ctx, c, ps, gk, rt) == genus_quasi_assembly(ctx, c, gk, rt), what);
        } catch (const Error& e) {
          s.check(false, what + ": " + e.what());
        }
      }
    }
  }
  return s.done();
}

SuiteResult parity_suite(const FieldCtx& ctx, int max_degree) {
  Suite s("parity consistency F_" + std::to_string(ctx.q()) + " deg<=" + std::to_string(max_degree));
  const auto primes = primes_up_to(ctx, max_degree);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (poly_cmp(primes[i], primes[j]) >= 0) continue;
      if ((primes[i].degree() * primes[j].degree()) % 2 != 0) continue;
      const Conductor c = conductor_create(ctx, {PrimePower{primes[i], 1}, PrimePower{primes[j], 1}});
      const PairSet ps = pairset_create(ctx, c, {{primes[i], primes[j]}});
      const auto rep = parity_consistency(ctx, ps, ramification_table(ctx, c, ps));
      s.check(rep.pass, "(" + format_poly(primes[i]) + ", " + format_poly(primes[j]) + ")");
    }
  }
  return s.done();
}

SuiteResult factor_suite(std::uint64_t seed, int count) {
  Suite s("factor round trip F_3 F_5 F_9 deg<=8");
  std::mt19937_64 rng(seed);
  for (std::uint64_t q : {3U, 5U, 9U}) {
    const FieldCtx ctx = field_for_order(q);
    std::uniform_int_distribution<std::uint32_t> coeff(0, ctx.q() - 1);
    std::uniform_int_distribution<int> degree(1, 8);
    for (int n = 0; n < count; ++n) {
      std::vector<Fq> c(static_cast<std::size_t>(degree(rng)) + 1);
      for (auto& x : c) x = Fq{coeff(rng)};
      if (c.back().is_zero()) c.back() = ctx.one();
      const Poly f(std::move(c));
      const auto fac = poly_factor(ctx, f, rng());
      bool ok = expand(ctx, fac) == f;
      for (const auto& pp : fac.factors) ok = ok && pp.prime.is_monic() && poly_is_irreducible(ctx, pp.prime);
      s.check(ok, format_poly(f) + " over F_" + std::to_string(q));
    }
  }
  return s.done();
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(SelfcheckScope scope, std::uint64_t seed,
                                       const std::function<void(const SuiteResult&)>& on_suite) {
  std::vector<SuiteResult> out;
  const auto record = [&](SuiteResult r) {
    if (on_suite) on_suite(r);
    out.push_back(std::move(r));
  };
  const FieldCtx f3 = FieldCtx::prime(3);
  const FieldCtx f5 = FieldCtx::prime(5);
  const bool full = scope == SelfcheckScope::Full;

  record(reciprocity_suite(f3, 3));
  record(phi_suite(f3, 3));
  record(character_suite(f3, 2));
  record(genus_k_suite(f3, full ? 4 : 3));
  record(genus_quasi_suite(f3, full ? 4 : 3));
  record(parity_suite(f3, full ? 3 : 2));
  record(factor_suite(seed, full ? 1000 : 100));
  if (full) {
    record(reciprocity_suite(f5, 2));
    record(phi_suite(f5, 3));
    record(genus_k_suite(f5, 3));
    record(genus_k_suite(FieldCtx::prime(7), 1));
    record(parity_suite(f5, 3));
  }
  return out;
}

}  // namespace qcff
