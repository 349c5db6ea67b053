#include "qcff/quasicyclo.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qcff/error.hpp"
#include "qcff/factor.hpp"
#include "qcff/poly_io.hpp"
#include "qcff/symbols.hpp"

namespace qcff {

PairSet pairset_create(const FieldCtx& /*ctx*/, const Conductor& c,
                       const std::vector<std::pair<Poly, Poly>>& raw) {
  if (raw.empty()) throw Error(Errc::EmptyPairSet, "at least one prime pair is required");
  PairSet ps;
  ps.firsts.resize(c.factors.size());
  ps.seconds.resize(c.factors.size());
  for (const auto& [p, q] : raw) {
    const int ip = c.index_of(p);
    const int iq = c.index_of(q);
    if (ip < 0) throw Error(Errc::PrimeNotInConductor, format_poly(p) + " is not a prime of M");
    if (iq < 0) throw Error(Errc::PrimeNotInConductor, format_poly(q) + " is not a prime of M");
    if (ip == iq) throw Error(Errc::PairMembersEqual, "pair (" + format_poly(p) + ", " + format_poly(q) + ")");
    if (poly_cmp(p, q) > 0) {
      throw Error(Errc::WrongOrientation,
                  "pair (" + format_poly(p) + ", " + format_poly(q) + ") must satisfy P < Q");
    }
    const PairSet::Pair pair{static_cast<std::size_t>(ip), static_cast<std::size_t>(iq)};
    if (std::find(ps.pairs.begin(), ps.pairs.end(), pair) != ps.pairs.end()) {
      throw Error(Errc::DuplicatePair, "pair (" + format_poly(p) + ", " + format_poly(q) + ") repeated");
    }
    ps.pairs.push_back(pair);
    ps.firsts[pair.first].push_back(pair.second);
    ps.seconds[pair.second].push_back(pair.first);
  }
  return ps;
}

std::optional<FracClass> reduce_class(const FieldCtx& ctx, const Poly& num, const Poly& den) {
  const Poly g = gcd(ctx, num, den);
  const Poly d = div_exact(ctx, den, g);
  if (d.is_constant()) return std::nullopt;
  const Fq lc_inv = ctx.inv(d.lead());
  Poly n = scale(ctx, rem(ctx, div_exact(ctx, num, g), d), lc_inv);
  if (n.is_zero()) return std::nullopt;
  return FracClass{std::move(n), scale(ctx, d, lc_inv)};
}

BigInt a_pq_raw_term_count(const FieldCtx& ctx, int deg_p, int deg_q) {
  const BigInt q = ctx.q();
  const BigInt count_a = (ipow(q, static_cast<std::uint64_t>(deg_q)) - 1) / (q - 1);
  const BigInt count_b = (ipow(q, static_cast<std::uint64_t>(deg_p)) - 1) / (q - 1);
  return (q - 2) * count_a * count_b * 2;
}

FormalSum a_pq_formal(const FieldCtx& ctx, const Poly& p, const Poly& q) {
  for (const Poly* f : {&p, &q}) {
    if (f->is_constant() || !f->is_monic() || !poly_is_irreducible(ctx, *f)) {
      throw Error(Errc::BadPair, format_poly(*f) + " is not a monic prime");
    }
  }
  if (poly_cmp(p, q) >= 0) {
    throw Error(Errc::BadPair, "a_PQ needs P < Q, got (" + format_poly(p) + ", " + format_poly(q) + ")");
  }

  FormalSum sum;
  sum.raw_terms = 0;
  const Poly pq = mul(ctx, p, q);
  const auto as = enumerate_monic_below(ctx, q.degree());
  const auto bs = enumerate_monic_below(ctx, p.degree());
  const auto add_term = [&](const Poly& num, std::int64_t coeff) {
    sum.raw_terms += 1;
    auto cls = reduce_class(ctx, num, pq);
    if (!cls) return;
    auto [it, inserted] = sum.terms.try_emplace(std::move(*cls), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) sum.terms.erase(it);
    }
  };
  for (const auto& a : as) {
    const Poly ap = mul(ctx, a, p);
    for (const auto& b : bs) {
      const Poly bq = mul(ctx, b, q);
      for (std::int64_t s = 1; s + 2 <= static_cast<std::int64_t>(ctx.q()); ++s) {
        const Fq c = ctx.gamma_pow(-s);
        add_term(add(ctx, bq, scale(ctx, a, c)), s);
        add_term(add(ctx, ap, scale(ctx, b, c)), -s);
      }
    }
  }
  return sum;
}

std::string_view to_string(ParityCase c) noexcept {
  switch (c) {
    case ParityCase::Even_Even: return "sin(a_PQ)";
    case ParityCase::Even_Odd: return "sqrt(P)*sin(a_PQ)";
    case ParityCase::Odd_Even: return "sqrt(Q)*sin(a_PQ)";
    case ParityCase::Odd_Odd: return "sqrt(PQ)*sin(a_PQ)";
  }
  return "?";
}

ParityCase parity_case(int deg_p, int deg_q) noexcept {
  const bool pe = deg_p % 2 == 0;
  const bool qe = deg_q % 2 == 0;
  if (pe && qe) return ParityCase::Even_Even;
  if (pe) return ParityCase::Even_Odd;
  if (qe) return ParityCase::Odd_Even;
  return ParityCase::Odd_Odd;
}

namespace {

std::uint32_t log_against(const FieldCtx& ctx, const Conductor& c, std::size_t idx,
                          const std::vector<std::size_t>& partners, bool validate_prime) {
  std::vector<PrimePower> fac;
  for (auto j : partners) fac.push_back(PrimePower{c.factors[j].prime, 1});
  std::sort(fac.begin(), fac.end(),
            [](const PrimePower& a, const PrimePower& b) { return poly_cmp(a.prime, b.prime) < 0; });
  const Poly b = expand(ctx, std::span<const PrimePower>(fac));
  return jacobi_symbol(ctx, c.factors[idx].prime, b, fac, validate_prime).dlog;
}

std::uint32_t index_from_log(std::uint32_t w, std::uint32_t v) { return w / std::gcd(w, v); }

}  // namespace

RamTable ramification_table(const FieldCtx& ctx, const Conductor& c, const PairSet& ps,
                            bool validate_prime) {
  const std::uint32_t w = ctx.w();
  RamTable rt;
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    RamEntry e;
    e.prime = c.factors[i].prime;
    e.degree = c.factors[i].degree();
    e.exp = c.factors[i].exp;
    e.log_firsts = log_against(ctx, c, i, ps.firsts[i], validate_prime);
    e.log_seconds = log_against(ctx, c, i, ps.seconds[i], validate_prime);
    e.vbar = (e.log_firsts + w - e.log_seconds) % w;
    e.e = index_from_log(w, e.vbar);
    rt.entries.push_back(std::move(e));
  }
  for (const auto& pr : ps.pairs) {
    rt.pair_parity.push_back(
        parity_case(c.factors[pr.first].degree(), c.factors[pr.second].degree()));
  }
  return rt;
}

std::pair<std::uint32_t, std::uint32_t> single_pair_ramification(const FieldCtx& ctx,
                                                                 const Poly& p, const Poly& q) {
  const std::uint32_t w = ctx.w();
  const std::uint32_t log_pq = residue_symbol(ctx, p, q).dlog;
  const std::uint32_t log_qp = residue_symbol(ctx, q, p).dlog;
  return {index_from_log(w, log_pq), index_from_log(w, log_qp)};
}

ParityReport parity_consistency(const FieldCtx& /*ctx*/, const PairSet& ps, const RamTable& rt) {
  if (ps.pairs.size() != 1) {
    throw Error(Errc::OnlySinglePairSupported, "parity check needs exactly one pair");
  }
  const auto& pr = ps.pairs.front();
  ParityReport rep;
  rep.deg_p = rt.entries[pr.first].degree;
  rep.deg_q = rt.entries[pr.second].degree;
  rep.e_p = rt.entries[pr.first].e;
  rep.e_q = rt.entries[pr.second].e;
  rep.applicable = (rep.deg_p * rep.deg_q) % 2 == 0;
  rep.pass = !rep.applicable || rep.e_p == rep.e_q;
  return rep;
}

GroupPresentation presentation(const FieldCtx& ctx, const Conductor& c, const PairSet& ps,
                               const RamTable& rt) {
  const GStructure gs = galois_structure(ctx, c);
  GroupPresentation gp;
  gp.epsilon_order = ctx.w();
  gp.p_part_order = gs.p_part_order;
  gp.group_order = BigInt(ctx.w()) * c.phi;

  BigInt prime_to_p = ctx.w();
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    Generator g;
    g.prime_index = i;
    g.prime = c.factors[i].prime;
    g.base_order = gs.cyclic_parts[i];
    g.paired = ps.is_paired(i);
    g.e = g.paired ? rt.entries[i].e : 1;
    if (!g.paired && rt.entries[i].e != 1) {
      throw Error(Errc::OracleFailure, "unpaired prime " + format_poly(g.prime) + " ramifies");
    }
    g.lift_order = g.base_order * g.e;
    g.central = !g.paired;
    prime_to_p *= g.base_order;
    gp.generators.push_back(std::move(g));
  }
  for (const auto& pr : ps.pairs) gp.relations.push_back(Relation{pr.first, pr.second, -1});

  if (gp.p_part_order * prime_to_p != gp.group_order) {
    throw Error(Errc::OracleFailure, "|G~^(p)| * |G~'| != w Phi(M)");
  }
  return gp;
}

GroupPresentation presentation(const FieldCtx& ctx, const Conductor& c, const PairSet& ps) {
  return presentation(ctx, c, ps, ramification_table(ctx, c, ps));
}

BigInt genus_quasi(const FieldCtx& ctx, const Conductor& c, const PairSet& ps, const BigInt& g_k,
                   const RamTable& rt) {
  Rational bracket = Rational(g_k) - 1;
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    if (!ps.is_paired(i)) continue;
    std::vector<PrimePower> others;
    for (std::size_t j = 0; j < c.factors.size(); ++j) {
      if (j != i) others.push_back(c.factors[j]);
    }
    const Rational ramified = 1 - Rational(1, rt.entries[i].e);
    bracket += ramified * c.factors[i].degree() * Rational(poly_phi(ctx, others)) / 2;
  }
  const Rational g = 1 + Rational(ctx.w()) * bracket;
  if (denominator(g) != 1) throw Error(Errc::NonIntegerGenus, "Hasse genus of K~ is not an integer");
  if (g < 0) throw Error(Errc::NegativeGenus, "Hasse genus of K~ is negative");
  return numerator(g);
}

BigInt genus_quasi_assembly(const FieldCtx& ctx, const Conductor& c, const BigInt& g_k,
                            const RamTable& rt) {
  const std::uint32_t w = ctx.w();
  BigInt rhs = BigInt(w) * (2 * g_k - 2);
  for (std::size_t i = 0; i < rt.entries.size(); ++i) {
    const std::uint32_t e = rt.entries[i].e;
    if (w % e != 0) throw Error(Errc::OracleFailure, "ramification index does not divide w");
    const PrimePower local[] = {c.factors[i]};
    const BigInt fg = c.phi / poly_phi(ctx, local);
    // primes of K~ above a prime of K have different exponent e - 1 and
    // total degree (w / e) times its degree
    rhs += BigInt(e - 1) * (w / e) * c.factors[i].degree() * fg;
  }
  if (rhs % 2 != 0) throw Error(Errc::NonIntegerGenus, "Riemann-Hurwitz gives odd 2g~ - 2");
  const BigInt g = rhs / 2 + 1;
  if (g < 0) throw Error(Errc::NegativeGenus, "assembled genus of K~ is negative");
  return g;
}

}  // namespace qcff
