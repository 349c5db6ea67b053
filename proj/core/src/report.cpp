#include "qcff/report.hpp"

#include <sstream>

#include "qcff/cyclotomic.hpp"
#include "qcff/error.hpp"
#include "qcff/factor.hpp"
#include "qcff/poly_io.hpp"
#include "qcff/quasicyclo.hpp"
#include "qcff/symbols.hpp"

#ifndef QCFF_VERSION
#define QCFF_VERSION "0.0.0"
#endif

namespace qcff {

using nlohmann::ordered_json;

const char* version() noexcept { return QCFF_VERSION; }

namespace {

// Above this many residues the unit-count oracle is skipped.
constexpr std::uint64_t kBruteForceResidueLimit = 200'000;

ordered_json poly_json(const Poly& f) {
  ordered_json j;
  j["text"] = format_poly(f);
  j["coeffs"] = to_coeff_array(f);
  return j;
}

std::string big(const BigInt& v) { return to_decimal(v); }

struct OracleLog {
  ordered_json checks = ordered_json::array();
  bool all_pass = true;

  void add(const std::string& name, std::uint64_t cases, std::uint64_t failures) {
    ordered_json c;
    c["name"] = name;
    c["cases"] = cases;
    c["failures"] = failures;
    c["pass"] = failures == 0;
    checks.push_back(std::move(c));
    if (failures != 0) all_pass = false;
  }
};

// Counts residues mod m coprime to m by walking every polynomial of degree
// below deg m.
BigInt count_units(const FieldCtx& ctx, const Poly& m) {
  const auto deg = static_cast<std::size_t>(m.degree());
  std::vector<std::uint32_t> digits(deg, 0);
  BigInt units = 0;
  for (;;) {
    std::vector<Fq> coeffs;
    for (auto d : digits) coeffs.emplace_back(d);
    const Poly r(std::move(coeffs));
    if (!r.is_zero() && gcd(ctx, r, m).is_one()) ++units;
    std::size_t i = 0;
    while (i < deg && ++digits[i] == ctx.q()) digits[i++] = 0;
    if (i == deg) break;
  }
  return units;
}

std::vector<PrimePower> resolve_factors(const FieldCtx& ctx, const JobConfig& cfg) {
  std::vector<PrimePower> out;
  for (const auto& [spec, exp] : cfg.conductor.factors) {
    out.push_back(PrimePower{resolve_poly(ctx, spec), exp});
  }
  return out;
}

}  // namespace

ReportResult run_report(const JobConfig& cfg, const RunOptions& opts) {
  if (!opts.cyclotomic_only && cfg.pairs.empty()) {
    throw Error(Errc::EmptyPairSet,
                "a quasi-cyclotomic report needs at least one pair (use --cyclotomic-only)");
  }
  const FieldCtx ctx = resolve_field(cfg);
  const Conductor cond = cfg.conductor.poly
                             ? conductor_create(ctx, resolve_poly(ctx, *cfg.conductor.poly), cfg.rng_seed)
                             : conductor_create(ctx, resolve_factors(ctx, cfg));

  ReportResult result;
  ordered_json& r = result.report;
  OracleLog oracles;

  r["schema_version"] = kReportSchemaVersion;
  r["tool"] = {{"name", "qcff"}, {"version", version()}};
  r["mode"] = opts.cyclotomic_only ? "cyclotomic" : "quasi-cyclotomic";

  ordered_json field;
  field["p"] = ctx.p();
  field["e"] = ctx.e();
  field["q"] = ctx.q();
  field["w"] = ctx.w();
  if (ctx.e() > 1) {
    std::vector<Fq> m;
    for (auto c : ctx.modulus()) m.emplace_back(c);
    field["modulus"] = poly_json(Poly(std::move(m)));
  } else {
    field["modulus"] = nullptr;
  }
  r["field"] = std::move(field);

  r["conventions"] = {
      {"gamma", ctx.gamma().enc},
      {"gamma_digits", ctx.digits(ctx.gamma())},
      {"gamma_rule", "smallest encoding of multiplicative order q-1"},
      {"element_encoding", "enc = sum digit_i * p^i over the polynomial basis"},
      {"poly_order", "degree first, then coefficients from the top down by encoding"},
      {"rng_seed", cfg.rng_seed},
  };

  // cyclotomic layer
  ordered_json conductor;
  conductor["M"] = poly_json(cond.modulus);
  conductor["degree"] = cond.degree();
  conductor["factors"] = ordered_json::array();
  for (const auto& pp : cond.factors) {
    ordered_json f;
    f["prime"] = poly_json(pp.prime);
    f["exp"] = pp.exp;
    f["degree"] = pp.degree();
    f["norm"] = big(pp.norm(ctx));
    conductor["factors"].push_back(std::move(f));
  }
  conductor["phi"] = big(cond.phi);
  r["conductor"] = std::move(conductor);

  const GStructure gs = galois_structure(ctx, cond);
  ordered_json gk;
  gk["cyclic_parts"] = ordered_json::array();
  for (std::size_t i = 0; i < gs.cyclic_parts.size(); ++i) {
    gk["cyclic_parts"].push_back(
        {{"prime", format_poly(cond.factors[i].prime)}, {"order", big(gs.cyclic_parts[i])}});
  }
  gk["p_part_order"] = big(gs.p_part_order);
  gk["total_order"] = big(gs.total_order);
  r["galois_group_K"] = std::move(gk);

  const DifferentData dd = different_data(ctx, cond);
  ordered_json diff;
  diff["primes"] = ordered_json::array();
  for (const auto& pd : dd.primes) {
    diff["primes"].push_back({{"prime", format_poly(pd.prime)},
                              {"degree", pd.degree},
                              {"exp", pd.exp},
                              {"s", big(pd.s)},
                              {"phi_co", big(pd.phi_co)}});
  }
  diff["infinite_count"] = big(dd.infinite_count);
  diff["infinite_diff_coeff"] = big(dd.infinite_diff_coeff);
  r["different"] = std::move(diff);

  const BigInt g_k = genus_K_closed(ctx, cond);
  const BigInt g_k_rh = genus_K_assembly(ctx, cond);
  const bool gk_agree = g_k == g_k_rh;
  r["genus_K"] = {{"closed", big(g_k)}, {"assembly", big(g_k_rh)}, {"agree", gk_agree}};
  if (!gk_agree) result.consistent = false;

  if (cfg.options.run_oracles) {
    const std::uint64_t fails =
        expand(ctx, std::span<const PrimePower>(cond.factors)) == cond.modulus ? 0 : 1;
    oracles.add("conductor_factorization_round_trip", 1, fails);
    oracles.add("genus_K_paths_agree", 1, gk_agree ? 0 : 1);
    if (ipow(BigInt(ctx.q()), static_cast<std::uint64_t>(cond.degree())) <= kBruteForceResidueLimit) {
      oracles.add("phi_brute_force", 1, count_units(ctx, cond.modulus) == cond.phi ? 0 : 1);
    }
  }

  if (!opts.cyclotomic_only) {
    std::vector<std::pair<Poly, Poly>> raw;
    for (const auto& [a, b] : cfg.pairs) raw.emplace_back(resolve_poly(ctx, a), resolve_poly(ctx, b));
    const PairSet ps = pairset_create(ctx, cond, raw);
    const RamTable rt = ramification_table(ctx, cond, ps, cfg.options.validate_primality);

    r["pairs"] = ordered_json::array();
    for (std::size_t k = 0; k < ps.pairs.size(); ++k) {
      const auto& pr = ps.pairs[k];
      r["pairs"].push_back({{"P", format_poly(cond.factors[pr.first].prime)},
                            {"Q", format_poly(cond.factors[pr.second].prime)},
                            {"u_case", to_string(rt.pair_parity[k])}});
    }

    ordered_json ram = ordered_json::array();
    for (const auto& e : rt.entries) {
      ram.push_back({{"prime", format_poly(e.prime)},
                     {"degree", e.degree},
                     {"exp", e.exp},
                     {"log_firsts", e.log_firsts},
                     {"log_seconds", e.log_seconds},
                     {"vbar", e.vbar},
                     {"e", e.e}});
    }
    r["ramification"] = std::move(ram);

    const GroupPresentation gp = presentation(ctx, cond, ps, rt);
    ordered_json pres;
    pres["group_order"] = big(gp.group_order);
    pres["epsilon"] = {{"order", gp.epsilon_order}, {"central", gp.epsilon_central}};
    pres["p_part"] = {{"order", big(gp.p_part_order)}, {"central", gp.p_part_central}};
    pres["generators"] = ordered_json::array();
    for (const auto& g : gp.generators) {
      pres["generators"].push_back({{"name", "sigma~[" + format_poly(g.prime) + "]"},
                                    {"prime", format_poly(g.prime)},
                                    {"base_order", big(g.base_order)},
                                    {"lift_order", big(g.lift_order)},
                                    {"e", g.e},
                                    {"paired", g.paired},
                                    {"central", g.central}});
    }
    pres["relations"] = ordered_json::array();
    for (const auto& rel : gp.relations) {
      const std::string a = "sigma~[" + format_poly(cond.factors[rel.left].prime) + "]";
      const std::string b = "sigma~[" + format_poly(cond.factors[rel.right].prime) + "]";
      pres["relations"].push_back({{"left", a},
                                   {"right", b},
                                   {"epsilon_exponent", rel.epsilon_exponent},
                                   {"text", a + " " + b + " = " + b + " " + a + " epsilon^-1"}});
    }
    pres["other_pairs_commute"] = true;
    r["presentation"] = std::move(pres);

    const BigInt g_q = genus_quasi(ctx, cond, ps, g_k, rt);
    const BigInt g_q_rh = genus_quasi_assembly(ctx, cond, g_k, rt);
    const bool gq_agree = g_q == g_q_rh;
    r["genus_quasi"] = {{"hasse", big(g_q)}, {"assembly", big(g_q_rh)}, {"agree", gq_agree}};
    if (!gq_agree) result.consistent = false;

    if (cfg.options.emit_a_pq) {
      ordered_json listing = ordered_json::array();
      for (const auto& pr : ps.pairs) {
        const Poly& p = cond.factors[pr.first].prime;
        const Poly& q = cond.factors[pr.second].prime;
        const BigInt raw_count = a_pq_raw_term_count(ctx, p.degree(), q.degree());
        if (!opts.force_a_pq && raw_count > cfg.options.a_pq_cap) {
          throw Error(Errc::OutputTooLarge, "a_PQ for (" + format_poly(p) + ", " + format_poly(q) +
                                                ") has " + big(raw_count) +
                                                " raw terms, above a_pq_cap; pass --force-a-pq");
        }
        const FormalSum fs = a_pq_formal(ctx, p, q);
        ordered_json terms = ordered_json::array();
        for (const auto& [cls, coeff] : fs.terms) {
          terms.push_back({{"num", format_poly(cls.num)}, {"den", format_poly(cls.den)}, {"coeff", coeff}});
        }
        listing.push_back({{"P", format_poly(p)},
                           {"Q", format_poly(q)},
                           {"raw_terms", big(fs.raw_terms)},
                           {"terms", std::move(terms)}});
      }
      r["a_pq"] = std::move(listing);
    }

    if (cfg.options.run_oracles) {
      oracles.add("genus_quasi_paths_agree", 1, gq_agree ? 0 : 1);
      std::uint64_t rec_fail = 0;
      for (const auto& pr : ps.pairs) {
        if (!check_reciprocity(ctx, cond.factors[pr.first].prime, cond.factors[pr.second].prime)) ++rec_fail;
      }
      oracles.add("reciprocity", ps.pairs.size(), rec_fail);
      if (ps.pairs.size() == 1) {
        const auto& pr = ps.pairs.front();
        const auto [ep, eq] = single_pair_ramification(ctx, cond.factors[pr.first].prime,
                                                       cond.factors[pr.second].prime);
        const bool same = ep == rt.entries[pr.first].e && eq == rt.entries[pr.second].e;
        oracles.add("single_pair_ramification", 1, same ? 0 : 1);
        oracles.add("parity_consistency", 1, parity_consistency(ctx, ps, rt).pass ? 0 : 1);
      }
      std::uint64_t lift_fail = 0;
      for (const auto& g : gp.generators) {
        if (g.lift_order != g.base_order * rt.entries[g.prime_index].e) ++lift_fail;
      }
      oracles.add("lift_order_equals_e_times_base", gp.generators.size(), lift_fail);
    }
  }

  r["oracles"] = {{"run", cfg.options.run_oracles}, {"checks", oracles.checks}, {"all_pass", oracles.all_pass}};
  if (!oracles.all_pass) result.consistent = false;
  return result;
}

std::string render_json(const ordered_json& report) { return report.dump(2) + "\n"; }

std::string render_text(const ordered_json& r) {
  std::ostringstream os;
  const auto& f = r["field"];
  os << "qcff " << r["tool"]["version"].get<std::string>() << " (" << r["mode"].get<std::string>()
     << " report, schema " << r["schema_version"].get<int>() << ")\n";
  os << "field      F_" << f["q"].get<std::uint32_t>() << "  p=" << f["p"].get<std::uint32_t>()
     << " e=" << f["e"].get<std::uint32_t>() << " w=" << f["w"].get<std::uint32_t>();
  if (!f["modulus"].is_null()) os << "  modulus " << f["modulus"]["text"].get<std::string>();
  os << "  gamma=" << r["conventions"]["gamma"].get<std::uint32_t>() << "\n";

  const auto& c = r["conductor"];
  os << "conductor  M = " << c["M"]["text"].get<std::string>() << " =";
  for (const auto& fac : c["factors"]) {
    os << " (" << fac["prime"]["text"].get<std::string>() << ")";
    if (fac["exp"].get<std::uint32_t>() != 1) os << "^" << fac["exp"].get<std::uint32_t>();
  }
  os << "\n           Phi(M) = " << c["phi"].get<std::string>() << "\n";

  const auto& g = r["galois_group_K"];
  os << "Gal(K/k)   order " << g["total_order"].get<std::string>() << ", p-part "
     << g["p_part_order"].get<std::string>() << ", cyclic parts";
  for (const auto& cp : g["cyclic_parts"]) os << " " << cp["order"].get<std::string>();
  os << "\n";
  os << "g_K        " << r["genus_K"]["closed"].get<std::string>() << " (closed)  "
     << r["genus_K"]["assembly"].get<std::string>() << " (assembly)\n";

  if (r.contains("presentation")) {
    os << "pairs     ";
    for (const auto& pr : r["pairs"]) {
      os << " (" << pr["P"].get<std::string>() << ", " << pr["Q"].get<std::string>() << ")";
    }
    os << "\nramification\n";
    for (const auto& e : r["ramification"]) {
      os << "  " << e["prime"].get<std::string>() << ": vbar=" << e["vbar"].get<std::uint32_t>()
         << " e=" << e["e"].get<std::uint32_t>() << "\n";
    }
    const auto& p = r["presentation"];
    os << "Gal(K~/k)  order " << p["group_order"].get<std::string>() << ", p-part "
       << p["p_part"]["order"].get<std::string>() << " (central), epsilon of order "
       << p["epsilon"]["order"].get<std::uint32_t>() << " (central)\n";
    for (const auto& gen : p["generators"]) {
      os << "  " << gen["name"].get<std::string>() << "  order " << gen["lift_order"].get<std::string>()
         << " = " << gen["e"].get<std::uint32_t>() << " * " << gen["base_order"].get<std::string>()
         << (gen["central"].get<bool>() ? "  central" : "") << "\n";
    }
    for (const auto& rel : p["relations"]) os << "  " << rel["text"].get<std::string>() << "\n";
    os << "  all other generators commute\n";
    os << "g_K~       " << r["genus_quasi"]["hasse"].get<std::string>() << " (Hasse)  "
       << r["genus_quasi"]["assembly"].get<std::string>() << " (assembly)\n";
  }
  if (r.contains("a_pq")) {
    for (const auto& a : r["a_pq"]) {
      os << "a_PQ (" << a["P"].get<std::string>() << ", " << a["Q"].get<std::string>() << "), "
         << a["raw_terms"].get<std::string>() << " raw terms\n";
      for (const auto& t : a["terms"]) {
        os << "  " << t["coeff"].get<std::int64_t>() << " [(" << t["num"].get<std::string>() << ")/("
           << t["den"].get<std::string>() << ")]\n";
      }
    }
  }
  const auto& o = r["oracles"];
  if (o["run"].get<bool>()) {
    os << "oracles    " << (o["all_pass"].get<bool>() ? "all pass" : "FAILURES") << "\n";
    for (const auto& ch : o["checks"]) {
      os << "  " << (ch["pass"].get<bool>() ? "pass " : "FAIL ") << ch["name"].get<std::string>() << " ("
         << ch["cases"].get<std::uint64_t>() << " cases)\n";
    }
  }
  return os.str();
}

}  // namespace qcff
