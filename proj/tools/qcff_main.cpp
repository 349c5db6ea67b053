// qcff: Galois group presentations and genera of quasi-cyclotomic function
// fields over F_q(T).
//
//   qcff report --config job.json [--out report.json] [--format json|text]
//               [--cyclotomic-only] [--force-a-pq]
//   qcff selfcheck [--scope small|full] [--seed N]
//   qcff factor --q Q --poly "T^2+2*T+1" [--modulus "x^2+1"] [--seed N] [--json]
//
// Exit codes: 0 ok, 1 selfcheck failure, 2 config error, 3 math validation
// error, 4 internal consistency failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcff/error.hpp"
#include "qcff/factor.hpp"
#include "qcff/field.hpp"
#include "qcff/poly_io.hpp"
#include "qcff/report.hpp"
#include "qcff/selfcheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelfcheck = 1;
constexpr int kExitConfig = 2;
constexpr int kExitMath = 3;
constexpr int kExitInternal = 4;

int exit_code_for(const qcff::Error& e) {
  switch (e.kind()) {
    case qcff::ErrorKind::Config: return kExitConfig;
    case qcff::ErrorKind::Math: return kExitMath;
    case qcff::ErrorKind::Internal: return kExitInternal;
  }
  return kExitInternal;
}

int run_report_cmd(const std::string& config, const std::string& out, const std::string& format,
                   const qcff::RunOptions& opts) {
  const auto cfg = qcff::load_job_config(config);
  const auto result = qcff::run_report(cfg, opts);
  const std::string text =
      format == "text" ? qcff::render_text(result.report) : qcff::render_json(result.report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw qcff::Error(qcff::Errc::ConfigError, "cannot write '" + out + "'");
    f << text;
  }
  if (!result.consistent) {
    std::cerr << "error: internal consistency check failed (see oracles / genus sections)\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_selfcheck_cmd(const std::string& scope, std::uint64_t seed) {
  const auto s = scope == "full" ? qcff::SelfcheckScope::Full : qcff::SelfcheckScope::Small;
  std::uint64_t failures = 0;
  qcff::run_selfcheck(s, seed, [&](const qcff::SuiteResult& r) {
    std::cout << (r.failures == 0 ? "pass " : "FAIL ") << r.name << ": " << r.cases << " cases";
    if (r.failures != 0) std::cout << ", " << r.failures << " failures, first " << r.first_failure;
    std::cout << std::endl;
    failures += r.failures;
  });
  std::cout << (failures == 0 ? "selfcheck passed" : "selfcheck FAILED") << "\n";
  return failures == 0 ? kExitOk : kExitSelfcheck;
}

int run_factor_cmd(std::uint64_t q, const std::string& poly, const std::string& modulus,
                   std::uint64_t seed, bool as_json) {
  qcff::FieldCtx ctx = [&] {
    if (modulus.empty()) return qcff::field_for_order(q);
    qcff::JobConfig cfg;
    cfg.p = 0;
    const auto primes = qcff::prime_divisors(q);
    if (q < 2 || primes.size() != 1) {
      throw qcff::Error(qcff::Errc::NonPrimeP, "q = " + std::to_string(q) + " is not a prime power");
    }
    cfg.p = static_cast<std::uint32_t>(primes.front());
    cfg.e = 0;
    for (std::uint64_t r = q; r > 1; r /= cfg.p) ++cfg.e;
    cfg.modulus = modulus;
    return qcff::resolve_field(cfg);
  }();
  const qcff::Poly f = qcff::parse_poly(ctx, poly);
  const auto fac = qcff::poly_factor(ctx, f, seed);
  if (as_json) {
    nlohmann::ordered_json j;
    j["q"] = ctx.q();
    j["poly"] = qcff::format_poly(f);
    j["lead"] = fac.lead.enc;
    j["factors"] = nlohmann::ordered_json::array();
    for (const auto& pp : fac.factors) {
      j["factors"].push_back({{"prime", qcff::format_poly(pp.prime)}, {"exp", pp.exp}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << fac.lead.enc;
  for (const auto& pp : fac.factors) {
    std::cout << " * (" << qcff::format_poly(pp.prime) << ")";
    if (pp.exp != 1) std::cout << "^" << pp.exp;
  }
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois groups and genera of quasi-cyclotomic function fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qcff::version());

  std::string config, out, format = "json";
  qcff::RunOptions run_opts;
  auto* report = app.add_subcommand("report", "run the full pipeline on a JSON job config");
  report->add_option("--config", config, "job config file")->required();
  report->add_option("--out", out, "write the report here instead of stdout");
  report->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  report->add_flag("--cyclotomic-only", run_opts.cyclotomic_only, "report only g_K; pairs may be empty");
  report->add_flag("--force-a-pq", run_opts.force_a_pq, "ignore the a_PQ raw-term cap");

  std::string scope = "small";
  std::uint64_t seed = 0;
  auto* selfcheck = app.add_subcommand("selfcheck", "run the exhaustive property suites");
  selfcheck->add_option("--scope", scope, "small or full")->check(CLI::IsMember({"small", "full"}));
  selfcheck->add_option("--seed", seed, "seed for randomized suites");

  std::uint64_t q = 0;
  std::string poly, modulus;
  bool as_json = false;
  std::uint64_t factor_seed = 0;
  auto* factor = app.add_subcommand("factor", "factor a polynomial over F_q");
  factor->add_option("--q", q, "field order")->required();
  factor->add_option("--poly", poly, "polynomial, e.g. 2*T^3+T+1")->required();
  factor->add_option("--modulus", modulus, "defining polynomial of F_q over F_p (default: smallest irreducible)");
  factor->add_option("--seed", factor_seed, "seed for equal-degree splitting");
  factor->add_flag("--json", as_json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (report->parsed()) return run_report_cmd(config, out, format, run_opts);
    if (selfcheck->parsed()) return run_selfcheck_cmd(scope, seed);
    if (factor->parsed()) return run_factor_cmd(q, poly, modulus, factor_seed, as_json);
  } catch (const qcff::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
