#include "qcff/job_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qcff/error.hpp"
#include "qcff/poly_io.hpp"

namespace qcff {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(Errc::ConfigError, msg); }

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) fail("unknown key '" + key + "' in " + where);
  }
}

std::uint64_t get_uint(const json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    fail(what + " must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

bool get_bool(const json& v, const std::string& what) {
  if (!v.is_boolean()) fail(what + " must be a boolean");
  return v.get<bool>();
}

PolySpec get_poly(const json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::vector<std::int64_t> coeffs;
    for (const auto& c : v) {
      if (!c.is_number_integer()) fail(what + ": coefficient arrays hold integers only");
      coeffs.push_back(c.get<std::int64_t>());
    }
    return coeffs;
  }
  fail(what + " must be a polynomial string or an array of coefficient encodings");
}

bool is_factor_list(const json& v) {
  return v.is_array() && !v.empty() && v.front().is_array();
}

std::vector<std::pair<PolySpec, std::uint32_t>> get_factors(const json& v) {
  if (!v.is_array() || v.empty()) fail("conductor factors must be a nonempty array");
  std::vector<std::pair<PolySpec, std::uint32_t>> out;
  for (const auto& entry : v) {
    if (!entry.is_array() || entry.size() != 2) fail("each conductor factor must be [poly, exp]");
    const auto exp = get_uint(entry[1], "factor exponent");
    if (exp == 0 || exp > 1'000'000) fail("factor exponent must be in [1, 1000000]");
    out.emplace_back(get_poly(entry[0], "conductor factor"), static_cast<std::uint32_t>(exp));
  }
  return out;
}

}  // namespace

JobConfig parse_job_config(const json& j) {
  if (!j.is_object()) fail("config must be a JSON object");
  reject_unknown_keys(j, {"schema_version", "q", "p", "e", "modulus", "rng_seed", "conductor", "pairs", "options"},
                      "config");
  JobConfig cfg;

  if (j.contains("schema_version") && get_uint(j["schema_version"], "schema_version") != kConfigSchemaVersion) {
    fail("unsupported schema_version");
  }

  if (j.contains("q")) {
    const auto q = get_uint(j["q"], "q");
    const auto primes = prime_divisors(q);
    if (q < 2 || primes.size() != 1) fail("q must be a prime power");
    cfg.p = static_cast<std::uint32_t>(primes.front());
    cfg.e = 0;
    for (std::uint64_t r = q; r > 1; r /= cfg.p) ++cfg.e;
    if (j.contains("p") && get_uint(j["p"], "p") != cfg.p) fail("p disagrees with q");
    if (j.contains("e") && get_uint(j["e"], "e") != cfg.e) fail("e disagrees with q");
  } else {
    if (!j.contains("p")) fail("missing required key 'p' (or 'q')");
    const auto p = get_uint(j["p"], "p");
    if (p > 0xffffffffULL) fail("p out of range");
    cfg.p = static_cast<std::uint32_t>(p);
    if (j.contains("e")) {
      const auto e = get_uint(j["e"], "e");
      if (e == 0 || e > 64) fail("e must be in [1, 64]");
      cfg.e = static_cast<std::uint32_t>(e);
    }
  }
  if (j.contains("modulus")) cfg.modulus = get_poly(j["modulus"], "modulus");
  if (j.contains("rng_seed")) cfg.rng_seed = get_uint(j["rng_seed"], "rng_seed");

  if (!j.contains("conductor")) fail("missing required key 'conductor'");
  const json& cond = j["conductor"];
  if (cond.is_object()) {
    reject_unknown_keys(cond, {"poly", "factors"}, "conductor");
    if (cond.contains("poly") == cond.contains("factors")) {
      fail("conductor needs exactly one of 'poly' or 'factors'");
    }
    if (cond.contains("poly")) {
      cfg.conductor.poly = get_poly(cond["poly"], "conductor");
    } else {
      cfg.conductor.factors = get_factors(cond["factors"]);
    }
  } else if (is_factor_list(cond)) {
    cfg.conductor.factors = get_factors(cond);
  } else {
    cfg.conductor.poly = get_poly(cond, "conductor");
  }

  if (j.contains("pairs")) {
    if (!j["pairs"].is_array()) fail("pairs must be an array");
    for (const auto& pr : j["pairs"]) {
      if (!pr.is_array() || pr.size() != 2) fail("each pair must be [P, Q]");
      cfg.pairs.emplace_back(get_poly(pr[0], "pair member"), get_poly(pr[1], "pair member"));
    }
  }

  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) fail("options must be an object");
    reject_unknown_keys(o, {"validate_primality", "emit_a_pq", "run_oracles", "a_pq_cap"}, "options");
    if (o.contains("validate_primality")) cfg.options.validate_primality = get_bool(o["validate_primality"], "validate_primality");
    if (o.contains("emit_a_pq")) cfg.options.emit_a_pq = get_bool(o["emit_a_pq"], "emit_a_pq");
    if (o.contains("run_oracles")) cfg.options.run_oracles = get_bool(o["run_oracles"], "run_oracles");
    if (o.contains("a_pq_cap")) cfg.options.a_pq_cap = get_uint(o["a_pq_cap"], "a_pq_cap");
  }
  return cfg;
}

JobConfig load_job_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return parse_job_config(j);
}

FieldCtx resolve_field(const JobConfig& cfg) {
  std::optional<std::vector<std::uint32_t>> modulus;
  if (cfg.modulus) {
    if (cfg.p < 2) throw Error(Errc::NonPrimeP, "p = " + std::to_string(cfg.p) + " is not prime");
    // The modulus lives over F_p; parse it there with either indeterminate.
    const FieldCtx base = FieldCtx::prime(cfg.p);
    const auto* text = std::get_if<std::string>(&*cfg.modulus);
    const char var = (text != nullptr && text->find('x') != std::string::npos) ? 'x' : 'T';
    const Poly m = resolve_poly(base, *cfg.modulus, var);
    modulus = to_coeff_array(m);
  }
  return FieldCtx::create(cfg.p, cfg.e, std::move(modulus));
}

Poly resolve_poly(const FieldCtx& ctx, const PolySpec& spec, char var) {
  if (const auto* text = std::get_if<std::string>(&spec)) return parse_poly(ctx, *text, var);
  return from_coeff_array(ctx, std::get<std::vector<std::int64_t>>(spec));
}

}  // namespace qcff
