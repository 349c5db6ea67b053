#include <fstream>
#include <set>

#include <gtest/gtest.h>

#include "qcff/error.hpp"
#include "qcff/poly_io.hpp"
#include "qcff/report.hpp"

using namespace qcff;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::OracleFailure;
}

JobConfig cfg_of(const char* text) { return parse_job_config(json::parse(text)); }

ReportResult run(const char* text, RunOptions opts = {}) { return run_report(cfg_of(text), opts); }

constexpr RunOptions kCycloOnly{.cyclotomic_only = true};

constexpr const char* kFixture =
    R"({"p":3,"conductor":[["T",1],["T+1",1]],"pairs":[["T","T+1"]],"options":{"emit_a_pq":true}})";

// Keys whose string values are polynomials over F_q in T.
// "text" counts only beside a "coeffs" array; relations carry prose text.
const std::set<std::string> kPolyKeys = {"prime", "P", "Q", "num", "den"};

void check_round_trip(const FieldCtx& ctx, const ordered_json& node, int& seen) {
  if (node.is_object()) {
    for (const auto& [key, v] : node.items()) {
      const bool poly_text = key == "text" && node.contains("coeffs");
      if (v.is_string() && (kPolyKeys.contains(key) || poly_text)) {
        const auto s = v.get<std::string>();
        EXPECT_EQ(format_poly(parse_poly(ctx, s)), s) << key;
        ++seen;
      } else {
        check_round_trip(ctx, v, seen);
      }
    }
  } else if (node.is_array()) {
    for (const auto& v : node) check_round_trip(ctx, v, seen);
  }
}

}  // namespace

TEST(JobConfig, Variants) {
  auto c = cfg_of(R"({"q":9,"modulus":"x^2+1","conductor":"T^2+T","pairs":[["T","T+1"]]})");
  EXPECT_EQ(c.p, 3U);
  EXPECT_EQ(c.e, 2U);
  EXPECT_TRUE(c.conductor.poly.has_value());
  EXPECT_EQ(resolve_field(c).q(), 9U);

  c = cfg_of(R"({"p":5,"conductor":{"factors":[[[0,1],2]]},"rng_seed":7})");
  EXPECT_EQ(c.conductor.factors.size(), 1U);
  EXPECT_EQ(c.conductor.factors[0].second, 2U);
  EXPECT_EQ(c.rng_seed, 7U);
  EXPECT_TRUE(c.pairs.empty());

  c = cfg_of(R"({"p":3,"conductor":[0,1,1],"options":{"a_pq_cap":5,"run_oracles":false}})");
  EXPECT_EQ(resolve_poly(resolve_field(c), *c.conductor.poly), Poly({0, 1, 1}));
  EXPECT_EQ(c.options.a_pq_cap, 5U);
  EXPECT_FALSE(c.options.run_oracles);
}

TEST(JobConfig, Errors) {
  for (const char* bad : {
           R"([1,2])",
           R"({"conductor":"T"})",
           R"({"p":3})",
           R"({"p":3,"conductor":"T","extra":1})",
           R"({"p":3,"conductor":"T","options":{"fast":true}})",
           R"({"p":-3,"conductor":"T"})",
           R"({"q":12,"conductor":"T"})",
           R"({"q":9,"p":5,"conductor":"T"})",
           R"({"p":3,"conductor":[["T",0]]})",
           R"({"p":3,"conductor":{"poly":"T","factors":[["T",1]]}})",
           R"({"p":3,"conductor":"T","pairs":[["T"]]})",
           R"({"p":3,"conductor":"T","schema_version":2})",
           R"({"p":3,"conductor":true})",
       }) {
    EXPECT_EQ(error_of([&] { cfg_of(bad); }), Errc::ConfigError) << bad;
  }
  EXPECT_EQ(error_of([] { load_job_config("/nonexistent/cfg.json"); }), Errc::ConfigError);
}

TEST(Report, FixtureValues) {
  const auto res = run(kFixture);
  ASSERT_TRUE(res.consistent);
  const auto& r = res.report;
  EXPECT_EQ(r["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(r["genus_K"]["closed"], "0");
  EXPECT_EQ(r["genus_K"]["assembly"], "0");
  EXPECT_EQ(r["genus_quasi"]["hasse"], "0");
  EXPECT_EQ(r["genus_quasi"]["assembly"], "0");
  EXPECT_EQ(r["presentation"]["group_order"], "8");
  EXPECT_EQ(r["presentation"]["epsilon"]["order"], 2);
  EXPECT_EQ(r["presentation"]["generators"][0]["lift_order"], "4");
  EXPECT_EQ(r["presentation"]["generators"][1]["lift_order"], "2");
  EXPECT_EQ(r["presentation"]["relations"].size(), 1U);
  EXPECT_EQ(r["ramification"][0]["e"], 2);
  EXPECT_EQ(r["ramification"][1]["e"], 1);
  EXPECT_EQ(r["a_pq"][0]["raw_terms"], "2");
  EXPECT_EQ(r["oracles"]["all_pass"], true);
}

TEST(Report, Errors) {
  EXPECT_EQ(error_of([] { run(R"({"p":3,"conductor":[["T",1],["T+1",1]],"pairs":[["T+1","T"]]})"); }),
            Errc::WrongOrientation);
  EXPECT_EQ(error_of([] { run(R"({"p":3,"conductor":[["T",1]]})"); }), Errc::EmptyPairSet);
  EXPECT_EQ(error_of([] { run(R"({"p":3,"conductor":[["T^2+2",1]],"pairs":[]})", kCycloOnly); }),
            Errc::ReducibleClaimedPrime);
  EXPECT_EQ(error_of([] { run(R"({"p":4,"conductor":"T","pairs":[]})", kCycloOnly); }), Errc::NonPrimeP);
  EXPECT_EQ(error_of([] { run(R"({"p":2,"conductor":"T","pairs":[]})", kCycloOnly); }), Errc::EvenCharacteristic);
  EXPECT_EQ(error_of([] { run(R"({"p":3,"e":2,"conductor":"T","pairs":[]})", kCycloOnly); }), Errc::MissingModulus);
  EXPECT_EQ(error_of([] { run(R"({"p":3,"conductor":"T^2","pairs":[["T","T+1"]]})"); }),
            Errc::PrimeNotInConductor);
  EXPECT_EQ(error_of([] { run(R"({"p":3,"conductor":"2*T","pairs":[]})", kCycloOnly); }), Errc::NotMonic);
  EXPECT_EQ(error_of([] { run(R"({"p":3,"conductor":"T+","pairs":[]})", kCycloOnly); }), Errc::ParseError);
}

TEST(Report, CyclotomicOnly) {
  RunOptions opts;
  opts.cyclotomic_only = true;
  const auto res = run(R"({"p":3,"conductor":[["T^2+1",1]]})", opts);
  EXPECT_EQ(res.report["mode"], "cyclotomic");
  EXPECT_EQ(res.report["genus_K"]["closed"], "2");
  EXPECT_FALSE(res.report.contains("genus_quasi"));
  EXPECT_FALSE(res.report.contains("presentation"));
}

TEST(Report, APQCap) {
  constexpr const char* capped =
      R"({"p":3,"conductor":[["T",1],["T+1",1]],"pairs":[["T","T+1"]],"options":{"emit_a_pq":true,"a_pq_cap":1}})";
  EXPECT_EQ(error_of([&] { run(capped); }), Errc::OutputTooLarge);
  RunOptions force;
  force.force_a_pq = true;
  EXPECT_EQ(run(capped, force).report["a_pq"][0]["raw_terms"], "2");
  EXPECT_FALSE(run(R"({"p":3,"conductor":"T^2+T","pairs":[["T","T+1"]]})").report.contains("a_pq"));
}

TEST(Report, Deterministic) {
  constexpr const char* cfg =
      R"({"q":9,"modulus":"x^2+1","conductor":"T^6+T^5+2*T^4+T^2","pairs":[["T","T+1"]],"rng_seed":11,"options":{"emit_a_pq":true}})";
  const auto a = render_json(run(cfg).report);
  const auto b = render_json(run(cfg).report);
  EXPECT_EQ(a, b);
  EXPECT_EQ(render_text(run(cfg).report), render_text(run(cfg).report));
  // the factorization seed does not change the mathematics
  constexpr const char* other =
      R"({"q":9,"modulus":"x^2+1","conductor":"T^6+T^5+2*T^4+T^2","pairs":[["T","T+1"]],"rng_seed":12,"options":{"emit_a_pq":true}})";
  auto ra = run(cfg).report;
  auto rb = run(other).report;
  ra["conventions"].erase("rng_seed");
  rb["conventions"].erase("rng_seed");
  EXPECT_EQ(render_json(ra), render_json(rb));
}

TEST(Report, EveryPolynomialParsesBack) {
  for (const char* cfg : {
           kFixture,
           R"({"q":9,"modulus":"x^2+1","conductor":"T^2+T","pairs":[["T","T+1"]],"options":{"emit_a_pq":true}})",
           R"({"p":5,"conductor":[["T",2],["T^2+2",1],["T+1",1]],"pairs":[["T","T+1"],["T+1","T^2+2"]],"options":{"emit_a_pq":true}})",
       }) {
    const auto cfg_parsed = cfg_of(cfg);
    const auto ctx = resolve_field(cfg_parsed);
    const auto r = run_report(cfg_parsed).report;
    int seen = 0;
    check_round_trip(ctx, r, seen);
    EXPECT_GT(seen, 5);
  }
}

TEST(Report, TextRendering) {
  const auto text = render_text(run(kFixture).report);
  EXPECT_NE(text.find("M = T^2+T = (T) (T+1)"), std::string::npos);
  EXPECT_NE(text.find("sigma~[T] sigma~[T+1] = sigma~[T+1] sigma~[T] epsilon^-1"), std::string::npos);
  EXPECT_NE(text.find("oracles    all pass"), std::string::npos);
}
