#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qcff/field.hpp"
#include "qcff/poly.hpp"

namespace qcff {

/// A polynomial as written in a config: either the text form ("2*T^2+T+1")
/// or the canonical ascending array of coefficient encodings.
using PolySpec = std::variant<std::string, std::vector<std::int64_t>>;

struct ConductorSpec {
  /// Set when the conductor was given unfactored.
  std::optional<PolySpec> poly;
  /// Claimed factorization otherwise.
  std::vector<std::pair<PolySpec, std::uint32_t>> factors;
};

struct JobOptions {
  /// Re-run the irreducibility test inside residue-symbol evaluation.
  bool validate_primality = true;
  bool emit_a_pq = false;
  bool run_oracles = true;
  /// a_PQ emission refuses above this many raw terms unless forced.
  std::uint64_t a_pq_cap = 1'000'000;
};

struct JobConfig {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::optional<PolySpec> modulus;
  std::uint64_t rng_seed = 0;
  ConductorSpec conductor;
  std::vector<std::pair<PolySpec, PolySpec>> pairs;
  JobOptions options;
};

inline constexpr int kConfigSchemaVersion = 1;

/// Validates against the config schema; throws ConfigError with the
/// offending key in the message.
JobConfig parse_job_config(const nlohmann::json& j);
/// Reads and parses a JSON config file (ConfigError on I/O or syntax).
JobConfig load_job_config(const std::filesystem::path& path);

/// The field described by the config (p, e, modulus).
FieldCtx resolve_field(const JobConfig& cfg);

/// Resolves a PolySpec over ctx. Text uses the indeterminate `var`.
Poly resolve_poly(const FieldCtx& ctx, const PolySpec& spec, char var = 'T');

}  // namespace qcff
