#pragma once

#include <string>

#include <json.hpp>

#include "qcff/job_config.hpp"

namespace qcff {

inline constexpr int kReportSchemaVersion = 1;

/// Version string embedded in reports.
const char* version() noexcept;

struct RunOptions {
  /// Report only the cyclotomic layer; pairs may be absent and are ignored.
  bool cyclotomic_only = false;
  /// Lift the a_PQ raw-term cap.
  bool force_a_pq = false;
};

struct ReportResult {
  nlohmann::ordered_json report;
  /// False when the two genus paths disagree or an oracle check failed.
  bool consistent = true;
};

/// Field -> conductor -> pairs -> presentation -> genera. Throws Error for
/// invalid input; internal disagreements are recorded in the report and
/// flagged through `consistent`.
ReportResult run_report(const JobConfig& cfg, const RunOptions& opts = {});

/// Deterministic serializations of a report.
std::string render_json(const nlohmann::ordered_json& report);
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace qcff
