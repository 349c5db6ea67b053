#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qcff {

enum class SelfcheckScope { Small, Full };

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// Description of the first failing case, if any.
  std::string first_failure;
};

/// Runs the exhaustive property suites (reciprocity, Phi by unit counting,
/// the residue-symbol character property, genus path equality, parity
/// consistency, factorization round trips). `on_suite` is called as each
/// suite finishes.
std::vector<SuiteResult> run_selfcheck(SelfcheckScope scope, std::uint64_t seed,
                                       const std::function<void(const SuiteResult&)>& on_suite = {});

}  // namespace qcff
