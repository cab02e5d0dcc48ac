#pragma once

// End-to-end checks of the library against the published reference data.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace painleve {

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  /// 1-based table row to mutate before checking, for mutation testing.
  std::optional<int> corrupt_row;
  /// Criteria to run; empty runs all ten.
  std::set<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

/// "C3  PASS  generic resonance  (0.41 s)  24 balances ..."
std::string format_result(const CriterionResult& r);

}  // namespace painleve
