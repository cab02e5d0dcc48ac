#pragma once

// Full analysis pipeline and its JSON document.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "painleve/closed_form.hpp"
#include "painleve/series.hpp"
#include "painleve/table.hpp"

namespace painleve {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

struct AnalyzeOptions {
  std::uint64_t seed = 1;
  double tol = 1e-10;       ///< numeric equality, resonance rank decisions
  int starts = 10000;
  double recognize_tol = 1e-9;
};

struct Analysis {
  ODESystem system;
  std::vector<Rational> exponents;
  NumericEnumeration numeric;
  BalanceTable table;
  /// Numeric roots that were not recognised in Q(w).
  std::vector<NumericBalance> unrecognized;
  AnalyzeOptions options;
  NewtonConfig newton;
};

/// exponents -> balances -> resonance reports -> classification.
Analysis analyze(const ODESystem& sys, const AnalyzeOptions& opt = {});

Json to_json(const Analysis& a);
Json to_json(const SeriesResult& r, int balance_index);
Json to_json(const ResonanceReport& r);
Json error_json(const std::string& kind, const std::string& message, int line = 0, int column = 0);

/// Text block for a series: coefficients per order, injected symbols,
/// compatibility log.
std::string render_series(const SeriesResult& r);

/// Nine closed-form parameters from {"a0": [re, im] | number, ...}; missing
/// keys are zero.
ClosedFormParams<Complex> closed_form_params_from_json(const Json& j);

}  // namespace painleve
