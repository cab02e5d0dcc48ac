#pragma once

// Truncated Laurent (Painleve) series about a movable singularity t0,
//   x_i = sum_n c_{n,i} tau^{p_i + d n},  tau = t - t0,
// with d = +1 (ascending, right series) or d = -1 (descending, left series).

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "painleve/param_poly.hpp"
#include "painleve/resonance.hpp"
#include "painleve/system.hpp"

namespace painleve {

enum class SeriesKind { Ascending, Descending };
const char* to_string(SeriesKind k);

struct InjectedSymbol {
  std::string name;  ///< r<k>_<j>, or rm<|k|>_<j> for negative order k
  int order = 0;
  int column = 0;  ///< variable index the symbol sits on
  bool pinned = false;
  std::optional<FieldElem> value;  ///< set when a value was substituted during the recursion
};

struct LaurentSeries {
  SeriesKind kind = SeriesKind::Ascending;
  std::vector<std::string> var_names;
  std::vector<Rational> base_exponents;
  std::vector<std::vector<ParamPoly>> coeffs;  ///< coeffs[n][i]
  std::string t0_symbol = "t0";
  std::vector<InjectedSymbol> injected;

  int direction() const { return kind == SeriesKind::Ascending ? 1 : -1; }
  /// Relative order of coefficient index n.
  int order(std::size_t n) const { return direction() * static_cast<int>(n); }
  int max_index() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Free symbols (injected and not pinned or valued), in injection order.
  std::vector<std::string> free_symbols() const;
};

struct CompatibilityResult {
  int order = 0;
  bool consistent = true;
  std::vector<ParamPoly> obstruction;  ///< zero iff consistent
};

struct SeriesResult {
  LaurentSeries series;
  std::vector<CompatibilityResult> compatibility;
  /// Set when an incompatible resonance stopped the recursion early.
  std::optional<int> halted_at;
};

struct SeriesOptions {
  int max_order = 8;
  /// Injected symbols fixed to zero, e.g. {"r1_0", "r2_1"}.
  std::set<std::string> pinned;
  /// Values substituted for injected symbols as they are created.
  std::map<std::string, FieldElem> injected_values;
  bool allow_branch_mismatch = false;
};

class BranchMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::string injected_symbol_name(int order, int index);

/// Ascending recursion M(k) c_k = G_k for k = 0..max_order. Requires a
/// right-series branch unless allow_branch_mismatch.
SeriesResult build_right_series(const ODESystem& sys, const ResonanceReport& report, const SeriesOptions& opt = {});

/// Descending recursion for k = 0, -1, ..., -max_order. Requires a branch
/// with a negative non-generic resonance unless allow_branch_mismatch.
SeriesResult build_left_series(const ODESystem& sys, const ResonanceReport& report, const SeriesOptions& opt = {});

struct ResidualOrder {
  int equation = 0;
  Rational relative_order;  ///< signed, in the series direction
  Rational tau_power;
};

/// First nonzero coefficient of x_i'' - F_i after substituting the
/// truncated series, scanning powers of tau in the series direction.
/// nullopt means the residual vanishes identically.
std::optional<ResidualOrder> series_residual_order(const ODESystem& sys, const LaurentSeries& series);

/// Per-variable value at t of the truncation.
std::vector<Complex> evaluate_series(const LaurentSeries& series, const std::map<std::string, Complex>& params,
                                     Complex t0, Complex t);

/// Substitutes values (numbers or polynomials) into every coefficient.
LaurentSeries substitute(const LaurentSeries& series, const std::map<std::string, ParamPoly>& values);

}  // namespace painleve
