#pragma once

// Resonances (Kovalevskaya exponents) of a balance.

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "painleve/balance.hpp"
#include "painleve/linalg.hpp"
#include "painleve/system.hpp"

namespace painleve {

/// Thrown for balances with a zero coefficient: such branches describe
/// particular solutions and carry no resonance analysis.
class ParticularSolutionBranch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// M(s)_ij = delta_ij (p_i + s)(p_i + s - 1) - dF_i/dx_j - dF_i/dx'_j (p_j + s),
/// partials taken at x = c, x' = p c. Row i collects the coefficient of
/// m_j tau^{p_i - 2 + s} after x_j -> c_j tau^{p_j} + m_j tau^{p_j + s}.
using ResonanceMatrix = Matrix<PolyInS>;

ResonanceMatrix build_resonance_matrix(const ODESystem& sys, const Balance& bal);

enum class BranchClass { RightSeries, MixedAnnulus, LeftSeries };
const char* to_string(BranchClass c);

struct ResonanceRoot {
  std::variant<FieldElem, Complex> value;
  int alg_mult = 0;
  int geo_mult = 0;
  /// Exact null basis of M(value); empty for roots outside Q(w), where
  /// geo_mult comes from a numeric rank.
  std::vector<Vector<FieldElem>> null_basis;

  bool exact() const { return std::holds_alternative<FieldElem>(value); }
  Complex numeric() const {
    return exact() ? std::get<FieldElem>(value).to_complex() : std::get<Complex>(value);
  }
};

struct ResonanceReport {
  Balance balance;
  ResonanceMatrix matrix;
  PolyInS poly;
  std::vector<ResonanceRoot> roots;  ///< ascending
  BranchClass branch_class = BranchClass::RightSeries;
  double tolerance = 1e-10;
};

ResonanceReport resonance_report(const ODESystem& sys, const Balance& bal, double tol = 1e-10);

/// One copy of -1 is the generic resonance; the branch is a right series
/// if every other root is positive, a left series if every other root is
/// negative, and an annulus otherwise. Extra copies of -1 count as negative.
BranchClass classify_branch(const ResonanceReport& report);

/// Sum of geometric multiplicities, the generic -1 included.
int constant_count(const ResonanceReport& report);

/// Root multiset in ascending order as text, e.g. "-1, 1 (3), 2 (2)".
std::string resonance_pattern(const ResonanceReport& report);

}  // namespace painleve
