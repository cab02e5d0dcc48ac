#pragma once

// Leading-order (all terms dominant) balances x_i ~ c_i tau^{p_i}.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "painleve/field.hpp"
#include "painleve/param_poly.hpp"
#include "painleve/system.hpp"

namespace painleve {

struct Balance {
  std::vector<Rational> exponents;
  std::vector<FieldElem> coeffs;
  bool has_zero = false;

  static Balance make(std::vector<Rational> exponents, std::vector<FieldElem> coeffs);
  Balance conj() const;
};

bool operator==(const Balance& a, const Balance& b);
inline bool operator!=(const Balance& a, const Balance& b) { return !(a == b); }
std::string to_string(const Balance& b);

struct BalanceEquations {
  std::vector<std::string> symbols;  ///< coefficient symbols c_x, c_y, ...
  std::vector<Rational> exponents;
  std::vector<ParamPoly> polys;
};

class BalanceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The unique p with every monomial x^a x'^b of F_i of weight p_i - 2.
/// Throws BalanceError if no such p exists or it is not unique.
std::vector<Rational> dominant_exponents(const ODESystem& sys);

/// p_i (p_i - 1) c_i - F_i(c, p c) for each equation.
BalanceEquations leading_order_equations(const ODESystem& sys, const std::vector<Rational>& p);

std::vector<FieldElem> verify_balance(const BalanceEquations& eqs, const Balance& cand);

struct NewtonConfig {
  int starts = 10000;
  double tol = 1e-12;
  int max_iter = 100;
  double cluster_tol = 1e-8;
  double radius = 3.0;
  std::uint64_t seed = 1;
};

struct NumericBalance {
  std::vector<Complex> coeffs;
  double residual = 0;
  bool has_zero = false;
  std::optional<Balance> exact;  ///< set when recognised and verified in Q(w)
};

struct NumericEnumeration {
  std::vector<NumericBalance> roots;
  long bezout_bound = 0;
  int starts = 0;
  int converged_starts = 0;
  std::vector<std::string> warnings;
};

/// Multi-start Newton from uniform starts in the complex ball of the given
/// radius, followed by deflated restarts while fewer than the Bezout bound
/// distinct roots are known. Roots are clustered at cluster_tol and sorted.
NumericEnumeration enumerate_balances_numeric(const BalanceEquations& eqs, const NewtonConfig& cfg = {});

/// Rational reconstruction of each coordinate, accepted only if the exact
/// residual vanishes.
std::optional<Balance> recognize_exact(const BalanceEquations& eqs, const std::vector<Complex>& coeffs);

/// The 27 exact solutions of the fixture's leading-order system in the
/// order of the published table.
std::vector<Balance> table1_balances();

}  // namespace painleve
