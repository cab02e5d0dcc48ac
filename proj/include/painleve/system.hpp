#pragma once

// Autonomous polynomial second-order systems x_i'' = F_i(x, x').

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "painleve/field.hpp"
#include "painleve/param_poly.hpp"

namespace painleve {

/// Right-hand sides are ParamPoly values in the symbols "x", "x'", "y", ...
struct ODESystem {
  std::vector<std::string> var_names;
  std::vector<ParamPoly> rhs;

  std::size_t size() const { return var_names.size(); }
};

bool operator==(const ODESystem& a, const ODESystem& b);
inline bool operator!=(const ODESystem& a, const ODESystem& b) { return !(a == b); }

inline std::string prime(const std::string& var, int order = 1) { return var + std::string(order, '\''); }

class ParseError : public std::runtime_error {
public:
  enum class Kind {
    Syntax,
    NonPolynomial,
    NonAutonomous,
    NonlinearSecondDerivative,
    MissingEquation,
    UnknownSymbol
  };

  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

private:
  Kind kind_;
  int line_, column_;
  std::string detail_;
};

const char* to_string(ParseError::Kind kind);

/// Parses one equation per line ("lhs = rhs", or a bare expression meaning
/// "= 0"). An optional "vars x, y, z" line fixes the variable order;
/// otherwise variables are ordered by first appearance of their second
/// derivative. '#' starts a comment. Integers, p/q rationals and the token
/// w (w^2 = -3) are the only constants.
ODESystem parse_system(std::string_view source);

/// A single polynomial expression in the same syntax, e.g. "3/2*(a0 - b0)^2".
ParamPoly parse_polynomial(std::string_view text);

/// Canonical text: a vars line, then "x'' + G = 0" per variable with G = -F
/// in graded lexicographic order.
std::string serialize_system(const ODESystem& sys);

/// The built-in three-variable fixture with explicit closed-form solution.
ODESystem paper_system();
std::string paper_system_text();

/// Dense numeric form of a list of polynomials in a fixed symbol order,
/// for Newton iteration and time stepping.
class CompiledPolys {
public:
  CompiledPolys() = default;
  CompiledPolys(const std::vector<ParamPoly>& polys, const std::vector<std::string>& symbols);

  std::size_t size() const { return polys_.size(); }
  std::size_t arity() const { return arity_; }

  std::vector<Complex> operator()(const std::vector<Complex>& at) const;
  /// Row i, column j: d poly_i / d symbol_j.
  std::vector<std::vector<Complex>> jacobian(const std::vector<Complex>& at) const;

private:
  struct Term {
    Complex coeff;
    std::vector<int> exps;
  };
  std::size_t arity_ = 0;
  std::vector<std::vector<Term>> polys_;
};

/// Symbol order x, x', y, y', ... used by the numeric state vector.
std::vector<std::string> state_symbols(const ODESystem& sys);
CompiledPolys compile_rhs(const ODESystem& sys);

}  // namespace painleve
