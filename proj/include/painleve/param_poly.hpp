#pragma once

// Sparse multivariate polynomials over Q(w) in named symbols.
//
// Used for the ODE right-hand sides (symbols x, x', ...), the leading-order
// balance equations, and the symbolic Laurent coefficients whose symbols are
// the arbitrary constants injected at resonances.

#include <map>
#include <string>
#include <vector>

#include "painleve/field.hpp"

namespace painleve {

/// Graded lexicographic order: higher total degree first, then
/// lexicographically larger exponent vector first.
struct GrlexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class ParamPoly {
public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, FieldElem, GrlexGreater>;

  ParamPoly() = default;
  ParamPoly(FieldElem constant);
  ParamPoly(long constant) : ParamPoly(FieldElem(constant)) {}
  ParamPoly(int constant) : ParamPoly(FieldElem(constant)) {}

  static ParamPoly symbol(const std::string& name);
  /// Builds from a variable list (any order) and terms; zero coefficients dropped.
  static ParamPoly from_terms(std::vector<std::string> variables,
                              const std::vector<std::pair<Exponents, FieldElem>>& terms);

  /// Sorted, duplicate-free. May contain symbols absent from every term.
  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElem constant_term() const;
  int total_degree() const;
  /// Degree in one symbol (0 if absent).
  int degree_in(const std::string& name) const;
  /// Symbols that actually occur, sorted.
  std::vector<std::string> used_symbols() const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const FieldElem& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const FieldElem& c) { return a *= c; }
  friend ParamPoly operator*(const FieldElem& c, ParamPoly a) { return a *= c; }
  ParamPoly operator-() const;

  /// Structural equality after dropping unused symbols.
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  ParamPoly pow(unsigned exponent) const;
  ParamPoly derivative(const std::string& name) const;
  ParamPoly conj() const;

  /// Copy with the variable list reduced to used symbols.
  ParamPoly pruned() const;

  /// Exact evaluation; every used symbol must be bound.
  FieldElem evaluate(const std::map<std::string, FieldElem>& values) const;
  Complex evaluate(const std::map<std::string, Complex>& values) const;
  /// Replaces bound symbols by polynomials; unbound symbols stay symbolic.
  ParamPoly substitute(const std::map<std::string, ParamPoly>& values) const;

  /// Canonical text in grlex order, e.g. "-a0^2 - 2*a0*b0 + 1/3".
  std::string to_string() const;

private:
  void align_to(const std::vector<std::string>& vars);
  static std::vector<std::string> merged(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

}  // namespace painleve
