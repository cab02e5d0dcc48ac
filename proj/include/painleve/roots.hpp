#pragma once

// Roots of univariate polynomials with multiplicities.

#include <stdexcept>
#include <variant>
#include <vector>

#include "painleve/field.hpp"
#include "painleve/upoly.hpp"

namespace painleve {

class RootFindingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct PolyRoot {
  std::variant<FieldElem, Complex> value;
  int multiplicity = 0;

  bool exact() const { return std::holds_alternative<FieldElem>(value); }
  Complex numeric() const {
    return exact() ? std::get<FieldElem>(value).to_complex() : std::get<Complex>(value);
  }
};

/// All roots of p. Rational roots come from a divisor search on the
/// primitive integer form of gcd(re part, w part) and are removed by exact
/// deflation; the rest go through a square-free split and Aberth iteration,
/// with exact recognition in Q(w) attempted on the result.
/// Multiplicities sum to deg p. Sorted by (real, imag).
std::vector<PolyRoot> roots_with_multiplicity(const PolyInS& p, double tol = 1e-10);

/// Simultaneous Aberth-Ehrlich iteration. Throws RootFindingError if the
/// iteration does not settle within max_iter sweeps.
std::vector<Complex> aberth_roots(const UPoly<Complex>& p, double tol = 1e-14, int max_iter = 500);

/// Yun's square-free decomposition over Q(w): factors[k] has simple roots
/// which are exactly the roots of multiplicity k + 1.
std::vector<PolyInS> squarefree_factors(const PolyInS& p);

/// Rational roots of a polynomial over Q (without multiplicity).
std::vector<Rational> rational_roots(const UPoly<Rational>& p);

}  // namespace painleve
