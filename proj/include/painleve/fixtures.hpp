#pragma once

// Published reference data for the built-in three-equation system.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "painleve/balance.hpp"
#include "painleve/linalg.hpp"

namespace painleve {

struct TableRow {
  int triplet = 0;  ///< 0 for the rows with a vanishing coefficient
  int member = 0;
  Balance balance;
  std::string resonances;  ///< as produced by resonance_pattern; empty for degenerate rows
};

/// All 27 rows, in table order.
const std::vector<TableRow>& table1_rows();

struct EigenFixture {
  FieldElem s;
  std::vector<Vector<FieldElem>> basis;
};

/// Null spaces at the resonances of the first member of the third triplet,
/// ascending in s.
std::vector<EigenFixture> eigenvectors_triplet3_member1();

/// Same for the second member. One entry of the printed table reads
/// (1 - sqrt 3)/2, which is not in the field; it is taken as (1 - i sqrt 3)/2.
std::vector<EigenFixture> eigenvectors_triplet3_member2();

/// The full 3-space at the triple -1 of the eighth triplet.
std::vector<Vector<FieldElem>> triple_minus_one_basis();

struct SeriesDisplay {
  int triplet = 0, member = 0;
  bool ascending = true;
  /// coeffs[n][i]: coefficient of tau^{-1 + n} (ascending) or tau^{-1 - n}.
  std::vector<std::array<ParamPoly, 3>> coeffs;
  /// Injected symbol -> printed expression.
  std::map<std::string, ParamPoly> symbol_map;
};

/// First member of triplet 1 through tau^2, as printed.
SeriesDisplay right_series_display();

/// First member of triplet 3 through tau^-4, as printed.
SeriesDisplay left_series_display();

}  // namespace painleve
