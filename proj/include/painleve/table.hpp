#pragma once

// Ordering and grouping of balances for display.

#include <optional>
#include <string>
#include <vector>

#include "painleve/resonance.hpp"

namespace painleve {

/// Diagonal substitution x_i -> e^{k_i} x_i (e a primitive cube root of
/// unity) that maps the system to itself with F_i -> e^{k_i} F_i. Returns the
/// exponents k of the first nontrivial one with k_0 = 0, if any.
std::optional<std::vector<int>> cyclic_symmetry(const ODESystem& sys);

struct TableEntry {
  int group = 0;   ///< triplet number, 0 for ungrouped rows
  int member = 0;  ///< 1-based position inside the group
  Balance balance;
  std::optional<ResonanceReport> report;  ///< absent for rows with a zero coefficient
};

struct BalanceTable {
  std::vector<TableEntry> rows;
  std::optional<std::vector<int>> symmetry;
  int groups = 0;
};

/// Rows ascend by the first coefficient. At equal first coefficient, rows with
/// a zero coefficient come first, then orbits of the cyclic symmetry ordered
/// by their count of -1 resonances and then by Im of the second coefficient
/// of the lead member, descending. The lead member is the one whose second
/// and third coefficients have a real ratio; the others follow by
/// (Im, Re) of the second coefficient.
BalanceTable build_table(const ODESystem& sys, const std::vector<Balance>& balances, double tol = 1e-10);

/// Fixed-width text rendering with exact coefficients.
std::string render_table(const BalanceTable& table, const std::vector<std::string>& var_names);

}  // namespace painleve
