#include <doctest.h>

#include "helpers.hpp"
#include "painleve/fixtures.hpp"
#include "painleve/resonance.hpp"

using namespace painleve;
using testing::bal;

TEST_CASE("resonance patterns") {
  const ODESystem sys = paper_system();
  CHECK(resonance_pattern(resonance_report(sys, bal("1/3", "1/3", "1/3"))) == "-1, 1 (3), 2 (2)");
  CHECK(resonance_pattern(resonance_report(sys, bal("2/3", "2/3", "2/3"))) == "-2, -1, 1 (2), 2 (2)");
  CHECK(resonance_pattern(resonance_report(sys, bal("4/3", "-1/6 - 1/6*w", "-1/6 + 1/6*w"))) == "-2, -1 (3), 1 (2)");
  CHECK(resonance_pattern(resonance_report(sys, bal("5/3", "-1/3", "-1/3"))) == "-2 (2), -1 (3), 1");
}

TEST_CASE("every table row has six resonances including -1") {
  const ODESystem sys = paper_system();
  for (const auto& row : table1_rows()) {
    if (row.balance.has_zero) {
      CHECK_THROWS_AS(resonance_report(sys, row.balance), ParticularSolutionBranch);
      continue;
    }
    const ResonanceReport rep = resonance_report(sys, row.balance);
    CHECK(rep.poly.degree() == 6);
    CHECK(resonance_pattern(rep) == row.resonances);
    CHECK(constant_count(rep) == 6);
  }
}

TEST_CASE("branch classification") {
  const ODESystem sys = paper_system();
  CHECK(resonance_report(sys, bal("1/3", "1/3", "1/3")).branch_class == BranchClass::RightSeries);
  CHECK(resonance_report(sys, bal("2/3", "-1/3", "-1/3")).branch_class == BranchClass::MixedAnnulus);
  CHECK(resonance_report(sys, bal("5/3", "-1/3", "-1/3")).branch_class == BranchClass::MixedAnnulus);
}

TEST_CASE("null spaces at the double -1") {
  const ODESystem sys = paper_system();
  const ResonanceReport rep = resonance_report(sys, bal("2/3", "-1/3", "-1/3"));
  const auto& root = rep.roots.front();
  CHECK(std::get<FieldElem>(root.value) == FieldElem(-1));
  CHECK(root.alg_mult == 2);
  CHECK(same_span(root.null_basis, eigenvectors_triplet3_member1().front().basis, 3));
}

TEST_CASE("scalar cubic") {
  // x'' = 2x^3, x ~ 1/tau: resonances -1 and 4.
  const ODESystem sys = parse_system("x'' = 2*x^3");
  const Balance b = Balance::make({Rational(-1)}, {FieldElem(1)});
  const ResonanceReport rep = resonance_report(sys, b);
  CHECK(resonance_pattern(rep) == "-1, 4");
  CHECK(rep.branch_class == BranchClass::RightSeries);
}
