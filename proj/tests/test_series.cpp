#include <doctest.h>

#include "helpers.hpp"
#include "painleve/fixtures.hpp"
#include "painleve/series.hpp"

using namespace painleve;
using testing::bal;
using testing::pp;

namespace {

SeriesResult right(int max_order) {
  const ODESystem sys = paper_system();
  SeriesOptions opt;
  opt.max_order = max_order;
  return build_right_series(sys, resonance_report(sys, bal("1/3", "1/3", "1/3")), opt);
}

}  // namespace

TEST_CASE("leading term only") {
  const SeriesResult r = right(0);
  REQUIRE(r.series.coeffs.size() == 1);
  CHECK(r.series.coeffs[0][0] == pp("1/3"));
  CHECK(r.series.injected.empty());
}

TEST_CASE("triplet 1 through tau^1") {
  const SeriesResult r = right(2);
  const LaurentSeries s = substitute(r.series, right_series_display().symbol_map);
  CHECK(s.coeffs[1][0] == pp("a0"));
  CHECK(s.coeffs[2][0] == pp("-(b1 + c1 + (a0 + b0 + c0)^2)"));
  CHECK(s.coeffs[2][1] == pp("b1"));
  CHECK(r.series.injected.size() == 5);
  for (const auto& c : r.compatibility) CHECK(c.consistent);
}

TEST_CASE("tau^2 coefficients") {
  // y and z agree with the printed series; x is the unique solution of the
  // recursion at that order.
  const SeriesResult r = right(3);
  const SeriesDisplay d = right_series_display();
  const LaurentSeries s = substitute(r.series, d.symbol_map);
  CHECK(s.coeffs[3][1] == d.coeffs[3][1]);
  CHECK(s.coeffs[3][2] == d.coeffs[3][2]);
  CHECK(s.coeffs[3][0] == pp("a0^3 + 3*a0^2*b0 + 3*a0^2*c0 + 3/2*a0*b0^2 + 3/2*a0*b1 + 3/2*a0*c0^2 + 3/2*a0*c1 - "
                             "1/2*b0^3 - 3/2*b0*c1 - 3/2*b1*c0 - 1/2*c0^3"));
}

TEST_CASE("residual order grows with truncation") {
  const ODESystem sys = paper_system();
  const SeriesResult r = right(8);
  LaurentSeries t = r.series;
  t.coeffs.resize(4);
  auto ro = series_residual_order(sys, t);
  REQUIRE(ro);
  CHECK(ro->relative_order == Rational(4));
  CHECK(ro->tau_power == Rational(1));
  ro = series_residual_order(sys, r.series);
  REQUIRE(ro);
  CHECK(ro->relative_order >= Rational(9));
}

TEST_CASE("printed x coefficient at tau^2 leaves a residual") {
  const ODESystem sys = paper_system();
  const SeriesDisplay d = right_series_display();
  LaurentSeries s = substitute(right(3).series, d.symbol_map);
  CHECK(series_residual_order(sys, s)->relative_order == Rational(4));
  s.coeffs[3][0] = d.coeffs[3][0];
  const auto ro = series_residual_order(sys, s);
  REQUIRE(ro);
  CHECK(ro->equation == 0);
  CHECK(ro->relative_order == Rational(3));
}

TEST_CASE("left series of triplet 3") {
  const ODESystem sys = paper_system();
  SeriesOptions opt;
  opt.max_order = 4;
  const SeriesResult r = build_left_series(sys, resonance_report(sys, bal("2/3", "-1/3", "-1/3")), opt);
  REQUIRE(r.series.injected.size() == 2);
  CHECK(r.series.injected[0].name == "rm1_0");
  CHECK(r.series.injected[1].name == "rm1_1");
  const SeriesDisplay d = left_series_display();
  const LaurentSeries s = substitute(r.series, d.symbol_map);
  for (int n : {0, 1, 3})
    for (int i = 0; i < 3; ++i) CHECK(s.coeffs[n][i] == d.coeffs[n][i]);
  CHECK(s.coeffs[2][0] == pp("a2^2 - 2*a2*b2 - 2*b2^2"));
  CHECK(s.coeffs[2][1] == pp("a2^2 + 4*a2*b2 + b2^2"));
  CHECK(s.coeffs[2][2] == pp("-2*a2^2 - 2*a2*b2 + b2^2"));
  const auto ro = series_residual_order(sys, r.series);
  REQUIRE(ro);
  CHECK(ro->relative_order == Rational(-5));
}

TEST_CASE("direction must fit the classification") {
  const ODESystem sys = paper_system();
  CHECK_THROWS_AS(build_left_series(sys, resonance_report(sys, bal("1/3", "1/3", "1/3"))), BranchMismatch);
  CHECK_THROWS_AS(build_right_series(sys, resonance_report(sys, bal("2/3", "-1/3", "-1/3"))), BranchMismatch);
}

TEST_CASE("pinned and valued symbols") {
  const ODESystem sys = paper_system();
  SeriesOptions opt;
  opt.max_order = 2;
  opt.pinned = {"r1_0"};
  opt.injected_values = {{"r2_0", FieldElem(3)}};
  const SeriesResult r = build_right_series(sys, resonance_report(sys, bal("1/3", "1/3", "1/3")), opt);
  CHECK(r.series.coeffs[1][0].is_zero());
  CHECK(r.series.coeffs[2][1] == pp("3"));
  const auto free = r.series.free_symbols();
  CHECK(std::find(free.begin(), free.end(), "r1_0") == free.end());
  CHECK(std::find(free.begin(), free.end(), "r1_1") != free.end());
}

TEST_CASE("evaluation is dominated by the leading term near the pole") {
  const SeriesResult r = right(4);
  std::map<std::string, Complex> zero;
  for (const auto& s : r.series.injected) zero[s.name] = 0.0;
  const auto v = evaluate_series(r.series, zero, 0.0, 0.1);
  for (const auto& x : v) CHECK(std::abs(x - Complex(10.0 / 3)) < 1.0);
}
