#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "painleve/fixtures.hpp"

using namespace painleve;
using testing::bal;
using testing::fe;

namespace {

bool all_zero(const std::vector<FieldElem>& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElem& e) { return is_zero(e); });
}

}  // namespace

TEST_CASE("dominant exponents of the fixture") {
  CHECK(dominant_exponents(paper_system()) == std::vector<Rational>{Rational(-1), Rational(-1), Rational(-1)});
}

TEST_CASE("leading-order residuals") {
  const ODESystem sys = paper_system();
  const BalanceEquations eqs = leading_order_equations(sys, dominant_exponents(sys));
  CHECK(eqs.polys.size() == 3);
  CHECK(all_zero(verify_balance(eqs, bal("1/3", "1/3", "1/3"))));
  CHECK(all_zero(verify_balance(eqs, bal("2/3", "1/6 - 1/6*w", "1/6 + 1/6*w"))));
  CHECK(all_zero(verify_balance(eqs, bal("5/3", "-1/3", "-1/3"))));
  CHECK_FALSE(all_zero(verify_balance(eqs, bal("1/3", "1/3", "2/3"))));
}

TEST_CASE("the 27 leading-order solutions") {
  const ODESystem sys = paper_system();
  const BalanceEquations eqs = leading_order_equations(sys, dominant_exponents(sys));
  const auto en = enumerate_balances_numeric(eqs);
  CHECK(en.bezout_bound == 27);
  REQUIRE(en.roots.size() == 27);
  const auto table = table1_balances();
  for (const auto& r : en.roots) {
    REQUIRE(r.exact);
    CHECK(std::find(table.begin(), table.end(), *r.exact) != table.end());
  }
  int zero_rows = 0;
  for (const auto& b : table) zero_rows += b.has_zero ? 1 : 0;
  CHECK(zero_rows == 3);
}

TEST_CASE("same seed, same output") {
  const ODESystem sys = paper_system();
  const BalanceEquations eqs = leading_order_equations(sys, dominant_exponents(sys));
  NewtonConfig cfg;
  cfg.seed = 7;
  const auto a = enumerate_balances_numeric(eqs, cfg), b = enumerate_balances_numeric(eqs, cfg);
  REQUIRE(a.roots.size() == b.roots.size());
  for (std::size_t i = 0; i < a.roots.size(); ++i) CHECK(a.roots[i].coeffs == b.roots[i].coeffs);
}

TEST_CASE("scalar cubic oscillators") {
  // x'' = -x^3: 2a = -a^3, so a = +-i sqrt 2, outside Q(w).
  const ODESystem minus = parse_system("x'' = -x^3");
  CHECK(dominant_exponents(minus) == std::vector<Rational>{Rational(-1)});
  auto en = enumerate_balances_numeric(leading_order_equations(minus, {Rational(-1)}));
  int nonzero = 0;
  for (const auto& r : en.roots) {
    if (r.has_zero) continue;
    ++nonzero;
    CHECK_FALSE(r.exact);
    CHECK(std::abs(r.coeffs[0].real()) < 1e-10);
    CHECK(std::abs(std::abs(r.coeffs[0].imag()) - std::sqrt(2.0)) < 1e-10);
  }
  CHECK(nonzero == 2);

  const ODESystem plus = parse_system("x'' = x^3");
  en = enumerate_balances_numeric(leading_order_equations(plus, {Rational(-1)}));
  for (const auto& r : en.roots)
    if (!r.has_zero) CHECK(std::abs(std::abs(r.coeffs[0].real()) - std::sqrt(2.0)) < 1e-10);

  // x'' = 2x^3 has the exact balances +-1.
  const ODESystem two = parse_system("x'' = 2*x^3");
  en = enumerate_balances_numeric(leading_order_equations(two, {Rational(-1)}));
  std::vector<FieldElem> exact;
  for (const auto& r : en.roots)
    if (r.exact && !r.has_zero) exact.push_back(r.exact->coeffs[0]);
  CHECK(exact.size() == 2);
}

TEST_CASE("quadratic nonlinearity gives exponent -2") {
  const ODESystem sys = parse_system("x'' = x^2");
  CHECK(dominant_exponents(sys) == std::vector<Rational>{Rational(-2)});
  const auto en = enumerate_balances_numeric(leading_order_equations(sys, {Rational(-2)}));
  bool six = false;
  for (const auto& r : en.roots)
    if (r.exact && r.exact->coeffs[0] == FieldElem(6)) six = true;
  CHECK(six);
}

TEST_CASE("linear systems have no dominant balance") {
  CHECK_THROWS_AS(dominant_exponents(parse_system("x'' = -x")), BalanceError);
}
