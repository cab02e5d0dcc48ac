#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "painleve/fixtures.hpp"
#include "painleve/table.hpp"

using namespace painleve;

TEST_CASE("cyclic symmetry of the fixture") {
  const auto k = cyclic_symmetry(paper_system());
  REQUIRE(k);
  CHECK((*k)[0] == 0);
  CHECK((*k)[1] != 0);
  CHECK(((*k)[1] + (*k)[2]) % 3 == 0);
  CHECK_FALSE(cyclic_symmetry(parse_system("x'' = x^3")));
}

TEST_CASE("table order is independent of input order") {
  const ODESystem sys = paper_system();
  const auto& rows = table1_rows();
  std::vector<Balance> b = table1_balances();
  std::mt19937 rng(42);
  for (int k = 0; k < 3; ++k) {
    std::shuffle(b.begin(), b.end(), rng);
    const BalanceTable t = build_table(sys, b);
    CHECK(t.groups == 8);
    REQUIRE(t.rows.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(t.rows[i].balance == rows[i].balance);
      CHECK(t.rows[i].group == rows[i].triplet);
      CHECK(t.rows[i].member == rows[i].member);
    }
  }
}

TEST_CASE("rendering is exact") {
  const ODESystem sys = paper_system();
  const std::string text = render_table(build_table(sys, table1_balances()), sys.var_names);
  CHECK(text.find("-1/6 - 1/6*w") != std::string::npos);
  CHECK(text.find("-2 (2), -1 (3), 1") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 29);
}

TEST_CASE("triplet sum rule") {
  const auto& rows = table1_rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].member != 1) continue;
    for (int j = 1; j < 3; ++j)
      CHECK(rows[i + 1].balance.coeffs[j] + rows[i + 2].balance.coeffs[j] == -rows[i].balance.coeffs[j]);
  }
}
