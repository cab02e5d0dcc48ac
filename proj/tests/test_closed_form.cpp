#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "painleve/closed_form.hpp"
#include "painleve/fixtures.hpp"

using namespace painleve;
using testing::fe;

namespace {

ClosedFormParams<Complex> random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  ClosedFormParams<Complex> p;
  for (auto& c : p.v) c = {u(rng), u(rng)};
  return p;
}

}  // namespace

TEST_CASE("exact evaluation satisfies the system") {
  const ODESystem sys = paper_system();
  const auto symbols = state_symbols(sys);
  ClosedFormParams<FieldElem> p;
  const char* values[] = {"1", "1/2", "-w", "2/3", "0", "1", "-1", "w/3", "3"};
  for (int k = 0; k < 9; ++k) p.v[k] = fe(values[k]);
  const ClosedForm<FieldElem> cf(p);
  CHECK(cf.denominator().degree() == 6);
  for (const char* t : {"0", "1/7", "-2 + w", "5/3*w"}) {
    const auto v = cf(fe(t));
    std::map<std::string, FieldElem> at;
    for (int i = 0; i < 3; ++i) {
      at[symbols[2 * i]] = v.value[i];
      at[symbols[2 * i + 1]] = v.d1[i];
    }
    for (int i = 0; i < 3; ++i) CHECK(sys.rhs[i].evaluate(at) == v.d2[i]);
  }
}

TEST_CASE("pole at an exact root throws") {
  // A = t, B = C = 0: D = t^3.
  ClosedFormParams<Rational> p;
  p.v[1] = Rational(1);
  const ClosedForm<Rational> cf(p);
  CHECK_THROWS_AS(cf(Rational(0)), PoleError);
  CHECK(cf(Rational(2)).value[0] == make_rational(1, 2));
}

TEST_CASE("generic parameters give six simple poles") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const PoleSet ps = pole_set(random_params(rng));
    CHECK(ps.count() == 6);
    CHECK(ps.poles.size() == 6);
  }
}

TEST_CASE("degenerate parameter sets") {
  CHECK_THROWS_AS(pole_set(ClosedFormParams<Complex>{}), DegenerateSolution);
  ClosedFormParams<Complex> one;
  one.v[0] = 1.0;  // D = 1
  CHECK(pole_set(one).poles.empty());
  ClosedFormParams<Complex> cube;
  cube.v[1] = 1.0;  // D = t^3
  const PoleSet ps = pole_set(cube);
  REQUIRE(ps.poles.size() == 1);
  CHECK(ps.poles[0].multiplicity == 3);
  CHECK_THROWS_AS(local_expansion(cube, ps.poles[0].t, 2), NonSimplePole);
  ClosedFormParams<Complex> same;  // A = B = C makes A + e B + e^2 C vanish
  for (int k : {0, 3, 6}) same.v[k] = 1.0;
  for (int k : {1, 4, 7}) same.v[k] = 2.0;
  CHECK_THROWS_AS(pole_set(same), DegenerateSolution);
}

TEST_CASE("leading coefficients at poles belong to the first triplet") {
  std::mt19937_64 rng(9);
  const auto& rows = table1_rows();
  for (int k = 0; k < 10; ++k) {
    const auto p = random_params(rng);
    for (const Pole& pole : pole_set(p).poles) {
      const auto le = local_expansion(p, pole.t, 0);
      bool found = false;
      for (const auto& r : rows) {
        if (r.triplet != 1) continue;
        double d = 0;
        for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(le[0][i] - r.balance.coeffs[i].to_complex()));
        found = found || d < 1e-8;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("local expansion agrees with a contour average") {
  std::mt19937_64 rng(4);
  const auto p = random_params(rng);
  const PoleSet ps = pole_set(p);
  const Complex t0 = ps.poles[0].t;
  double sep = INFINITY;
  for (std::size_t k = 1; k < ps.poles.size(); ++k) sep = std::min(sep, std::abs(ps.poles[k].t - t0));
  const double r = sep / 3;
  const auto le = local_expansion(p, t0, 4);
  const ClosedForm<Complex> cf(p);
  const int n = 256;
  for (int m = 0; m <= 5; ++m) {
    Complex acc = 0;
    for (int j = 0; j < n; ++j) {
      const Complex u = std::polar(r, 2 * M_PI * j / n);
      acc += cf(t0 + u).value[0] * std::pow(u, -(m - 1));
    }
    acc /= static_cast<double>(n);
    CHECK(std::abs(acc - le[m][0]) < 1e-8 * std::max(1.0, std::abs(le[m][0])));
  }
}
