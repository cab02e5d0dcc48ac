#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "painleve/linalg.hpp"
#include "painleve/roots.hpp"

using namespace painleve;
using testing::fe;
using testing::pp;

namespace {

PolyInS linear(int root) { return PolyInS::linear(FieldElem(root)); }

PolyInS power(const PolyInS& p, int k) {
  PolyInS out(FieldElem(1));
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

std::vector<std::pair<std::string, int>> summary(const std::vector<PolyRoot>& roots) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& r : roots) out.emplace_back(r.exact() ? to_string(std::get<FieldElem>(r.value)) : "?", r.multiplicity);
  return out;
}

}  // namespace

TEST_CASE("canonical text") {
  CHECK(pp("(a0 + b0)^2").to_string() == "a0^2 + 2*a0*b0 + b0^2");
  CHECK(pp("1/3 - a0^2").to_string() == "-a0^2 + 1/3");
  CHECK(pp("w*a0 - a0").to_string() == "(-1 + w)*a0");
  CHECK(pp("0").to_string() == "0");
  CHECK(pp("a0 - a0").is_zero());
}

TEST_CASE("structural equality ignores unused symbols") {
  CHECK(pp("a0 + b0 - b0") == pp("a0"));
  CHECK(pp("a0*b0") == pp("b0*a0"));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-4, 4), e(0, 2);
  auto random = [&] {
    ParamPoly p;
    for (int k = 0; k < 4; ++k)
      p += ParamPoly(FieldElem(make_rational(c(rng), 1 + e(rng)), make_rational(c(rng), 1))) *
           ParamPoly::symbol("a").pow(e(rng)) * ParamPoly::symbol("b").pow(e(rng));
    return p;
  };
  for (int k = 0; k < 200; ++k) {
    const ParamPoly a = random(), b = random(), d = random();
    CHECK((a + b) + d == a + (b + d));
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a - a == ParamPoly());
    CHECK(parse_polynomial(a.to_string()) == a);
  }
}

TEST_CASE("derivative, substitution and evaluation") {
  const ParamPoly p = pp("a0^3 - 2*a0*b1 + w");
  CHECK(p.derivative("a0") == pp("3*a0^2 - 2*b1"));
  CHECK(p.derivative("c0").is_zero());
  CHECK(p.substitute({{"a0", pp("b1 + 1")}}) == pp("(b1 + 1)^3 - 2*(b1 + 1)*b1 + w"));
  CHECK(p.evaluate(std::map<std::string, FieldElem>{{"a0", FieldElem(2)}, {"b1", FieldElem(3)}}) == fe("8 - 12 + w"));
  CHECK(p.conj() == pp("a0^3 - 2*a0*b1 - w"));
  CHECK_THROWS(p.evaluate(std::map<std::string, FieldElem>{{"a0", FieldElem(1)}}));
}

TEST_CASE("determinant of polynomial matrices") {
  Matrix<PolyInS> id = zero_matrix<PolyInS>(3, 3);
  for (int i = 0; i < 3; ++i) id(i, i) = PolyInS(FieldElem(1));
  CHECK(determinant(id) == PolyInS(FieldElem(1)));
  Matrix<PolyInS> d = zero_matrix<PolyInS>(3, 3);
  d(0, 0) = linear(1);
  d(1, 1) = linear(2);
  d(2, 2) = linear(-1);
  CHECK(determinant(d) == linear(1) * linear(2) * linear(-1));
}

TEST_CASE("roots with multiplicity") {
  CHECK(summary(roots_with_multiplicity(linear(-1) * power(linear(1), 3) * power(linear(2), 2))) ==
        std::vector<std::pair<std::string, int>>{{"-1", 1}, {"1", 3}, {"2", 2}});
  CHECK(summary(roots_with_multiplicity(power(linear(-2), 2) * power(linear(-1), 3) * linear(1))) ==
        std::vector<std::pair<std::string, int>>{{"-2", 2}, {"-1", 3}, {"1", 1}});
  CHECK(summary(roots_with_multiplicity(power(PolyInS::identity(), 2))) == std::vector<std::pair<std::string, int>>{{"0", 2}});
  CHECK_THROWS(roots_with_multiplicity(PolyInS()));
}

TEST_CASE("roots in Q(w) and outside it") {
  // (s - w)^2 (s^2 - 2): w is recognised, +-sqrt 2 stay numeric.
  const PolyInS p = power(PolyInS::linear(FieldElem::omega()), 2) * PolyInS({FieldElem(-2), FieldElem(0), FieldElem(1)});
  const auto roots = roots_with_multiplicity(p);
  int total = 0, exact = 0;
  for (const auto& r : roots) {
    total += r.multiplicity;
    if (r.exact()) {
      ++exact;
      CHECK(std::get<FieldElem>(r.value) == FieldElem::omega());
      CHECK(r.multiplicity == 2);
    } else {
      CHECK(std::abs(std::abs(r.numeric().real()) - std::sqrt(2.0)) < 1e-10);
    }
  }
  CHECK(total == 4);
  CHECK(exact == 1);
}

TEST_CASE("shift and division") {
  const UPoly<Rational> p({Rational(1), Rational(-3), Rational(0), Rational(2)});
  const auto [q, r] = p.divide_linear(Rational(1));
  CHECK(r == Rational(0));
  CHECK(q * UPoly<Rational>::linear(Rational(1)) == p);
  CHECK(p.shifted(Rational(2))(Rational(0)) == p(Rational(2)));
  // 2s^3 - 3s + 1 = (s - 1)(2s^2 + 2s - 1)
  CHECK(rational_roots(p) == std::vector<Rational>{Rational(1)});
}
