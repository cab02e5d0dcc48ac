#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace painleve;
using testing::fe;

TEST_CASE("rationals are canonical") {
  CHECK(to_string(make_rational(2, -4)) == "-1/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("omega squares to -3") {
  CHECK(FieldElem::omega() * FieldElem::omega() == FieldElem(-3));
  const FieldElem e = FieldElem::cube_root_of_unity();
  CHECK(e * e * e == FieldElem(1));
  CHECK(e != FieldElem(1));
}

TEST_CASE("norm identity") {
  const FieldElem a(make_rational(-1, 6), make_rational(-1, 6));
  CHECK(a * a.conj() == FieldElem(make_rational(1, 9)));
  CHECK(a.norm() == make_rational(1, 9));
}

TEST_CASE("division") {
  const FieldElem a = fe("2/3 - 5*w"), b = fe("-1/7 + 2/3*w");
  CHECK((a * b) / b == a);
  CHECK(b * b.inverse() == FieldElem(1));
  CHECK_THROWS_AS(a / FieldElem(0), DivisionByZero);
  CHECK_THROWS_AS(FieldElem(0).inverse(), DivisionByZero);
}

TEST_CASE("text form") {
  CHECK(to_string(fe("-1/6 - 1/6*w")) == "-1/6 - 1/6*w");
  CHECK(to_string(FieldElem::omega()) == "w");
  CHECK(to_string(fe("2*w")) == "2*w");
  CHECK(to_string(fe("-w")) == "-w");
  CHECK(to_string(FieldElem(0)) == "0");
}

TEST_CASE("embedding and recognition") {
  const FieldElem a = fe("1/6 - 1/6*w");
  const Complex z = a.to_complex();
  CHECK(z.real() == doctest::Approx(1.0 / 6));
  CHECK(z.imag() == doctest::Approx(-std::sqrt(3.0) / 6));
  FieldElem back;
  REQUIRE(recognize(z, back));
  CHECK(back == a);
  CHECK_FALSE(recognize(Complex(std::sqrt(2.0), 0.0), back));
}

TEST_CASE("embedding is a ring homomorphism on random elements") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> n(-20, 20), d(1, 9);
  for (int k = 0; k < 2000; ++k) {
    const FieldElem a(make_rational(n(rng), d(rng)), make_rational(n(rng), d(rng)));
    const FieldElem b(make_rational(n(rng), d(rng)), make_rational(n(rng), d(rng)));
    const Complex p = (a * b).to_complex(), q = a.to_complex() * b.to_complex();
    CHECK(std::abs(p - q) <= 1e-10 * (1 + std::abs(q)));
    const Complex s = (a + b).to_complex(), t = a.to_complex() + b.to_complex();
    CHECK(std::abs(s - t) <= 1e-12 * (1 + std::abs(t)));
  }
}
