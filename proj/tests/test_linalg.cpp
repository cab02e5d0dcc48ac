#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "painleve/linalg.hpp"

using namespace painleve;
using testing::fe;

namespace {

Vector<FieldElem> v3(const char* a, const char* b, const char* c) {
  Vector<FieldElem> v(3);
  v << fe(a), fe(b), fe(c);
  return v;
}

}  // namespace

TEST_CASE("null space of the zero matrix is everything") {
  const auto ns = null_space(zero_matrix<FieldElem>(3, 3));
  REQUIRE(ns.size() == 3);
  CHECK(same_span(ns, {v3("1", "0", "0"), v3("0", "1", "0"), v3("0", "0", "1")}, 3));
}

TEST_CASE("invertible matrix has trivial null space") {
  Matrix<FieldElem> m = zero_matrix<FieldElem>(3, 3);
  m << fe("1"), fe("w"), fe("0"), fe("0"), fe("2"), fe("1/3"), fe("1"), fe("0"), fe("1");
  CHECK(null_space(m).empty());
  CHECK(rank(m) == 3);
  CHECK(!is_zero(determinant(m)));
}

TEST_CASE("canonical basis: pivots are one") {
  Matrix<FieldElem> m = zero_matrix<FieldElem>(3, 3);
  // Rows all (1, 1, 1): null space spanned by (1,0,-1), (0,1,-1) after canonicalisation.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = FieldElem(1);
  const auto ns = null_space(m);
  REQUIRE(ns.size() == 2);
  const Matrix<FieldElem> c = canonical_span(ns, 3);
  CHECK(c.rows() == 2);
  CHECK(c(0, 0) == FieldElem(1));
  CHECK(c(0, 2) == FieldElem(-1));
  CHECK(c(1, 1) == FieldElem(1));
  CHECK(same_span(ns, {v3("1", "0", "-1"), v3("0", "1", "-1")}, 3));
  CHECK_FALSE(same_span(ns, {v3("1", "0", "-1"), v3("0", "1", "1")}, 3));
}

TEST_CASE("rref transform reproduces the echelon form") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int k = 0; k < 50; ++k) {
    Matrix<FieldElem> m = zero_matrix<FieldElem>(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = FieldElem(make_rational(d(rng), 1), make_rational(d(rng) / 2, 1));
    m.row(2) = m.row(0) + m.row(1);
    const auto e = rref(m);
    const bool reproduced = e.transform * m == e.reduced;
    CHECK(reproduced);
    CHECK(e.rank() <= 2);
    CHECK(e.rank() + static_cast<Eigen::Index>(e.free_columns.size()) == 4);
  }
}
