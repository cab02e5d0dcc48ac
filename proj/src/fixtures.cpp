#include "painleve/fixtures.hpp"

#include "painleve/system.hpp"

namespace painleve {

namespace {

FieldElem num(const char* text) { return parse_polynomial(text).constant_term(); }

Vector<FieldElem> vec(const char* a, const char* b, const char* c) {
  Vector<FieldElem> v(3);
  v << num(a), num(b), num(c);
  return v;
}

std::array<ParamPoly, 3> poly3(const char* x, const char* y, const char* z) {
  return {parse_polynomial(x), parse_polynomial(y), parse_polynomial(z)};
}

struct RawRow {
  int triplet, member;
  const char *a, *b, *c, *res;
};

// clang-format off
const RawRow kRows[] = {
    {0, 0, "0", "0", "0", ""},
    {1, 1, "1/3", "1/3", "1/3", "-1, 1 (3), 2 (2)"},
    {1, 2, "1/3", "-1/6 - 1/6*w", "-1/6 + 1/6*w", "-1, 1 (3), 2 (2)"},
    {1, 3, "1/3", "-1/6 + 1/6*w", "-1/6 - 1/6*w", "-1, 1 (3), 2 (2)"},
    {2, 1, "2/3", "2/3", "2/3", "-2, -1, 1 (2), 2 (2)"},
    {2, 2, "2/3", "-1/3 - 1/3*w", "-1/3 + 1/3*w", "-2, -1, 1 (2), 2 (2)"},
    {2, 3, "2/3", "-1/3 + 1/3*w", "-1/3 - 1/3*w", "-2, -1, 1 (2), 2 (2)"},
    {3, 1, "2/3", "-1/3", "-1/3", "-1 (2), 1 (3), 2"},
    {3, 2, "2/3", "1/6 - 1/6*w", "1/6 + 1/6*w", "-1 (2), 1 (3), 2"},
    {3, 3, "2/3", "1/6 + 1/6*w", "1/6 - 1/6*w", "-1 (2), 1 (3), 2"},
    {0, 0, "1", "0", "0", ""},
    {4, 1, "1", "1/3*w", "-1/3*w", "-2, -1 (2), 1 (2), 2"},
    {4, 2, "1", "-1/2 - 1/6*w", "-1/2 + 1/6*w", "-2, -1 (2), 1 (2), 2"},
    {4, 3, "1", "1/2 - 1/6*w", "1/2 + 1/6*w", "-2, -1 (2), 1 (2), 2"},
    {5, 1, "1", "-1/3*w", "1/3*w", "-2, -1 (2), 1 (2), 2"},
    {5, 2, "1", "-1/2 + 1/6*w", "-1/2 - 1/6*w", "-2, -1 (2), 1 (2), 2"},
    {5, 3, "1", "1/2 + 1/6*w", "1/2 - 1/6*w", "-2, -1 (2), 1 (2), 2"},
    {6, 1, "4/3", "-2/3", "-2/3", "-2 (2), -1 (2), 1, 2"},
    {6, 2, "4/3", "1/3 - 1/3*w", "1/3 + 1/3*w", "-2 (2), -1 (2), 1, 2"},
    {6, 3, "4/3", "1/3 + 1/3*w", "1/3 - 1/3*w", "-2 (2), -1 (2), 1, 2"},
    {7, 1, "4/3", "1/3", "1/3", "-2, -1 (3), 1 (2)"},
    {7, 2, "4/3", "-1/6 - 1/6*w", "-1/6 + 1/6*w", "-2, -1 (3), 1 (2)"},
    {7, 3, "4/3", "-1/6 + 1/6*w", "-1/6 - 1/6*w", "-2, -1 (3), 1 (2)"},
    {8, 1, "5/3", "-1/3", "-1/3", "-2 (2), -1 (3), 1"},
    {8, 2, "5/3", "1/6 - 1/6*w", "1/6 + 1/6*w", "-2 (2), -1 (3), 1"},
    {8, 3, "5/3", "1/6 + 1/6*w", "1/6 - 1/6*w", "-2 (2), -1 (3), 1"},
    {0, 0, "2", "0", "0", ""},
};
// clang-format on

}  // namespace

const std::vector<TableRow>& table1_rows() {
  static const std::vector<TableRow> rows = [] {
    std::vector<TableRow> out;
    const Rational m1(-1);
    for (const RawRow& r : kRows)
      out.push_back({r.triplet, r.member, Balance::make({m1, m1, m1}, {num(r.a), num(r.b), num(r.c)}), r.res});
    return out;
  }();
  return rows;
}

std::vector<Balance> table1_balances() {
  std::vector<Balance> out;
  for (const auto& r : table1_rows()) out.push_back(r.balance);
  return out;
}

std::vector<EigenFixture> eigenvectors_triplet3_member1() {
  return {{FieldElem(-1), {vec("1", "0", "-1"), vec("0", "1", "-1")}},
          {FieldElem(1), {vec("1", "0", "0"), vec("0", "1", "0"), vec("0", "0", "1")}},
          {FieldElem(2), {vec("1", "1", "1")}}};
}

std::vector<EigenFixture> eigenvectors_triplet3_member2() {
  return {{FieldElem(-1), {vec("1", "0", "(1 + w)/2"), vec("0", "1", "(1 - w)/2")}},
          {FieldElem(1), {vec("1", "0", "0"), vec("0", "1", "0"), vec("0", "0", "1")}},
          {FieldElem(2), {vec("-(1 + w)/2", "1", "-(1 - w)/2")}}};
}

std::vector<Vector<FieldElem>> triple_minus_one_basis() {
  return {vec("1", "0", "0"), vec("0", "1", "0"), vec("0", "0", "1")};
}

SeriesDisplay right_series_display() {
  SeriesDisplay d;
  d.triplet = 1;
  d.member = 1;
  d.ascending = true;
  d.coeffs = {
      poly3("1/3", "1/3", "1/3"),
      poly3("a0", "b0", "c0"),
      poly3("-(b1 + c1 + (a0 + b0 + c0)^2)", "b1", "c1"),
      // The printed x entry has an unclosed brace; it is closed where the
      // line ends.
      poly3("1/2*((a0 - b0)^3 + (c0 - a0)^3 - 3*a0^2*(b0 + c0) + 3*(b1 + c1)*(a0 - b0))",
            "-3/2*(c0*c1 + c0^2*a0 - b0*c0^2 - c1*b0 - 2*a0*b0*c0 - b0^2*c0 - 2*a0*b0^2 - b0^3 + a0*b1 - b0*b1)",
            "3/2*(c0^3 + 2*a0*c0^2 + b0*c0^2 + 2*a0*b0*c0 + b0^2*c0 - a0*b0^2 + c0*(b1 + c1) - a0*c1 - b0*b1)"),
  };
  d.symbol_map = {{"r1_0", parse_polynomial("a0")},
                  {"r1_1", parse_polynomial("b0")},
                  {"r1_2", parse_polynomial("c0")},
                  {"r2_0", parse_polynomial("b1")},
                  {"r2_1", parse_polynomial("c1")}};
  return d;
}

SeriesDisplay left_series_display() {
  SeriesDisplay d;
  d.triplet = 3;
  d.member = 1;
  d.ascending = false;
  d.coeffs = {
      poly3("2/3", "-1/3", "-1/3"),
      poly3("a2", "b2", "-(a2 + b2)"),
      poly3("a2 - 2*a2*b2 - 2*b2^2", "a2 + 4*a2*b2 + b2^2", "-(a2 + a2*b2 - b2^2)"),
      poly3("-9*(a2 + b2)*a2*b2", "3*(a2^3 + 3*a2^2*b2 - b2^3)", "-3*(a2^3 - 3*a2*b2^2 - b2^3)"),
  };
  d.symbol_map = {{"rm1_0", parse_polynomial("b2")}, {"rm1_1", parse_polynomial("-a2 - b2")}};
  return d;
}

}  // namespace painleve
