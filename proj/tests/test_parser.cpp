#include <doctest.h>

#include "helpers.hpp"

using namespace painleve;
using testing::pp;

namespace {

ParseError::Kind kind_of(const std::string& text) {
  try {
    parse_system(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no error raised for: " << text);
  return ParseError::Kind::Syntax;
}

}  // namespace

TEST_CASE("fixture system parses to explicit form") {
  const ODESystem sys = paper_system();
  REQUIRE(sys.var_names == std::vector<std::string>{"x", "y", "z"});
  CHECK(sys.rhs[0] == pp("-3*(x*x' + y*z' + z*y') - x^3 - y^3 - z^3 - 6*x*y*z"));
  CHECK(sys.rhs[1] == pp("-3*(x*y' + y*x' + z*z') - 3*(x^2*y + y^2*z + z^2*x)"));
}

TEST_CASE("round trip") {
  const ODESystem sys = paper_system();
  CHECK(parse_system(serialize_system(sys)) == sys);
}

TEST_CASE("alternative equation forms") {
  const ODESystem a = parse_system("x'' = x^3");
  CHECK(a.rhs[0] == pp("x^3"));
  const ODESystem b = parse_system("2*x'' - 2*x^3 = 0   # comment");
  CHECK(b == a);
  const ODESystem c = parse_system("x'' + y'' = x\ny'' = y*x'\n");
  CHECK(c.var_names == std::vector<std::string>{"x", "y"});
  CHECK(c.rhs[0] == pp("x - y*x'"));
}

TEST_CASE("variable order follows second derivatives without a vars line") {
  const ODESystem s = parse_system("z'' = x\nx'' = z\n");
  CHECK(s.var_names == std::vector<std::string>{"z", "x"});
}

TEST_CASE("errors name the line, column and kind") {
  CHECK(kind_of("x'' = sin(x)") == ParseError::Kind::NonPolynomial);
  CHECK(kind_of("x'' = t*x") == ParseError::Kind::NonAutonomous);
  CHECK(kind_of("x'' = x / x'") == ParseError::Kind::NonPolynomial);
  CHECK(kind_of("x'' = x^-1") == ParseError::Kind::NonPolynomial);
  CHECK(kind_of("x'' = 1.5*x") == ParseError::Kind::Syntax);
  CHECK(kind_of("x''*x'' = x") == ParseError::Kind::NonlinearSecondDerivative);
  CHECK(kind_of("vars x, y\nx'' = y") == ParseError::Kind::MissingEquation);
  CHECK(kind_of("vars x\nx'' = q") == ParseError::Kind::UnknownSymbol);
  CHECK(kind_of("x'' = (x + 1") == ParseError::Kind::Syntax);
  try {
    parse_system("vars x\n\nx'' = x + sin(x)");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 11);
    CHECK(std::string(e.what()).find("line 3, column 11") == 0);
  }
}

TEST_CASE("polynomial expressions") {
  CHECK(parse_polynomial("w^2") == pp("-3"));
  CHECK(parse_polynomial("(a0 - b0)/2") == pp("1/2*a0 - 1/2*b0"));
  CHECK_THROWS_AS(parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial("a0 b0"), ParseError);
}
