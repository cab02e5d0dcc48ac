#include <doctest.h>

#include "helpers.hpp"
#include "painleve/report.hpp"

using namespace painleve;

TEST_CASE("analysis document") {
  AnalyzeOptions opt;
  opt.seed = 7;
  const Analysis a = analyze(paper_system(), opt);
  const Json j = to_json(a);
  CHECK(j["balances"].size() == 27);
  CHECK(j["unrecognized"].empty());
  CHECK(j["exponents"] == Json::array({"-1", "-1", "-1"}));
  CHECK(j["balances"][1]["resonances"]["pattern"] == "-1, 1 (3), 2 (2)");
  CHECK(j["balances"][1]["resonances"]["branch"] == "right");
  CHECK(j["balances"][0]["resonances"].is_null());
  CHECK(j.dump() == to_json(analyze(paper_system(), opt)).dump());
  auto it = j.begin();
  CHECK(it.key() == "tool");
}

TEST_CASE("closed-form parameters from JSON") {
  const auto p = closed_form_params_from_json(Json::parse(R"({"a0": 1, "b1": [0.5, -2], "c2": {"re": 3}})"));
  CHECK(p.v[0] == Complex(1, 0));
  CHECK(p.v[4] == Complex(0.5, -2));
  CHECK(p.v[8] == Complex(3, 0));
  CHECK_THROWS_AS(closed_form_params_from_json(Json::parse(R"({"d0": 1})")), std::invalid_argument);
  CHECK_THROWS(closed_form_params_from_json(Json::parse(R"({"a0": "x"})")));
}

TEST_CASE("error document") {
  const Json e = error_json("syntax", "line 2, column 4: unexpected ')'", 2, 4);
  CHECK(e["error"]["line"] == 2);
  CHECK(e["error"]["kind"] == "syntax");
}
