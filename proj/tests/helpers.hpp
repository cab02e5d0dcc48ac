#pragma once

#include "painleve/balance.hpp"
#include "painleve/system.hpp"

namespace testing {

inline painleve::FieldElem fe(const char* text) { return painleve::parse_polynomial(text).constant_term(); }
inline painleve::ParamPoly pp(const char* text) { return painleve::parse_polynomial(text); }

inline painleve::Balance bal(const char* a, const char* b, const char* c) {
  const painleve::Rational m1(-1);
  return painleve::Balance::make({m1, m1, m1}, {fe(a), fe(b), fe(c)});
}

}  // namespace testing
