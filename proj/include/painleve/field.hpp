#pragma once

// Exact arithmetic over Q and the quadratic field Q(w), w^2 = -3.
//
// w plays the role of i*sqrt(3), so every entry of the leading-order table
// (e.g. (-1 - i sqrt 3)/6) is representable exactly as a + b*w.

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace painleve {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Numeric comparison tolerance carried through every numeric report.
struct Tolerance {
  double eps = 1e-10;
};

class DivisionByZero : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

Rational make_rational(long num, long den = 1);
/// Parses "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Complex& z) { return z == Complex{}; }

class FieldElem {
public:
  FieldElem() = default;
  FieldElem(long v) : re_(v) {}
  FieldElem(int v) : re_(v) {}
  FieldElem(Rational re) : re_(std::move(re)) {}
  FieldElem(Rational re, Rational om) : re_(std::move(re)), om_(std::move(om)) {}

  static FieldElem omega() { return FieldElem(Rational(0), Rational(1)); }
  /// Primitive cube root of unity (-1 + w)/2.
  static FieldElem cube_root_of_unity() {
    return FieldElem(make_rational(-1, 2), make_rational(1, 2));
  }

  const Rational& re() const { return re_; }
  const Rational& om() const { return om_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(om_) == 0; }
  bool is_rational() const { return sgn(om_) == 0; }

  FieldElem conj() const { return FieldElem(re_, -om_); }
  /// a^2 + 3 b^2, the field norm down to Q.
  Rational norm() const;
  FieldElem inverse() const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem operator-() const { return FieldElem(-re_, -om_); }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.re_ == b.re_ && a.om_ == b.om_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  /// Embedding w -> i*sqrt(3).
  Complex to_complex() const;

private:
  Rational re_{0};
  Rational om_{0};
};

inline bool is_zero(const FieldElem& x) { return x.is_zero(); }

FieldElem pow(const FieldElem& base, unsigned exponent);
/// Total order (re first, then om); only used for canonical sorting.
int compare(const FieldElem& a, const FieldElem& b);

/// Text form: "1/3", "-1/6 - 1/6*w", "w", "2*w".
std::string to_string(const FieldElem& x);
std::ostream& operator<<(std::ostream& os, const FieldElem& x);

/// Rational reconstruction of a complex number as a + b*w with small
/// denominators, or nothing if no candidate is within tol.
bool recognize(const Complex& z, FieldElem& out, double tol = 1e-9, long max_den = 10000);

}  // namespace painleve

namespace Eigen {

template <>
struct NumTraits<painleve::FieldElem> : GenericNumTraits<painleve::FieldElem> {
  using Real = painleve::FieldElem;
  using NonInteger = painleve::FieldElem;
  using Nested = painleve::FieldElem;
  using Literal = painleve::FieldElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
