#include "painleve/field.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace painleve {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational literal: " + s);
  if (sgn(q.get_den()) == 0) throw DivisionByZero("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational FieldElem::norm() const {
  Rational n = re_ * re_ + 3 * om_ * om_;
  return n;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(w)");
  Rational n = norm();
  Rational a = re_ / n;
  Rational b = -om_ / n;
  return FieldElem(a, b);
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  re_ += o.re_;
  om_ += o.om_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  re_ -= o.re_;
  om_ -= o.om_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  // (a + b w)(c + d w) = ac - 3bd + (ad + bc) w
  Rational re = re_ * o.re_ - 3 * om_ * o.om_;
  Rational om = re_ * o.om_ + om_ * o.re_;
  re_ = std::move(re);
  om_ = std::move(om);
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero in Q(w)");
  if (o.is_rational()) {
    re_ /= o.re_;
    om_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Complex FieldElem::to_complex() const {
  return {re_.get_d(), om_.get_d() * std::sqrt(3.0)};
}

FieldElem pow(const FieldElem& base, unsigned exponent) {
  FieldElem result(1);
  FieldElem b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

int compare(const FieldElem& a, const FieldElem& b) {
  if (int c = cmp(a.re(), b.re()); c != 0) return c < 0 ? -1 : 1;
  if (int c = cmp(a.om(), b.om()); c != 0) return c < 0 ? -1 : 1;
  return 0;
}

std::string to_string(const FieldElem& x) {
  if (x.is_rational()) return to_string(x.re());
  std::ostringstream os;
  const Rational& b = x.om();
  bool have_re = sgn(x.re()) != 0;
  if (have_re) os << to_string(x.re()) << (sgn(b) < 0 ? " - " : " + ");
  else if (sgn(b) < 0) os << "-";
  Rational mag = abs(b);
  if (mag != 1) os << to_string(mag) << "*";
  os << "w";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << to_string(x); }

namespace {

bool best_fraction(double v, long max_den, double tol, Rational& out) {
  // continued-fraction convergents
  if (!std::isfinite(v)) return false;
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = v;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(x);
    if (std::abs(a) > 1e15) break;
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0;
    long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - v) <= tol) {
      out = make_rational(h1, k1);
      return true;
    }
    double frac = x - a;
    if (frac < 1e-300) break;
    x = 1.0 / frac;
  }
  return false;
}

}  // namespace

bool recognize(const Complex& z, FieldElem& out, double tol, long max_den) {
  Rational a, b;
  if (!best_fraction(z.real(), max_den, tol, a)) return false;
  if (!best_fraction(z.imag() / std::sqrt(3.0), max_den, tol, b)) return false;
  out = FieldElem(a, b);
  return true;
}

}  // namespace painleve
