#pragma once

// Explicit general solution of the fixture system.
//
// With quadratics A, B, C and D = A^3 + B^3 + C^3 - 3ABC,
//   x = D' / (3D)
//   y = (C^2 A' + A^2 B' + B^2 C' - AB A' - BC B' - AC C') / D
//   z = (B^2 A' + C^2 B' + A^2 C' - AC A' - AB B' - BC C') / D.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "painleve/field.hpp"
#include "painleve/upoly.hpp"

namespace painleve {

template <class Scalar>
struct ClosedFormParams {
  /// a0, b0, c0, a1, b1, c1, a2, b2, c2: A = a0 + b0 t + c0 t^2, and so on.
  std::array<Scalar, 9> v{};

  UPoly<Scalar> A() const { return UPoly<Scalar>({v[0], v[1], v[2]}); }
  UPoly<Scalar> B() const { return UPoly<Scalar>({v[3], v[4], v[5]}); }
  UPoly<Scalar> C() const { return UPoly<Scalar>({v[6], v[7], v[8]}); }

  static const std::array<const char*, 9>& names() {
    static const std::array<const char*, 9> n{"a0", "b0", "c0", "a1", "b1", "c1", "a2", "b2", "c2"};
    return n;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using Out = decltype(fn(std::declval<const Scalar&>()));
    ClosedFormParams<Out> out;
    for (std::size_t k = 0; k < 9; ++k) out.v[k] = fn(v[k]);
    return out;
  }
};

class PoleError : public std::domain_error {
public:
  PoleError(const std::string& what, Complex at) : std::domain_error(what), at_(at) {}
  Complex at() const { return at_; }

private:
  Complex at_;
};

class DegenerateSolution : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <class Scalar>
struct ClosedFormValue {
  std::array<Scalar, 3> value, d1, d2;
};

namespace detail {

template <class Scalar>
bool vanishes(const Scalar& d, const UPoly<Scalar>&, const Scalar&) {
  return painleve::is_zero(d);
}

inline bool vanishes(const Complex& d, const UPoly<Complex>& poly, const Complex& t) {
  double scale = 0, r = 1;
  for (const auto& c : poly.coeffs()) {
    scale += std::abs(c) * r;
    r *= std::abs(t);
  }
  return std::abs(d) <= 1e-14 * scale;
}

template <class Scalar>
std::string describe(const Scalar& t) {
  return to_string(t);
}

inline std::string describe(const Complex& t) {
  return "(" + std::to_string(t.real()) + ", " + std::to_string(t.imag()) + ")";
}

}  // namespace detail

/// Numerators and denominator as polynomials in t, with derivatives.
template <class Scalar>
class ClosedForm {
public:
  explicit ClosedForm(const ClosedFormParams<Scalar>& p) : params_(p) {
    const auto a = p.A(), b = p.B(), c = p.C();
    const auto da = a.derivative(), db = b.derivative(), dc = c.derivative();
    den_ = a * a * a + b * b * b + c * c * c - UPoly<Scalar>(Scalar(3)) * a * b * c;
    num_[0] = UPoly<Scalar>(Scalar(1) / Scalar(3)) * den_.derivative();
    num_[1] = c * c * da + a * a * db + b * b * dc - a * b * da - b * c * db - a * c * dc;
    num_[2] = b * b * da + c * c * db + a * a * dc - a * c * da - a * b * db - b * c * dc;
    dden_ = den_.derivative();
    ddden_ = dden_.derivative();
    for (int i = 0; i < 3; ++i) {
      dnum_[i] = num_[i].derivative();
      ddnum_[i] = dnum_[i].derivative();
    }
  }

  const ClosedFormParams<Scalar>& params() const { return params_; }
  const UPoly<Scalar>& denominator() const { return den_; }
  const UPoly<Scalar>& numerator(int i) const { return num_[i]; }

  /// Throws PoleError where D(t) = 0.
  ClosedFormValue<Scalar> operator()(const Scalar& t) const {
    const Scalar d = den_(t);
    if (detail::vanishes(d, den_, t)) throw PoleError("closed-form solution has a pole at t = " + detail::describe(t), to_c(t));
    const Scalar d1 = dden_(t), d2 = ddden_(t);
    ClosedFormValue<Scalar> out;
    for (int i = 0; i < 3; ++i) {
      const Scalar n0 = num_[i](t), n1 = dnum_[i](t), n2 = ddnum_[i](t);
      // f = N/D, f' = (N'D - ND')/D^2, f'' = ((N''D - ND'')D - 2D'(N'D - ND'))/D^3
      const Scalar w = n1 * d - n0 * d1;
      out.value[i] = n0 / d;
      out.d1[i] = w / (d * d);
      out.d2[i] = ((n2 * d - n0 * d2) * d - Scalar(2) * d1 * w) / (d * d * d);
    }
    return out;
  }

private:
  static Complex to_c(const Scalar& t) {
    if constexpr (std::is_same_v<Scalar, Complex>) return t;
    else if constexpr (std::is_same_v<Scalar, FieldElem>) return t.to_complex();
    else return Complex(to_double(t), 0.0);
  }

  ClosedFormParams<Scalar> params_;
  UPoly<Scalar> den_, dden_, ddden_;
  std::array<UPoly<Scalar>, 3> num_, dnum_, ddnum_;
};

template <class Scalar>
ClosedFormValue<Scalar> eval_closed_form(const ClosedFormParams<Scalar>& params, const Scalar& t) {
  return ClosedForm<Scalar>(params)(t);
}

struct Pole {
  Complex t;
  int multiplicity = 1;
  int factor = 0;  ///< k of the vanishing factor A + e^k B + e^{2k} C, e^3 = 1
};

struct PoleSet {
  std::vector<Pole> poles;
  int degree = 0;  ///< degree of D; equals the multiplicity sum

  int count() const;
};

/// Roots of D through D = prod_k (A + e^k B + e^{2k} C). Throws
/// DegenerateSolution if D vanishes identically; a constant D gives no poles.
PoleSet pole_set(const ClosedFormParams<Complex>& params);

class NonSimplePole : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Laurent coefficients about a simple pole: result[m][i] is the
/// coefficient of tau^{m-1} in variable i, m = 0..depth+1.
std::vector<std::array<Complex, 3>> local_expansion(const ClosedFormParams<Complex>& params, Complex pole, int depth);

}  // namespace painleve
