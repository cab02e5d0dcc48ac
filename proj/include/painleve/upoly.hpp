#pragma once

// Dense univariate polynomials templated on the coefficient scalar.
//
// UPoly<FieldElem> is the resonance polynomial ring Q(w)[s]; UPoly<Complex>
// and UPoly<Rational> serve the closed-form solution and root isolation.

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "painleve/field.hpp"

namespace painleve {

template <class Scalar>
class UPoly {
public:
  UPoly() = default;
  UPoly(Scalar c) : coeffs_{std::move(c)} { trim(); }
  UPoly(std::initializer_list<Scalar> low_to_high) : coeffs_(low_to_high) { trim(); }
  explicit UPoly(std::vector<Scalar> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

  /// The monomial s.
  static UPoly identity() { return UPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
  /// (s - root)
  static UPoly linear(const Scalar& root) { return UPoly(std::vector<Scalar>{-root, Scalar(1)}); }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Scalar(0);
  }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  template <class Arg>
  Arg operator()(const Arg& x) const {
    Arg acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Arg(*it);
    return acc;
  }

  UPoly derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Scalar(static_cast<long>(k)));
    return UPoly(std::move(d));
  }

  /// p(s + a), by repeated synthetic division.
  UPoly shifted(const Scalar& a) const {
    std::vector<Scalar> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
    return UPoly(std::move(c));
  }

  /// Division by (s - root): returns quotient, remainder = p(root).
  std::pair<UPoly, Scalar> divide_linear(const Scalar& root) const {
    if (coeffs_.empty()) return {UPoly(), Scalar(0)};
    std::vector<Scalar> q(coeffs_.size() - 1, Scalar(0));
    Scalar carry = coeffs_.back();
    for (int k = degree() - 1; k >= 0; --k) {
      q[k] = carry;
      carry = coeffs_[k] + carry * root;
    }
    return {UPoly(std::move(q)), carry};
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(c));
  }
  UPoly operator-() const {
    std::vector<Scalar> c = coeffs_;
    for (auto& x : c) x = -x;
    return UPoly(std::move(c));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Euclidean division (field coefficients only).
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Scalar> r = coeffs_;
    if (degree() < d.degree()) return {UPoly(), *this};
    std::vector<Scalar> q(degree() - d.degree() + 1, Scalar(0));
    const Scalar lead = d.leading();
    for (int k = degree() - d.degree(); k >= 0; --k) {
      Scalar f = r[k + d.degree()] / lead;
      q[k] = f;
      for (int j = 0; j <= d.degree(); ++j) r[k + j] -= f * d.coeffs_[j];
    }
    r.resize(d.degree() > 0 ? d.degree() : 0);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  /// Coefficient-wise map to another scalar type.
  template <class Fn>
  auto map(Fn&& fn) const {
    using Out = decltype(fn(std::declval<const Scalar&>()));
    std::vector<Out> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(fn(x));
    return UPoly<Out>(std::move(c));
  }

private:
  void trim() {
    while (!coeffs_.empty() && painleve::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

template <class Scalar>
UPoly<Scalar> operator*(const Scalar& c, const UPoly<Scalar>& p) {
  return UPoly<Scalar>(c) * p;
}

template <class Scalar>
inline bool is_zero(const UPoly<Scalar>& p) { return p.is_zero(); }

/// Monic gcd over a field.
template <class Scalar>
UPoly<Scalar> gcd(UPoly<Scalar> a, UPoly<Scalar> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Scalar lead = a.leading();
  return UPoly<Scalar>(Scalar(1) / lead) * a;
}

/// Pretty form in the given variable, highest power first.
template <class Scalar>
std::string to_string(const UPoly<Scalar>& p, const std::string& var = "s") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Scalar& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (cs != "1") os << (compound ? "(" + cs + ")" : cs) << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

using PolyInS = UPoly<FieldElem>;

}  // namespace painleve

namespace Eigen {

template <>
struct NumTraits<painleve::PolyInS> : GenericNumTraits<painleve::PolyInS> {
  using Real = painleve::PolyInS;
  using NonInteger = painleve::PolyInS;
  using Nested = painleve::PolyInS;
  using Literal = painleve::PolyInS;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
