#include "painleve/closed_form.hpp"

#include <algorithm>
#include <cmath>

namespace painleve {

int PoleSet::count() const {
  int c = 0;
  for (const auto& p : poles) c += p.multiplicity;
  return c;
}

namespace {

UPoly<Complex> trimmed(const UPoly<Complex>& p, double floor) {
  std::vector<Complex> c = p.coeffs();
  while (!c.empty() && std::abs(c.back()) <= floor) c.pop_back();
  return UPoly<Complex>(std::move(c));
}

std::vector<Complex> quadratic_roots(const UPoly<Complex>& q) {
  if (q.degree() == 1) return {-q.coeff(0) / q.coeff(1)};
  if (q.degree() != 2) return {};
  const Complex a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
  const Complex disc = std::sqrt(b * b - 4.0 * a * c);
  // Avoid cancellation: pick the sign that adds magnitudes.
  const Complex big = (std::real(std::conj(b) * disc) >= 0) ? -(b + disc) / 2.0 : -(b - disc) / 2.0;
  if (big == Complex{}) return {Complex{}, Complex{}};
  return {big / a, c / big};
}

Complex polish(const UPoly<Complex>& p, Complex z, int steps) {
  const UPoly<Complex> dp = p.derivative();
  for (int k = 0; k < steps; ++k) {
    const Complex d = dp(z);
    if (d == Complex{}) break;
    const Complex step = p(z) / d;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
  }
  return z;
}

}  // namespace

PoleSet pole_set(const ClosedFormParams<Complex>& params) {
  double scale = 0;
  for (const auto& c : params.v) scale = std::max(scale, std::abs(c));
  if (scale == 0) throw DegenerateSolution("all quadratics vanish, so the denominator is identically zero");
  const double floor = 1e-14 * scale;

  const Complex e = std::polar(1.0, 2.0 * M_PI / 3.0);
  const UPoly<Complex> a = params.A(), b = params.B(), c = params.C();
  PoleSet out;
  std::vector<Pole> raw;
  for (int k = 0; k < 3; ++k) {
    const Complex ek = std::pow(e, k), e2k = std::pow(e, 2 * k);
    const UPoly<Complex> q = trimmed(a + UPoly<Complex>(ek) * b + UPoly<Complex>(e2k) * c, floor);
    if (q.is_zero()) throw DegenerateSolution("the denominator A^3 + B^3 + C^3 - 3ABC vanishes identically");
    for (const Complex& r : quadratic_roots(q)) raw.push_back({polish(q, r, 2), 1, k});
  }
  for (const Pole& p : raw) {
    auto it = std::find_if(out.poles.begin(), out.poles.end(), [&](const Pole& o) {
      return std::abs(o.t - p.t) <= 1e-7 * std::max(1.0, std::abs(p.t));
    });
    if (it == out.poles.end()) out.poles.push_back(p);
    else ++it->multiplicity;
  }
  std::sort(out.poles.begin(), out.poles.end(), [](const Pole& x, const Pole& y) {
    if (x.t.real() != y.t.real()) return x.t.real() < y.t.real();
    return x.t.imag() < y.t.imag();
  });
  out.degree = out.count();
  return out;
}

std::vector<std::array<Complex, 3>> local_expansion(const ClosedFormParams<Complex>& params, Complex pole, int depth) {
  if (depth < -1) throw std::invalid_argument("depth must be at least -1");
  const ClosedForm<Complex> cf(params);
  const UPoly<Complex>& den = cf.denominator();
  if (den.degree() < 1) throw std::invalid_argument("the solution has no poles");
  pole = polish(den, pole, 3);

  std::vector<Complex> ds = den.shifted(pole).coeffs();
  ds.resize(std::max<std::size_t>(ds.size(), 2));
  double scale = 0;
  for (const auto& c : ds) scale += std::abs(c);
  if (std::abs(ds[1]) <= 1e-8 * scale) throw NonSimplePole("pole is not simple; only simple poles are supported");
  // D(t0 + tau) = tau * D1(tau) once the (rounding-level) constant is dropped.
  const std::vector<Complex> d1(ds.begin() + 1, ds.end());

  const int count = depth + 2;
  std::vector<std::array<Complex, 3>> out(count);
  for (int i = 0; i < 3; ++i) {
    const std::vector<Complex> ns = cf.numerator(i).shifted(pole).coeffs();
    std::vector<Complex> q(count);
    for (int m = 0; m < count; ++m) {
      Complex acc = m < static_cast<int>(ns.size()) ? ns[m] : Complex{};
      for (int j = 1; j <= m && j < static_cast<int>(d1.size()); ++j) acc -= d1[j] * q[m - j];
      q[m] = acc / d1[0];
      out[m][i] = q[m];
    }
  }
  return out;
}

}  // namespace painleve
