#include "painleve/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace painleve {

namespace {

constexpr unsigned long kDivisorLimit = 1000000;

// Positive divisors of |n|, or nothing if |n| is too large to factor by trial division.
bool divisors(const mpz_class& n, std::vector<mpz_class>& out) {
  mpz_class m = abs(n);
  out.clear();
  if (m == 0) return false;
  if (!m.fits_ulong_p() || m.get_ui() > kDivisorLimit * kDivisorLimit) return false;
  unsigned long v = m.get_ui();
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d) continue;
    small.push_back(d);
    if (d != v / d) large.push_back(v / d);
  }
  for (auto d : small) out.emplace_back(d);
  for (auto it = large.rbegin(); it != large.rend(); ++it) out.emplace_back(*it);
  return true;
}

// Integer polynomial with the same roots, coefficients coprime.
std::vector<mpz_class> primitive_form(const UPoly<Rational>& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
  std::vector<mpz_class> z;
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * Rational(l);
    z.push_back(scaled.get_num());
  }
  mpz_class g = 0;
  for (const auto& c : z) g = gcd(g, c);
  if (g != 0)
    for (auto& c : z) c /= g;
  return z;
}

UPoly<Rational> part(const PolyInS& p, bool omega_part) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.push_back(omega_part ? x.om() : x.re());
  return UPoly<Rational>(std::move(c));
}

bool less_numeric(const Complex& a, const Complex& b, double tol) {
  if (std::abs(a.real() - b.real()) > tol) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly<Rational>& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  std::vector<mpz_class> z = primitive_form(p);
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<mpz_class> trimmed(z.begin() + low, z.end());
  if (trimmed.size() < 2) return roots;

  std::vector<mpz_class> num_div, den_div;
  if (!divisors(trimmed.front(), num_div) || !divisors(trimmed.back(), den_div)) return roots;
  std::vector<Rational> tz;
  for (const auto& c : trimmed) tz.emplace_back(c);
  const UPoly<Rational> q(std::move(tz));
  std::set<Rational> seen;
  for (const auto& a : num_div) {
    for (const auto& b : den_div) {
      for (int sign : {1, -1}) {
        Rational r(a * sign, b);
        r.canonicalize();
        if (seen.count(r)) continue;
        seen.insert(r);
        if (is_zero(q(r))) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<PolyInS> squarefree_factors(const PolyInS& p) {
  std::vector<PolyInS> out;
  if (p.degree() < 1) return out;
  const PolyInS dp = p.derivative();
  PolyInS a = gcd(p, dp);
  PolyInS b = p.divmod(a).first;
  PolyInS c = dp.divmod(a).first;
  PolyInS d = c - b.derivative();
  while (b.degree() >= 1) {
    PolyInS g = gcd(b, d);
    out.push_back(g);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

std::vector<Complex> aberth_roots(const UPoly<Complex>& p, double tol, int max_iter) {
  const int n = p.degree();
  if (n < 1) return {};
  // Monic copy
  std::vector<Complex> c = p.coeffs();
  const Complex lead = c.back();
  for (auto& x : c) x /= lead;
  const UPoly<Complex> q(c);
  const UPoly<Complex> dq = q.derivative();

  // Initial guesses on a circle bounded by the Cauchy radius.
  double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(c[k]), 1.0 / (n - k)));
  radius = std::max(radius, 1e-3);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * M_PI * k / n + 0.4;
    z[k] = std::polar(radius, angle);
  }

  for (int iter = 0; iter < max_iter; ++iter) {
    double max_step = 0;
    for (int k = 0; k < n; ++k) {
      const Complex f = q(z[k]);
      if (f == Complex{}) continue;
      const Complex ratio = f / dq(z[k]);
      Complex repulsion{};
      for (int j = 0; j < n; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (max_step < tol) return z;
  }
  // Accept if residuals are small even though the step criterion was not met.
  double worst = 0;
  for (const auto& r : z) worst = std::max(worst, std::abs(q(r)));
  if (worst < 1e-9) return z;
  std::ostringstream msg;
  msg << "root iteration did not converge on a factor of degree " << n;
  throw RootFindingError(msg.str());
}

std::vector<PolyRoot> roots_with_multiplicity(const PolyInS& p, double tol) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<PolyRoot> out;

  UPoly<Rational> re = part(p, false), om = part(p, true);
  UPoly<Rational> common = om.is_zero() ? re : gcd(re, om);

  PolyInS rest = p;
  for (const Rational& r : rational_roots(common)) {
    int mult = 0;
    while (rest.degree() >= 1) {
      auto [q, rem] = rest.divide_linear(FieldElem(r));
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult > 0) out.push_back({FieldElem(r), mult});
  }

  const std::vector<PolyInS> factors = squarefree_factors(rest);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const PolyInS& f = factors[k];
    if (f.degree() < 1) continue;
    const int mult = static_cast<int>(k) + 1;
    auto numeric = f.map([](const FieldElem& c) { return c.to_complex(); });
    std::vector<Complex> zs;
    try {
      zs = aberth_roots(numeric);
    } catch (const RootFindingError&) {
      throw RootFindingError("root iteration did not converge on factor " + to_string(f));
    }
    for (const Complex& z : zs) {
      FieldElem exact;
      if (recognize(z, exact, 1e-8) && f(exact).is_zero()) out.push_back({exact, mult});
      else out.push_back({z, mult});
    }
  }

  std::sort(out.begin(), out.end(), [tol](const PolyRoot& a, const PolyRoot& b) {
    return less_numeric(a.numeric(), b.numeric(), tol);
  });
  return out;
}

}  // namespace painleve
