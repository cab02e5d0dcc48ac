#include "painleve/verify.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>
#include <sstream>

namespace painleve {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kB5[7] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600, 0.0, 7571.0 / 16695, 393.0 / 640, -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

class Field {
public:
  explicit Field(const ODESystem& sys) : rhs_(compile_rhs(sys)), n_(sys.size()) {}

  State operator()(const State& y) const {
    const std::vector<Complex> acc = rhs_(y);
    State dy(2 * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      dy[2 * i] = y[2 * i + 1];
      dy[2 * i + 1] = acc[i];
    }
    return dy;
  }

private:
  CompiledPolys rhs_;
  std::size_t n_;
};

// One DP step of size h in t (complex). Returns the fifth-order solution and
// fills err with the embedded difference; k[6] is f at the new point.
State dp_step(const Field& f, const State& y, const State& k0, Complex h, State& err, State& k_last) {
  const std::size_t m = y.size();
  std::vector<State> k(7);
  k[0] = k0;
  State tmp(m);
  for (int s = 1; s < 7; ++s) {
    for (std::size_t i = 0; i < m; ++i) {
      Complex acc{};
      for (int j = 0; j < s; ++j) acc += kA[s][j] * k[j][i];
      tmp[i] = y[i] + h * acc;
    }
    k[s] = f(tmp);
  }
  // Row 6 of A equals b5, so tmp already holds the fifth-order solution.
  err.assign(m, Complex{});
  for (std::size_t i = 0; i < m; ++i) {
    Complex e{};
    for (int j = 0; j < 7; ++j) e += (kB5[j] - kB4[j]) * k[j][i];
    err[i] = h * e;
  }
  k_last = k[6];
  return tmp;
}

bool finite(const State& y) {
  return std::all_of(y.begin(), y.end(), [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

}  // namespace

State Trajectory::at(Complex t) const {
  if (times.empty()) throw std::out_of_range("empty trajectory");
  if (times.size() == 1) return states.front();
  const Complex span = times.back() - times.front();
  const double s = std::real((t - times.front()) * std::conj(span)) / std::norm(span) * path.back();
  auto it = std::upper_bound(path.begin(), path.end(), s);
  std::size_t k = it == path.begin() ? 0 : static_cast<std::size_t>(it - path.begin()) - 1;
  k = std::min(k, path.size() - 2);
  const Complex h = times[k + 1] - times[k];
  const double th = (s - path[k]) / (path[k + 1] - path[k]);
  const double h00 = (1 + 2 * th) * (1 - th) * (1 - th), h10 = th * (1 - th) * (1 - th);
  const double h01 = th * th * (3 - 2 * th), h11 = th * th * (th - 1);
  State out(states[k].size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = h00 * states[k][i] + h10 * h * slopes[k][i] + h01 * states[k + 1][i] + h11 * h * slopes[k + 1][i];
  return out;
}

Trajectory integrate(const ODESystem& sys, const State& init, Complex ta, Complex tb, const IntegrateOptions& opt) {
  if (init.size() != 2 * sys.size()) throw std::invalid_argument("initial state has the wrong size");
  const Field f(sys);
  const Complex span = tb - ta;
  Trajectory tr;
  State y = init, k0 = f(y);
  tr.times.push_back(ta);
  tr.path.push_back(0.0);
  tr.states.push_back(y);
  tr.slopes.push_back(k0);
  if (span == Complex{}) return tr;

  double s = 0, h = opt.initial_step;
  State err, k_last;
  for (long step = 0; s < 1.0; ++step) {
    if (step >= opt.max_steps) {
      tr.complete = false;
      tr.diagnostic = "step budget exhausted";
      return tr;
    }
    h = std::min(h, 1.0 - s);
    const State y1 = dp_step(f, y, k0, h * span, err, k_last);
    double ratio = 0;
    if (finite(y1)) {
      for (std::size_t i = 0; i < y.size(); ++i) {
        const double sc = opt.tol * (1.0 + std::max(std::abs(y[i]), std::abs(y1[i])));
        ratio = std::max(ratio, std::abs(err[i]) / sc);
      }
    } else {
      ratio = 1e10;
    }
    if (ratio <= 1.0) {
      s = (1.0 - s <= h) ? 1.0 : s + h;
      y = y1;
      k0 = k_last;
      tr.times.push_back(ta + s * span);
      tr.path.push_back(s);
      tr.states.push_back(y);
      tr.slopes.push_back(k0);
      const bool large = std::any_of(y.begin(), y.end(), [&](const Complex& z) { return std::abs(z) > opt.blowup; });
      if (large && s < 1.0) {
        std::ostringstream msg;
        msg << "solution blew up near t = (" << tr.times.back().real() << ", " << tr.times.back().imag() << ")";
        tr.complete = false;
        tr.diagnostic = msg.str();
        return tr;
      }
    } else {
      ++tr.rejected_steps;
    }
    const double factor = ratio == 0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
    h *= ratio <= 1.0 ? factor : std::min(factor, 0.9);
    if (h < opt.min_step && s < 1.0) {
      std::ostringstream msg;
      const Complex t = ta + s * span;
      msg << "step size underflow at t = (" << t.real() << ", " << t.imag() << "), likely a singularity";
      tr.complete = false;
      tr.diagnostic = msg.str();
      return tr;
    }
  }
  return tr;
}

State integrate_fixed(const ODESystem& sys, const State& init, Complex ta, Complex tb, int steps) {
  const Field f(sys);
  const Complex h = (tb - ta) / static_cast<double>(steps);
  State y = init, k0 = f(y), err, k_last;
  for (int k = 0; k < steps; ++k) {
    y = dp_step(f, y, k0, h, err, k_last);
    k0 = k_last;
  }
  return y;
}

TrajectoryProvider closed_form_provider(const ClosedFormParams<Complex>& params) {
  auto cf = std::make_shared<ClosedForm<Complex>>(params);
  return [cf](Complex t) {
    const auto v = (*cf)(t);
    return Jet{{v.value.begin(), v.value.end()}, {v.d1.begin(), v.d1.end()}, {v.d2.begin(), v.d2.end()}};
  };
}

TrajectoryProvider finite_difference_provider(std::function<std::vector<Complex>(Complex)> f, double h) {
  return [f = std::move(f), h](Complex t) {
    const auto f0 = f(t);
    const auto p1 = f(t + h), m1 = f(t - h), p2 = f(t + h / 2), m2 = f(t - h / 2);
    Jet j;
    j.value = f0;
    for (std::size_t i = 0; i < f0.size(); ++i) {
      const Complex d1h = (p1[i] - m1[i]) / (2 * h), d1h2 = (p2[i] - m2[i]) / h;
      const Complex d2h = (p1[i] - 2.0 * f0[i] + m1[i]) / (h * h);
      const Complex d2h2 = (p2[i] - 2.0 * f0[i] + m2[i]) / (h * h / 4);
      j.d1.push_back((4.0 * d1h2 - d1h) / 3.0);
      j.d2.push_back((4.0 * d2h2 - d2h) / 3.0);
    }
    return j;
  };
}

TrajectoryProvider series_provider(const LaurentSeries& series, const std::map<std::string, Complex>& params,
                                   Complex t0) {
  const std::size_t n = series.var_names.size();
  const int d = series.direction();
  std::vector<std::vector<Complex>> coeff(series.coeffs.size(), std::vector<Complex>(n));
  std::vector<std::vector<double>> power(series.coeffs.size(), std::vector<double>(n));
  for (std::size_t m = 0; m < series.coeffs.size(); ++m)
    for (std::size_t i = 0; i < n; ++i) {
      coeff[m][i] = series.coeffs[m][i].evaluate(params);
      power[m][i] = to_double(series.base_exponents[i]) + d * static_cast<double>(m);
    }
  return [coeff, power, n, t0](Complex t) {
    const Complex tau = t - t0;
    Jet j{std::vector<Complex>(n), std::vector<Complex>(n), std::vector<Complex>(n)};
    for (std::size_t m = 0; m < coeff.size(); ++m)
      for (std::size_t i = 0; i < n; ++i) {
        const double q = power[m][i];
        const Complex base = std::pow(tau, q - 2);
        j.value[i] += coeff[m][i] * base * tau * tau;
        j.d1[i] += coeff[m][i] * q * base * tau;
        j.d2[i] += coeff[m][i] * q * (q - 1) * base;
      }
    return j;
  };
}

double residual(const ODESystem& sys, const TrajectoryProvider& fn, const std::vector<Complex>& samples) {
  const CompiledPolys rhs = compile_rhs(sys);
  const std::size_t n = sys.size();
  double worst = 0;
  for (const Complex& t : samples) {
    const Jet j = fn(t);
    State y(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      y[2 * i] = j.value[i];
      y[2 * i + 1] = j.d1[i];
    }
    const auto f = rhs(y);
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(j.d2[i] - f[i]));
  }
  return worst;
}

std::pair<Complex, std::vector<Complex>> SymmetryGenerator::act(double eps, Complex t, const std::vector<Complex>& x) const {
  std::vector<Complex> out = x;
  switch (kind) {
    case SymmetryKind::Translation: return {t + eps, out};
    case SymmetryKind::Scaling: {
      for (auto& v : out) v *= std::exp(eps);
      return {std::exp(-eps) * t, out};
    }
    case SymmetryKind::Projective: {
      const Complex w = 1.0 + eps * t;
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = w * w * x[i] + (i < shift.size() ? shift[i] : 0.0) * eps * w;
      return {t / w, out};
    }
  }
  return {t, out};
}

TrajectoryProvider SymmetryGenerator::transform(const TrajectoryProvider& sol, double eps) const {
  switch (kind) {
    case SymmetryKind::Translation:
      return [sol, eps](Complex s) { return sol(s - eps); };
    case SymmetryKind::Scaling:
      return [sol, eps](Complex s) {
        const double l = std::exp(eps);
        Jet j = sol(l * s);
        for (auto& v : j.value) v *= l;
        for (auto& v : j.d1) v *= l * l;
        for (auto& v : j.d2) v *= l * l * l;
        return j;
      };
    case SymmetryKind::Projective:
      return [sol, eps, shift = shift](Complex s) {
        // Inverse time map s -> g(s) = s / (1 - eps s); x~(s) = W x(g) + h
        // with W = g' = (1 - eps s)^-2 and h_i = shift_i eps / (1 - eps s).
        const Complex w = 1.0 - eps * s;
        if (std::abs(w) < 1e-12) throw PoleError("projective transformation maps this time to infinity", s);
        const Complex g = s / w, g1 = 1.0 / (w * w), g2 = 2.0 * eps / (w * w * w);
        const Complex W = g1, W1 = g2, W2 = 6.0 * eps * eps / (w * w * w * w);
        const Jet b = sol(g);
        Jet j = b;
        for (std::size_t i = 0; i < b.value.size(); ++i) {
          const double c = i < shift.size() ? shift[i] : 0.0;
          const Complex h0 = c * eps / w, h1 = c * eps * eps / (w * w), h2 = 2.0 * c * eps * eps * eps / (w * w * w);
          j.value[i] = b.value[i] * W + h0;
          j.d1[i] = b.d1[i] * g1 * W + b.value[i] * W1 + h1;
          j.d2[i] = b.d2[i] * g1 * g1 * W + b.d1[i] * g2 * W + 2.0 * b.d1[i] * g1 * W1 + b.value[i] * W2 + h2;
        }
        return j;
      };
  }
  return sol;
}

std::vector<SymmetryGenerator> sl2_symmetries() {
  return {{SymmetryKind::Translation, "Gamma1", {}},
          {SymmetryKind::Scaling, "Gamma2", {}},
          {SymmetryKind::Projective, "Gamma3", {-2.0, 0.0, 0.0}}};
}

double symmetry_check(const ODESystem& sys, const SymmetryGenerator& gen, const TrajectoryProvider& sol, double eps,
                      const std::vector<Complex>& samples) {
  return residual(sys, gen.transform(sol, eps), samples);
}

void write_csv(std::ostream& os, const Trajectory& traj, const std::vector<std::string>& var_names) {
  os << "t_re,t_im";
  for (const auto& v : var_names) os << "," << v << "_re," << v << "_im," << v << "'_re," << v << "'_im";
  os << "\n";
  os.precision(17);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    os << traj.times[k].real() << "," << traj.times[k].imag();
    for (const Complex& c : traj.states[k]) os << "," << c.real() << "," << c.imag();
    os << "\n";
  }
}

}  // namespace painleve
