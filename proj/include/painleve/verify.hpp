#pragma once

// Numeric cross-checks: time stepping, residuals, symmetry group actions.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "painleve/closed_form.hpp"
#include "painleve/series.hpp"
#include "painleve/system.hpp"

namespace painleve {

/// State layout (x, x', y, y', ...).
using State = std::vector<Complex>;

struct Trajectory {
  std::vector<Complex> times;
  std::vector<double> path;  ///< position of each sample on the segment, 0..1
  std::vector<State> states;
  std::vector<State> slopes;  ///< d state / dt, for Hermite interpolation
  bool complete = true;
  std::string diagnostic;
  int rejected_steps = 0;

  /// Cubic Hermite interpolation along the path.
  State at(Complex t) const;
  const State& back() const { return states.back(); }
};

struct IntegrateOptions {
  double tol = 1e-10;
  double initial_step = 1e-3;  ///< as a fraction of the path length
  double min_step = 1e-14;     ///< likewise; smaller steps abort
  long max_steps = 1000000;
  double blowup = 1e12;        ///< abort once any |y_i| exceeds this
};

/// Dormand-Prince 5(4) along the straight segment from ta to tb, which may
/// be complex. A step is accepted when the embedded error estimate is
/// below tol * (1 + |y|) componentwise.
Trajectory integrate(const ODESystem& sys, const State& init, Complex ta, Complex tb, const IntegrateOptions& opt = {});

/// Fixed-step Dormand-Prince fifth-order solution; for order checks.
State integrate_fixed(const ODESystem& sys, const State& init, Complex ta, Complex tb, int steps);

/// Value, first and second derivative of every dependent variable at t.
struct Jet {
  std::vector<Complex> value, d1, d2;
};
using TrajectoryProvider = std::function<Jet(Complex)>;

TrajectoryProvider closed_form_provider(const ClosedFormParams<Complex>& params);

/// Central differences with one Richardson step; error O(h^4) plus
/// rounding of order eps/h^2 in the second derivative.
TrajectoryProvider finite_difference_provider(std::function<std::vector<Complex>(Complex)> f, double h = 1e-5);

TrajectoryProvider series_provider(const LaurentSeries& series, const std::map<std::string, Complex>& params,
                                   Complex t0);

/// max over samples and equations of |x_i'' - F_i(x, x')|.
double residual(const ODESystem& sys, const TrajectoryProvider& fn, const std::vector<Complex>& samples);

enum class SymmetryKind { Translation, Scaling, Projective };

/// One-parameter group of point transformations of (t, x_i).
///   Translation: t~ = t + e, x~ = x
///   Scaling:     t~ = exp(-e) t, x~ = exp(e) x
///   Projective:  t~ = t / (1 + e t), x~_i = (1 + e t)^2 x_i + shift_i e (1 + e t)
struct SymmetryGenerator {
  SymmetryKind kind = SymmetryKind::Translation;
  std::string name;
  std::vector<double> shift;  ///< projective only

  /// Image (t~, x~) of a point.
  std::pair<Complex, std::vector<Complex>> act(double eps, Complex t, const std::vector<Complex>& x) const;
  /// Transformed solution s -> x~(s) with derivatives.
  TrajectoryProvider transform(const TrajectoryProvider& sol, double eps) const;
};

/// The generators d_t, -t d_t + x.d_x and -t^2 d_t + 2(-1 + t x) d_x + 2t y d_y + 2t z d_z
/// of the fixture; they span sl(2,R).
std::vector<SymmetryGenerator> sl2_symmetries();
inline const char* symmetry_algebra() { return "sl(2,R)"; }

double symmetry_check(const ODESystem& sys, const SymmetryGenerator& gen, const TrajectoryProvider& sol, double eps,
                      const std::vector<Complex>& samples);

/// Columns t_re, t_im, then x_re, x_im, x'_re, x'_im per variable.
void write_csv(std::ostream& os, const Trajectory& traj, const std::vector<std::string>& var_names);

}  // namespace painleve
