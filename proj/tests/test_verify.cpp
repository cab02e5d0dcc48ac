#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "painleve/verify.hpp"

using namespace painleve;

namespace {

ClosedFormParams<Complex> params(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  ClosedFormParams<Complex> p;
  for (auto& c : p.v) c = {u(rng), u(rng)};
  return p;
}

// A real segment [a, b] far from every pole, if one exists near the origin.
std::pair<double, double> clear_segment(const PoleSet& ps) {
  for (double a = -3; a < 3; a += 0.25) {
    bool ok = true;
    for (double t = a; t <= a + 1 && ok; t += 0.01)
      for (const auto& p : ps.poles) ok = ok && std::abs(p.t - Complex(t)) > 0.3;
    if (ok) return {a, a + 1};
  }
  return {0, 0};
}

State state_at(const ClosedForm<Complex>& cf, Complex t) {
  const auto v = cf(t);
  State y;
  for (int i = 0; i < 3; ++i) {
    y.push_back(v.value[i]);
    y.push_back(v.d1[i]);
  }
  return y;
}

}  // namespace

TEST_CASE("integrator follows the closed form") {
  const ODESystem sys = paper_system();
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto p = params(seed);
    const auto [a, b] = clear_segment(pole_set(p));
    if (a == b) continue;
    const ClosedForm<Complex> cf(p);
    const Trajectory tr = integrate(sys, state_at(cf, a), a, b);
    REQUIRE(tr.complete);
    const State want = state_at(cf, b);
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(tr.back()[i] - want[i]) < 1e-7 * (1 + std::abs(want[i])));
    const State mid = tr.at(0.5 * (a + b)), exact = state_at(cf, 0.5 * (a + b));
    CHECK(std::abs(mid[0] - exact[0]) < 1e-6 * (1 + std::abs(exact[0])));
  }
}

TEST_CASE("fixed-step error falls at fifth order") {
  const ODESystem sys = paper_system();
  const auto p = params(1);
  const auto [a, b] = clear_segment(pole_set(p));
  REQUIRE(a != b);
  const ClosedForm<Complex> cf(p);
  const State y0 = state_at(cf, a), want = state_at(cf, b);
  auto err = [&](int n) {
    const State y = integrate_fixed(sys, y0, a, b, n);
    double e = 0;
    for (std::size_t i = 0; i < y.size(); ++i) e = std::max(e, std::abs(y[i] - want[i]));
    return e;
  };
  const double ratio = err(16) / err(32);
  CHECK(ratio > 20);
  CHECK(ratio < 45);
}

TEST_CASE("integration into a pole stops with a diagnostic") {
  const ODESystem sys = paper_system();
  const auto p = params(2);
  const PoleSet ps = pole_set(p);
  const ClosedForm<Complex> cf(p);
  const Complex target = ps.poles[0].t;
  Complex start = target + 1.0;
  while (true) {
    bool ok = true;
    for (const auto& q : ps.poles) ok = ok && std::abs(q.t - start) > 0.3;
    if (ok) break;
    start += Complex(0.37, 0.11);
  }
  // Aim past the pole so the segment runs through it.
  const Complex end = target + (target - start) * 1e-9;
  const Trajectory tr = integrate(sys, state_at(cf, start), start, end);
  CHECK_FALSE(tr.complete);
  CHECK(tr.diagnostic.find("t = (") != std::string::npos);
}

TEST_CASE("finite differences agree with analytic derivatives") {
  const auto p = params(5);
  const ClosedForm<Complex> cf(p);
  const auto fd = finite_difference_provider(
      [&](Complex t) {
        const auto v = cf(t);
        return std::vector<Complex>(v.value.begin(), v.value.end());
      },
      1e-3);
  const Complex t(2.5, 2.5);
  const Jet j = fd(t), exact = closed_form_provider(p)(t);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(j.d1[i] - exact.d1[i]) < 1e-7 * (1 + std::abs(exact.d1[i])));
    CHECK(std::abs(j.d2[i] - exact.d2[i]) < 1e-5 * (1 + std::abs(exact.d2[i])));
  }
}

TEST_CASE("symmetry actions keep solutions solutions") {
  const ODESystem sys = paper_system();
  const auto p = params(6);
  const PoleSet ps = pole_set(p);
  std::vector<Complex> samples;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-2, 2);
  while (samples.size() < 10) {
    const Complex s(u(rng), u(rng));
    bool ok = true;
    for (const auto& q : ps.poles) ok = ok && std::abs(q.t - s) > 0.4;
    if (ok) samples.push_back(s);
  }
  const auto sol = closed_form_provider(p);
  CHECK(residual(sys, sol, samples) < 1e-9);
  const auto gens = sl2_symmetries();
  REQUIRE(gens.size() == 3);
  CHECK(std::string(symmetry_algebra()) == "sl(2,R)");
  for (const auto& g : gens) CHECK(symmetry_check(sys, g, sol, 1e-2, samples) < 1e-7);

  // A wrong projective shift breaks the symmetry.
  SymmetryGenerator bad = gens[2];
  bad.shift = {2.0, 0.0, 0.0};
  CHECK(symmetry_check(sys, bad, sol, 1e-2, samples) > 1e-4);
}

TEST_CASE("point action and transformed solution agree") {
  const auto p = params(8);
  const auto sol = closed_form_provider(p);
  const double eps = 0.05;
  for (const auto& g : sl2_symmetries()) {
    const Complex t(0.3, -1.7);
    const Jet j = sol(t);
    const auto [tt, xx] = g.act(eps, t, j.value);
    const Jet k = g.transform(sol, eps)(tt);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(k.value[i] - xx[i]) < 1e-10 * (1 + std::abs(xx[i])));
  }
}

TEST_CASE("csv layout") {
  Trajectory tr;
  tr.times = {0.0, Complex(1, 2)};
  tr.path = {0, 1};
  tr.states = {{1.0, 2.0}, {3.0, Complex(4, 5)}};
  tr.slopes = tr.states;
  std::ostringstream os;
  write_csv(os, tr, {"x"});
  std::istringstream in(os.str());
  std::string head, row1, row2;
  std::getline(in, head);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK(head == "t_re,t_im,x_re,x_im,x'_re,x'_im");
  CHECK(row2 == "1,2,3,0,4,5");
}
