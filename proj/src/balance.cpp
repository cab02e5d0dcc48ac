#include "painleve/balance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "painleve/linalg.hpp"

namespace painleve {

Balance Balance::make(std::vector<Rational> exponents, std::vector<FieldElem> coeffs) {
  Balance b;
  b.exponents = std::move(exponents);
  b.coeffs = std::move(coeffs);
  b.has_zero = std::any_of(b.coeffs.begin(), b.coeffs.end(), [](const FieldElem& c) { return c.is_zero(); });
  return b;
}

Balance Balance::conj() const {
  Balance b = *this;
  for (auto& c : b.coeffs) c = c.conj();
  return b;
}

bool operator==(const Balance& a, const Balance& b) { return a.exponents == b.exponents && a.coeffs == b.coeffs; }

std::string to_string(const Balance& b) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) os << (i ? ", " : "") << to_string(b.coeffs[i]);
  os << "}";
  return os.str();
}

std::vector<Rational> dominant_exponents(const ODESystem& sys) {
  const std::size_t n = sys.size();
  std::vector<std::vector<FieldElem>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const ParamPoly& f = sys.rhs[i];
    const auto& vars = f.variables();
    for (const auto& [e, c] : f.terms()) {
      std::vector<FieldElem> row(n + 1, FieldElem(0));
      long derivs = 0;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        if (e[k] == 0) continue;
        const std::string& sym = vars[k];
        const bool is_derivative = sym.back() == '\'';
        const std::string base = is_derivative ? sym.substr(0, sym.size() - 1) : sym;
        auto it = std::find(sys.var_names.begin(), sys.var_names.end(), base);
        if (it == sys.var_names.end()) throw BalanceError("unexpected symbol '" + sym + "' in right-hand side");
        row[it - sys.var_names.begin()] += FieldElem(static_cast<long>(e[k]));
        if (is_derivative) derivs += e[k];
      }
      row[i] -= FieldElem(1);
      row[n] = FieldElem(derivs - 2);
      rows.push_back(std::move(row));
    }
  }
  Matrix<FieldElem> m = zero_matrix<FieldElem>(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n + 1));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j <= n; ++j) m(r, j) = rows[r][j];
  const RowEchelon<FieldElem> e = rref(m);
  if (!e.pivots.empty() && e.pivots.back() == static_cast<int>(n))
    throw BalanceError("no exponent vector makes every term dominant; subdominant balances are not analysed");
  if (e.rank() < static_cast<Eigen::Index>(n))
    throw BalanceError("the dominant exponents are not uniquely determined by the system");
  std::vector<Rational> p(n);
  for (std::size_t r = 0; r < n; ++r) p[e.pivots[r]] = e.reduced(r, n).re();
  return p;
}

BalanceEquations leading_order_equations(const ODESystem& sys, const std::vector<Rational>& p) {
  BalanceEquations out;
  out.exponents = p;
  std::map<std::string, ParamPoly> sub;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    const std::string sym = "c_" + sys.var_names[j];
    out.symbols.push_back(sym);
    const ParamPoly c = ParamPoly::symbol(sym);
    sub[sys.var_names[j]] = c;
    sub[prime(sys.var_names[j])] = c * FieldElem(p[j]);
  }
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const FieldElem lead(p[i] * (p[i] - 1));
    ParamPoly eq = ParamPoly::symbol(out.symbols[i]) * lead - sys.rhs[i].substitute(sub);
    out.polys.push_back(eq.pruned());
  }
  return out;
}

std::vector<FieldElem> verify_balance(const BalanceEquations& eqs, const Balance& cand) {
  if (cand.coeffs.size() != eqs.symbols.size()) throw std::invalid_argument("balance has the wrong number of coefficients");
  std::map<std::string, FieldElem> at;
  for (std::size_t j = 0; j < eqs.symbols.size(); ++j) at[eqs.symbols[j]] = cand.coeffs[j];
  std::vector<FieldElem> r;
  for (const auto& p : eqs.polys) r.push_back(p.evaluate(at));
  return r;
}

std::optional<Balance> recognize_exact(const BalanceEquations& eqs, const std::vector<Complex>& coeffs) {
  std::vector<FieldElem> exact(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (!recognize(coeffs[j], exact[j], 1e-9)) return std::nullopt;
  Balance b = Balance::make(eqs.exponents, std::move(exact));
  for (const auto& r : verify_balance(eqs, b))
    if (!r.is_zero()) return std::nullopt;
  return b;
}

namespace {

using VecC = Eigen::VectorXcd;

struct NewtonOutcome {
  bool converged = false;
  VecC x;
};

class NewtonSolver {
public:
  NewtonSolver(const BalanceEquations& eqs, const NewtonConfig& cfg)
      : f_(eqs.polys, eqs.symbols), cfg_(cfg), n_(eqs.symbols.size()) {}

  // Plain Newton step, or the deflated step dx / (1 - eta) where eta is
  // the directional derivative of log prod_k (1/|x - r_k|^2 + 1).
  NewtonOutcome run(VecC x, const std::vector<VecC>* deflate, int max_iter) const {
    for (int it = 0; it < max_iter; ++it) {
      const auto [fx, jx] = eval(x);
      Eigen::PartialPivLU<Eigen::MatrixXcd> lu(jx);
      VecC dx = -lu.solve(fx);
      if (!dx.allFinite()) return {false, x};
      if (deflate && !deflate->empty()) {
        double eta = 0;
        for (const VecC& r : *deflate) {
          const VecC diff = x - r;
          const double d2 = diff.squaredNorm();
          if (d2 == 0) return {false, x};
          const double dir = 2.0 * diff.dot(dx).real();
          eta += -(1.0 / (d2 * d2)) / (1.0 / d2 + 1.0) * dir;
        }
        if (std::abs(1.0 - eta) < 1e-14) return {false, x};
        dx /= (1.0 - eta);
      }
      x += dx;
      if (x.norm() > 1e8) return {false, x};
      if (dx.norm() <= cfg_.tol * (1.0 + x.norm())) {
        const double res = eval(x).first.norm();
        return {res < 1e-8, x};
      }
    }
    return {false, x};
  }

  double residual(const VecC& x) const { return eval(x).first.norm(); }

private:
  std::pair<VecC, Eigen::MatrixXcd> eval(const VecC& x) const {
    std::vector<Complex> at(x.data(), x.data() + x.size());
    const auto v = f_(at);
    const auto j = f_.jacobian(at);
    VecC fx(n_);
    Eigen::MatrixXcd jx(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      fx(i) = v[i];
      for (std::size_t k = 0; k < n_; ++k) jx(i, k) = j[i][k];
    }
    return {fx, jx};
  }

  CompiledPolys f_;
  NewtonConfig cfg_;
  std::size_t n_;
};

VecC random_start(std::mt19937_64& rng, std::size_t n, double radius) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  VecC v(n);
  for (std::size_t i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
  const double r = radius * std::pow(uniform(rng), 1.0 / (2.0 * n));
  return v * (r / v.norm());
}

bool lex_less(const VecC& a, const VecC& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

double max_dist(const VecC& a, const VecC& b) { return (a - b).cwiseAbs().maxCoeff(); }

bool known(const std::vector<VecC>& roots, const VecC& x, double tol) {
  return std::any_of(roots.begin(), roots.end(), [&](const VecC& r) { return max_dist(r, x) <= tol; });
}

}  // namespace

NumericEnumeration enumerate_balances_numeric(const BalanceEquations& eqs, const NewtonConfig& cfg) {
  NumericEnumeration out;
  const std::size_t n = eqs.symbols.size();
  out.bezout_bound = 1;
  for (const auto& p : eqs.polys) out.bezout_bound *= std::max(1, p.total_degree());
  out.starts = cfg.starts;

  const NewtonSolver solver(eqs, cfg);
  std::mt19937_64 rng(cfg.seed);

  // Independent starts; endpoints sorted before clustering so the result
  // does not depend on evaluation order.
  std::vector<VecC> endpoints;
  for (int s = 0; s < cfg.starts; ++s) {
    NewtonOutcome o = solver.run(random_start(rng, n, cfg.radius), nullptr, cfg.max_iter);
    if (o.converged) endpoints.push_back(std::move(o.x));
  }
  out.converged_starts = static_cast<int>(endpoints.size());
  std::sort(endpoints.begin(), endpoints.end(), lex_less);
  std::vector<VecC> roots;
  for (const VecC& x : endpoints)
    if (!known(roots, x, cfg.cluster_tol)) roots.push_back(x);

  // Deflated restarts for whatever the plain iteration missed.
  if (static_cast<long>(roots.size()) < out.bezout_bound) {
    std::mt19937_64 rng2(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int s = 0; s < cfg.starts && static_cast<long>(roots.size()) < out.bezout_bound; ++s) {
      NewtonOutcome o = solver.run(random_start(rng2, n, cfg.radius), &roots, cfg.max_iter);
      if (!o.converged) continue;
      NewtonOutcome polished = solver.run(o.x, nullptr, 5);
      const VecC& x = polished.converged ? polished.x : o.x;
      if (!known(roots, x, cfg.cluster_tol)) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end(), lex_less);
  }

  for (VecC& r : roots) {
    NewtonOutcome polished = solver.run(r, nullptr, 3);
    if (polished.converged) r = polished.x;
    NumericBalance b;
    b.coeffs.assign(r.data(), r.data() + r.size());
    b.residual = solver.residual(r);
    b.has_zero = std::any_of(b.coeffs.begin(), b.coeffs.end(),
                             [&](const Complex& c) { return std::abs(c) <= cfg.cluster_tol; });
    b.exact = recognize_exact(eqs, b.coeffs);
    out.roots.push_back(std::move(b));
  }

  if (static_cast<long>(out.roots.size()) < out.bezout_bound) {
    std::ostringstream msg;
    msg << "found " << out.roots.size() << " of at most " << out.bezout_bound << " roots after " << cfg.starts
        << " starts";
    out.warnings.push_back(msg.str());
  }
  return out;
}

}  // namespace painleve
