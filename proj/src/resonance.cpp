#include "painleve/resonance.hpp"

#include <map>
#include <sstream>

#include <Eigen/SVD>

#include "painleve/roots.hpp"

namespace painleve {

const char* to_string(BranchClass c) {
  switch (c) {
    case BranchClass::RightSeries: return "right";
    case BranchClass::MixedAnnulus: return "annulus";
    case BranchClass::LeftSeries: return "left";
  }
  return "unknown";
}

ResonanceMatrix build_resonance_matrix(const ODESystem& sys, const Balance& bal) {
  if (bal.has_zero) throw ParticularSolutionBranch("balance " + to_string(bal) + " has a zero coefficient (particular-solution branch)");
  const std::size_t n = sys.size();
  if (bal.coeffs.size() != n || bal.exponents.size() != n)
    throw std::invalid_argument("balance does not match the system size");

  std::map<std::string, FieldElem> at;
  for (std::size_t j = 0; j < n; ++j) {
    at[sys.var_names[j]] = bal.coeffs[j];
    at[prime(sys.var_names[j])] = bal.coeffs[j] * FieldElem(bal.exponents[j]);
  }

  ResonanceMatrix m = zero_matrix<PolyInS>(n, n);
  const PolyInS s = PolyInS::identity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const FieldElem dx = sys.rhs[i].derivative(sys.var_names[j]).evaluate(at);
      const FieldElem dv = sys.rhs[i].derivative(prime(sys.var_names[j])).evaluate(at);
      PolyInS entry = PolyInS(-dx) - PolyInS(dv) * (PolyInS(FieldElem(bal.exponents[j])) + s);
      if (i == j) {
        const PolyInS shifted = PolyInS(FieldElem(bal.exponents[i])) + s;
        entry += shifted * (shifted - PolyInS(FieldElem(1)));
      }
      m(i, j) = std::move(entry);
    }
  }
  return m;
}

ResonanceReport resonance_report(const ODESystem& sys, const Balance& bal, double tol) {
  ResonanceReport r;
  r.balance = bal;
  r.tolerance = tol;
  r.matrix = build_resonance_matrix(sys, bal);
  r.poly = determinant(r.matrix);
  for (const PolyRoot& pr : roots_with_multiplicity(r.poly, tol)) {
    ResonanceRoot root;
    root.value = pr.value;
    root.alg_mult = pr.multiplicity;
    if (pr.exact()) {
      const Matrix<FieldElem> at = evaluate(r.matrix, std::get<FieldElem>(pr.value));
      root.null_basis = null_space(at);
      root.geo_mult = static_cast<int>(root.null_basis.size());
    } else {
      const Complex s = std::get<Complex>(pr.value);
      Eigen::MatrixXcd at(r.matrix.rows(), r.matrix.cols());
      for (Eigen::Index i = 0; i < at.rows(); ++i)
        for (Eigen::Index j = 0; j < at.cols(); ++j)
          at(i, j) = r.matrix(i, j).map([](const FieldElem& c) { return c.to_complex(); })(s);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(at);
      const auto& sv = svd.singularValues();
      const double scale = std::max(1.0, sv(0));
      int nullity = 0;
      for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) <= 1e-8 * scale) ++nullity;
      root.geo_mult = nullity;
    }
    r.roots.push_back(std::move(root));
  }
  r.branch_class = classify_branch(r);
  return r;
}

BranchClass classify_branch(const ResonanceReport& report) {
  bool generic_removed = false;
  bool any_positive = false, any_nonpositive = false, any_negative = false, any_zero = false;
  for (const ResonanceRoot& root : report.roots) {
    int copies = root.alg_mult;
    const double v = root.numeric().real();
    const bool is_minus_one = root.exact() && std::get<FieldElem>(root.value) == FieldElem(-1);
    if (is_minus_one && !generic_removed) {
      --copies;
      generic_removed = true;
    }
    if (copies <= 0) continue;
    if (std::abs(v) <= report.tolerance) any_zero = true;
    else if (v > 0) any_positive = true;
    else any_negative = true;
  }
  any_nonpositive = any_negative || any_zero;
  if (!any_nonpositive) return BranchClass::RightSeries;
  if (!any_positive && !any_zero) return BranchClass::LeftSeries;
  return BranchClass::MixedAnnulus;
}

int constant_count(const ResonanceReport& report) {
  int total = 0;
  for (const auto& r : report.roots) total += r.geo_mult;
  return total;
}

std::string resonance_pattern(const ResonanceReport& report) {
  std::ostringstream os;
  bool first = true;
  for (const auto& r : report.roots) {
    if (!first) os << ", ";
    first = false;
    if (r.exact()) {
      os << to_string(std::get<FieldElem>(r.value));
    } else {
      const Complex z = std::get<Complex>(r.value);
      os << z.real();
      if (z.imag() != 0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    }
    if (r.alg_mult > 1) os << " (" << r.alg_mult << ")";
  }
  return os.str();
}

}  // namespace painleve
