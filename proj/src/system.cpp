#include "painleve/system.hpp"

#include <algorithm>
#include <sstream>

namespace painleve {

bool operator==(const ODESystem& a, const ODESystem& b) {
  return a.var_names == b.var_names && a.rhs == b.rhs;
}

std::string serialize_system(const ODESystem& sys) {
  std::ostringstream os;
  os << "vars";
  for (std::size_t i = 0; i < sys.size(); ++i) os << (i ? ", " : " ") << sys.var_names[i];
  os << "\n";
  for (std::size_t i = 0; i < sys.size(); ++i) {
    os << prime(sys.var_names[i], 2);
    const ParamPoly g = -sys.rhs[i];
    if (!g.is_zero()) {
      std::string text = g.to_string();
      if (text.front() == '-') os << " - " << text.substr(1);
      else os << " + " << text;
    }
    os << " = 0\n";
  }
  return os.str();
}

std::string paper_system_text() {
  return "# three coupled cubic oscillators with sl(2,R) point symmetry\n"
         "vars x, y, z\n"
         "x'' + 3*(x*x' + y*z' + z*y') + x^3 + y^3 + z^3 + 6*x*y*z = 0\n"
         "y'' + 3*(x*y' + y*x' + z*z') + 3*(x^2*y + y^2*z + z^2*x) = 0\n"
         "z'' + 3*(x*z' + y*y' + z*x') + 3*(x*y^2 + y*z^2 + z*x^2) = 0\n";
}

ODESystem paper_system() {
  static const ODESystem sys = parse_system(paper_system_text());
  return sys;
}

CompiledPolys::CompiledPolys(const std::vector<ParamPoly>& polys, const std::vector<std::string>& symbols)
    : arity_(symbols.size()) {
  for (const ParamPoly& p : polys) {
    std::vector<std::size_t> where;
    for (const auto& v : p.variables()) {
      auto it = std::find(symbols.begin(), symbols.end(), v);
      where.push_back(it == symbols.end() ? symbols.size() : static_cast<std::size_t>(it - symbols.begin()));
    }
    std::vector<Term> terms;
    for (const auto& [e, c] : p.terms()) {
      Term t{c.to_complex(), std::vector<int>(arity_, 0)};
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (where[k] == symbols.size())
          throw std::invalid_argument("symbol '" + p.variables()[k] + "' not in compiled symbol list");
        t.exps[where[k]] = e[k];
      }
      terms.push_back(std::move(t));
    }
    polys_.push_back(std::move(terms));
  }
}

namespace {

Complex ipow(const Complex& z, int e) {
  Complex r(1);
  for (int k = 0; k < e; ++k) r *= z;
  return r;
}

}  // namespace

std::vector<Complex> CompiledPolys::operator()(const std::vector<Complex>& at) const {
  std::vector<Complex> out(polys_.size());
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    Complex acc{};
    for (const Term& t : polys_[i]) {
      Complex v = t.coeff;
      for (std::size_t k = 0; k < arity_; ++k)
        if (t.exps[k]) v *= ipow(at[k], t.exps[k]);
      acc += v;
    }
    out[i] = acc;
  }
  return out;
}

std::vector<std::vector<Complex>> CompiledPolys::jacobian(const std::vector<Complex>& at) const {
  std::vector<std::vector<Complex>> out(polys_.size(), std::vector<Complex>(arity_));
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    for (const Term& t : polys_[i]) {
      for (std::size_t j = 0; j < arity_; ++j) {
        if (t.exps[j] == 0) continue;
        Complex v = t.coeff * static_cast<double>(t.exps[j]);
        for (std::size_t k = 0; k < arity_; ++k) {
          const int e = t.exps[k] - (k == j ? 1 : 0);
          if (e) v *= ipow(at[k], e);
        }
        out[i][j] += v;
      }
    }
  }
  return out;
}

std::vector<std::string> state_symbols(const ODESystem& sys) {
  std::vector<std::string> s;
  for (const auto& v : sys.var_names) {
    s.push_back(v);
    s.push_back(prime(v));
  }
  return s;
}

CompiledPolys compile_rhs(const ODESystem& sys) { return CompiledPolys(sys.rhs, state_symbols(sys)); }

}  // namespace painleve
