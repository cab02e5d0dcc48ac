#include "painleve/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace painleve {

namespace {

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json strings(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json strings(const std::vector<FieldElem>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

double distance(const std::vector<Complex>& a, const std::vector<FieldElem>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i].to_complex()));
  return d;
}

Complex json_number(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
  if (v.is_object()) return {v.value("re", 0.0), v.value("im", 0.0)};
  throw std::invalid_argument("parameter must be a number, [re, im] or {\"re\":, \"im\":}");
}

}  // namespace

Analysis analyze(const ODESystem& sys, const AnalyzeOptions& opt) {
  Analysis a;
  a.system = sys;
  a.options = opt;
  a.exponents = dominant_exponents(sys);
  const BalanceEquations eqs = leading_order_equations(sys, a.exponents);
  a.newton.seed = opt.seed;
  a.newton.starts = opt.starts;
  a.numeric = enumerate_balances_numeric(eqs, a.newton);
  std::vector<Balance> exact;
  for (const auto& r : a.numeric.roots) {
    if (r.exact) exact.push_back(*r.exact);
    else a.unrecognized.push_back(r);
  }
  a.table = build_table(sys, exact, opt.tol);
  return a;
}

Json to_json(const ResonanceReport& r) {
  Json j;
  j["matrix_determinant"] = to_string(r.poly, "s");
  Json roots = Json::array();
  for (const auto& root : r.roots) {
    Json e;
    if (root.exact()) e["value"] = to_string(std::get<FieldElem>(root.value));
    else e["value"] = complex_json(root.numeric());
    e["exact"] = root.exact();
    e["algebraic_multiplicity"] = root.alg_mult;
    e["geometric_multiplicity"] = root.geo_mult;
    Json basis = Json::array();
    for (const auto& v : root.null_basis) {
      Json col = Json::array();
      for (Eigen::Index i = 0; i < v.size(); ++i) col.push_back(to_string(v(i)));
      basis.push_back(col);
    }
    e["null_basis"] = basis;
    roots.push_back(e);
  }
  j["roots"] = roots;
  j["pattern"] = resonance_pattern(r);
  j["branch"] = to_string(r.branch_class);
  j["arbitrary_constants"] = constant_count(r);
  j["tolerance"] = r.tolerance;
  return j;
}

Json to_json(const Analysis& a) {
  Json j;
  j["tool"] = "painleve";
  j["version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  Json sys;
  sys["variables"] = a.system.var_names;
  Json rhs = Json::array();
  for (const auto& f : a.system.rhs) rhs.push_back(f.to_string());
  sys["rhs"] = rhs;
  sys["text"] = serialize_system(a.system);
  j["system"] = sys;
  j["tolerances"] = {{"numeric", a.options.tol},
                     {"newton", a.newton.tol},
                     {"cluster", a.newton.cluster_tol},
                     {"recognition", a.options.recognize_tol}};
  j["seed"] = a.options.seed;
  j["exponents"] = strings(a.exponents);
  j["enumeration"] = {{"bezout_bound", a.numeric.bezout_bound},
                      {"starts", a.numeric.starts},
                      {"converged_starts", a.numeric.converged_starts},
                      {"distinct_roots", a.numeric.roots.size()},
                      {"warnings", a.numeric.warnings}};
  if (a.table.symmetry) j["cyclic_symmetry"] = *a.table.symmetry;
  else j["cyclic_symmetry"] = nullptr;

  Json rows = Json::array();
  int index = 0;
  for (const auto& row : a.table.rows) {
    Json b;
    b["index"] = ++index;
    b["triplet"] = row.group;
    b["member"] = row.member;
    b["coefficients"] = strings(row.balance.coeffs);
    b["has_zero"] = row.balance.has_zero;
    const NumericBalance* best = nullptr;
    double dist = std::numeric_limits<double>::infinity();
    for (const auto& r : a.numeric.roots) {
      const double d = distance(r.coeffs, row.balance.coeffs);
      if (d < dist) {
        dist = d;
        best = &r;
      }
    }
    if (best) {
      Json num = Json::array();
      for (const auto& z : best->coeffs) num.push_back(complex_json(z));
      b["numeric"] = {{"coefficients", num}, {"residual", best->residual}, {"distance_to_exact", dist},
                      {"tolerance", a.options.recognize_tol}};
    } else {
      b["numeric"] = nullptr;
    }
    if (row.report) b["resonances"] = to_json(*row.report);
    else b["resonances"] = nullptr;
    rows.push_back(b);
  }
  j["balances"] = rows;
  Json rest = Json::array();
  for (const auto& r : a.unrecognized) {
    Json num = Json::array();
    for (const auto& z : r.coeffs) num.push_back(complex_json(z));
    rest.push_back({{"coefficients", num}, {"residual", r.residual}, {"has_zero", r.has_zero}});
  }
  j["unrecognized"] = rest;
  return j;
}

Json to_json(const SeriesResult& r, int balance_index) {
  const LaurentSeries& s = r.series;
  Json j;
  j["tool"] = "painleve";
  j["version"] = kToolVersion;
  j["balance"] = balance_index;
  j["direction"] = s.direction() > 0 ? "right" : "left";
  j["variables"] = s.var_names;
  j["base_exponents"] = strings(s.base_exponents);
  j["singularity"] = s.t0_symbol;
  Json coeffs = Json::array();
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
    Json c;
    c["relative_order"] = s.order(n);
    Json vals = Json::array();
    for (const auto& p : s.coeffs[n]) vals.push_back(p.to_string());
    c["values"] = vals;
    coeffs.push_back(c);
  }
  j["coefficients"] = coeffs;
  Json inj = Json::array();
  for (const auto& sym : s.injected) {
    Json e{{"name", sym.name}, {"order", sym.order}, {"variable", s.var_names[sym.column]}, {"pinned", sym.pinned}};
    e["value"] = sym.value ? Json(to_string(*sym.value)) : Json(nullptr);
    inj.push_back(e);
  }
  j["injected"] = inj;
  Json log = Json::array();
  for (const auto& c : r.compatibility) {
    Json obs = Json::array();
    for (const auto& p : c.obstruction) obs.push_back(p.to_string());
    log.push_back({{"order", c.order}, {"consistent", c.consistent}, {"obstruction", obs}});
  }
  j["compatibility"] = log;
  j["halted_at"] = r.halted_at ? Json(*r.halted_at) : Json(nullptr);
  return j;
}

Json error_json(const std::string& kind, const std::string& message, int line, int column) {
  Json e{{"kind", kind}, {"message", message}};
  if (line > 0) {
    e["line"] = line;
    e["column"] = column;
  }
  return Json{{"error", e}};
}

std::string render_series(const SeriesResult& r) {
  const LaurentSeries& s = r.series;
  std::ostringstream os;
  os << to_string(s.kind) << " series about " << s.t0_symbol << ", tau = t - " << s.t0_symbol << "\n";
  for (std::size_t i = 0; i < s.var_names.size(); ++i) {
    os << s.var_names[i] << ":\n";
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
      const Rational power = s.base_exponents[i] + Rational(s.order(n));
      os << "  tau^" << to_string(power) << ": " << s.coeffs[n][i] << "\n";
    }
  }
  if (!s.injected.empty()) {
    os << "injected symbols:\n";
    for (const auto& sym : s.injected) {
      os << "  " << sym.name << "  order " << sym.order << "  on " << s.var_names[sym.column];
      if (sym.pinned) os << "  pinned to 0";
      else if (sym.value) os << "  = " << to_string(*sym.value);
      os << "\n";
    }
  }
  for (const auto& c : r.compatibility) {
    os << "compatibility at order " << c.order << ": " << (c.consistent ? "satisfied" : "violated");
    for (const auto& p : c.obstruction)
      if (!p.is_zero()) os << "\n  obstruction " << p;
    os << "\n";
  }
  if (r.halted_at) os << "recursion halted at order " << *r.halted_at << "\n";
  return os.str();
}

ClosedFormParams<Complex> closed_form_params_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("parameters must be a JSON object");
  ClosedFormParams<Complex> p;
  const auto& names = ClosedFormParams<Complex>::names();
  for (const auto& [key, value] : j.items()) {
    auto it = std::find(names.begin(), names.end(), key);
    if (it == names.end()) throw std::invalid_argument("unknown parameter '" + key + "'");
    p.v[static_cast<std::size_t>(it - names.begin())] = json_number(value);
  }
  return p;
}

}  // namespace painleve
