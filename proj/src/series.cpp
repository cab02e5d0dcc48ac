#include "painleve/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "painleve/linalg.hpp"

namespace painleve {

const char* to_string(SeriesKind k) { return k == SeriesKind::Ascending ? "ascending" : "descending"; }

std::vector<std::string> LaurentSeries::free_symbols() const {
  std::vector<std::string> out;
  for (const auto& s : injected)
    if (!s.pinned && !s.value) out.push_back(s.name);
  return out;
}

std::string injected_symbol_name(int order, int index) {
  std::ostringstream os;
  if (order < 0) os << "rm" << -order;
  else os << "r" << order;
  os << "_" << index;
  return os.str();
}

namespace {

// Every monomial of F_i is tau^{offset} times a power series in u = tau^d
// built from the 2n base series (x_j and x_j'). Products are evaluated
// coefficient by coefficient through shared prefix chains.
class ProductEngine {
public:
  struct Term {
    FieldElem coeff;
    std::vector<int> factors;  // sorted indices: 2j for x_j, 2j+1 for x_j'
    Rational offset;
  };

  ProductEngine(const ODESystem& sys, std::vector<Rational> p, int d) : p_(std::move(p)), d_(d) {
    const std::size_t n = sys.size();
    base_.resize(2 * n);
    terms_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const ParamPoly& f = sys.rhs[i];
      const auto& vars = f.variables();
      std::vector<int> index(vars.size(), -1);
      for (std::size_t k = 0; k < vars.size(); ++k) {
        for (std::size_t j = 0; j < n; ++j) {
          if (vars[k] == sys.var_names[j]) index[k] = static_cast<int>(2 * j);
          if (vars[k] == prime(sys.var_names[j])) index[k] = static_cast<int>(2 * j + 1);
        }
        if (index[k] < 0) throw std::invalid_argument("symbol '" + vars[k] + "' is not a state variable");
      }
      for (const auto& [e, c] : f.terms()) {
        Term t{c, {}, Rational(0)};
        for (std::size_t k = 0; k < e.size(); ++k) {
          for (int r = 0; r < e[k]; ++r) t.factors.push_back(index[k]);
          const std::size_t j = index[k] / 2;
          t.offset += Rational(e[k]) * (p_[j] - (index[k] % 2 ? 1 : 0));
        }
        std::sort(t.factors.begin(), t.factors.end());
        terms_[i].push_back(std::move(t));
      }
    }
  }

  std::size_t size() const { return size_; }
  const std::vector<Term>& terms(std::size_t i) const { return terms_[i]; }

  void push(const std::vector<ParamPoly>& c) {
    const Rational k(d_ * static_cast<long>(size_));
    for (std::size_t j = 0; j < c.size(); ++j) {
      base_[2 * j].push_back(c[j]);
      base_[2 * j + 1].push_back(c[j] * FieldElem(p_[j] + k));
    }
    ++size_;
  }

  /// [u^m] of the product of the given factors. Coefficients beyond the
  /// pushed ones count as zero, so m >= size() gives the truncated value.
  ParamPoly coefficient(const std::vector<int>& factors, std::size_t m) {
    if (factors.empty()) return m == 0 ? ParamPoly(FieldElem(1)) : ParamPoly();
    if (factors.size() == 1) return m < size_ ? base_[factors[0]][m] : ParamPoly();
    std::vector<ParamPoly>& memo = memo_[factors];
    if (m < memo.size()) return memo[m];
    const bool cacheable = m < size_ || frozen_;
    while (cacheable && memo.size() < m) coefficient(factors, memo.size());

    const std::vector<int> prefix(factors.begin(), factors.end() - 1);
    const int last = factors.back();
    ParamPoly acc;
    const std::size_t lo = m + 1 > size_ ? m + 1 - size_ : 0;
    for (std::size_t i = lo; i <= m; ++i) {
      const ParamPoly& b = base_[last][m - i];
      if (b.is_zero()) continue;
      const ParamPoly a = coefficient(prefix, i);
      if (a.is_zero()) continue;
      acc += a * b;
    }
    // Final once every factor coefficient it depends on is known.
    if (cacheable && memo.size() == m) memo.push_back(acc);
    return acc;
  }

  /// [u^m] of F_i.
  ParamPoly rhs(std::size_t i, std::size_t m) {
    ParamPoly acc;
    for (const Term& t : terms_[i]) {
      ParamPoly c = coefficient(t.factors, m);
      if (!c.is_zero()) acc += c * t.coeff;
    }
    return acc;
  }

  void freeze() { frozen_ = true; }

private:
  std::vector<Rational> p_;
  int d_;
  std::size_t size_ = 0;
  bool frozen_ = false;
  std::vector<std::vector<ParamPoly>> base_;
  std::vector<std::vector<Term>> terms_;
  std::map<std::vector<int>, std::vector<ParamPoly>> memo_;
};

SeriesResult build_series(const ODESystem& sys, const ResonanceReport& report, const SeriesOptions& opt,
                          SeriesKind kind) {
  if (opt.max_order < 0) throw std::invalid_argument("max_order must be non-negative");
  const Balance& bal = report.balance;
  const std::size_t n = sys.size();

  SeriesResult out;
  LaurentSeries& s = out.series;
  s.kind = kind;
  s.var_names = sys.var_names;
  s.base_exponents = bal.exponents;
  const int d = s.direction();

  ProductEngine engine(sys, bal.exponents, d);
  std::vector<ParamPoly> lead;
  for (const auto& c : bal.coeffs) lead.emplace_back(c);
  s.coeffs.push_back(lead);
  engine.push(lead);

  for (int idx = 1; idx <= opt.max_order; ++idx) {
    const int k = d * idx;
    std::vector<ParamPoly> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = engine.rhs(i, idx);

    const Matrix<FieldElem> mk = evaluate(report.matrix, FieldElem(k));
    const RowEchelon<FieldElem> e = rref(mk);
    const Eigen::Index rank = e.rank();

    std::vector<ParamPoly> tg(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (!e.transform(r, j).is_zero()) tg[r] += g[j] * e.transform(r, j);

    if (rank < static_cast<Eigen::Index>(n)) {
      CompatibilityResult cr;
      cr.order = k;
      for (std::size_t r = rank; r < n; ++r) {
        cr.obstruction.push_back(tg[r]);
        if (!tg[r].is_zero()) cr.consistent = false;
      }
      out.compatibility.push_back(cr);
      if (!cr.consistent) {
        out.halted_at = k;
        break;
      }
    }

    std::vector<ParamPoly> c(n);
    for (std::size_t f = 0; f < e.free_columns.size(); ++f) {
      const int col = e.free_columns[f];
      InjectedSymbol sym;
      sym.name = injected_symbol_name(k, static_cast<int>(f));
      sym.order = k;
      sym.column = col;
      if (opt.pinned.count(sym.name)) {
        sym.pinned = true;
        c[col] = ParamPoly();
      } else if (auto it = opt.injected_values.find(sym.name); it != opt.injected_values.end()) {
        sym.value = it->second;
        c[col] = ParamPoly(it->second);
      } else {
        c[col] = ParamPoly::symbol(sym.name);
      }
      s.injected.push_back(std::move(sym));
    }
    for (std::size_t r = 0; r < static_cast<std::size_t>(rank); ++r) {
      ParamPoly v = tg[r];
      for (int col : e.free_columns)
        if (!e.reduced(r, col).is_zero()) v -= c[col] * e.reduced(r, col);
      c[e.pivots[r]] = v;
    }
    s.coeffs.push_back(c);
    engine.push(c);
  }
  return out;
}

bool has_negative_nongeneric(const ResonanceReport& report) {
  return report.branch_class != BranchClass::RightSeries;
}

}  // namespace

SeriesResult build_right_series(const ODESystem& sys, const ResonanceReport& report, const SeriesOptions& opt) {
  if (report.branch_class != BranchClass::RightSeries && !opt.allow_branch_mismatch)
    throw BranchMismatch("balance " + to_string(report.balance) + " is a " + to_string(report.branch_class) +
                         " branch, not a right series");
  return build_series(sys, report, opt, SeriesKind::Ascending);
}

SeriesResult build_left_series(const ODESystem& sys, const ResonanceReport& report, const SeriesOptions& opt) {
  if (!has_negative_nongeneric(report) && !opt.allow_branch_mismatch)
    throw BranchMismatch("balance " + to_string(report.balance) + " has no negative non-generic resonance");
  return build_series(sys, report, opt, SeriesKind::Descending);
}

std::optional<ResidualOrder> series_residual_order(const ODESystem& sys, const LaurentSeries& series) {
  const std::size_t n = sys.size();
  if (series.var_names != sys.var_names) throw std::invalid_argument("series and system variables differ");
  const int d = series.direction();
  ProductEngine engine(sys, series.base_exponents, d);
  for (const auto& c : series.coeffs) engine.push(c);
  engine.freeze();
  const std::size_t count = engine.size();

  std::optional<ResidualOrder> best;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational lead = series.base_exponents[i] - 2;
    // Candidate tau powers, each with the u-index contributing to it.
    struct Source {
      int term;  // -1 for the second derivative
      std::size_t m;
    };
    std::map<Rational, std::vector<Source>> powers;
    for (std::size_t m = 0; m < count; ++m) powers[lead + Rational(d * static_cast<long>(m))].push_back({-1, m});
    const auto& terms = engine.terms(i);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::size_t top = terms[t].factors.empty() ? 0 : terms[t].factors.size() * (count - 1);
      for (std::size_t m = 0; m <= top; ++m)
        powers[terms[t].offset + Rational(d * static_cast<long>(m))].push_back({static_cast<int>(t), m});
    }
    auto visit = [&](const Rational& power, const std::vector<Source>& sources) -> bool {
      ParamPoly acc;
      for (const Source& src : sources) {
        if (src.term < 0) {
          const Rational q = series.base_exponents[i] + Rational(d * static_cast<long>(src.m));
          acc += series.coeffs[src.m][i] * FieldElem(q * (q - 1));
        } else {
          const auto& t = terms[src.term];
          ParamPoly c = engine.coefficient(t.factors, src.m);
          if (!c.is_zero()) acc -= c * t.coeff;
        }
      }
      if (acc.is_zero()) return false;
      ResidualOrder r{static_cast<int>(i), power - lead, power};
      if (!best || d * cmp(r.relative_order, best->relative_order) < 0) best = r;
      return true;
    };
    if (d > 0) {
      for (auto it = powers.begin(); it != powers.end(); ++it)
        if (visit(it->first, it->second)) break;
    } else {
      for (auto it = powers.rbegin(); it != powers.rend(); ++it)
        if (visit(it->first, it->second)) break;
    }
  }
  return best;
}

namespace {

Complex tau_power(Complex tau, const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
    long e = q.get_num().get_si();
    Complex r(1), b = e < 0 ? 1.0 / tau : tau;
    for (long k = 0; k < std::abs(e); ++k) r *= b;
    return r;
  }
  return std::pow(tau, to_double(q));
}

}  // namespace

std::vector<Complex> evaluate_series(const LaurentSeries& series, const std::map<std::string, Complex>& params,
                                     Complex t0, Complex t) {
  const Complex tau = t - t0;
  const std::size_t n = series.var_names.size();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Horner in u = tau^d, then the common factor tau^{p_i}.
    const Complex u = series.direction() > 0 ? tau : 1.0 / tau;
    Complex acc{};
    for (int m = series.max_index(); m >= 0; --m) acc = acc * u + series.coeffs[m][i].evaluate(params);
    out[i] = acc * tau_power(tau, series.base_exponents[i]);
  }
  return out;
}

LaurentSeries substitute(const LaurentSeries& series, const std::map<std::string, ParamPoly>& values) {
  LaurentSeries out = series;
  for (auto& row : out.coeffs)
    for (auto& c : row) c = c.substitute(values).pruned();
  return out;
}

}  // namespace painleve
