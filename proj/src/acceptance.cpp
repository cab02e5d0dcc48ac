#include "painleve/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "painleve/fixtures.hpp"
#include "painleve/table.hpp"
#include "painleve/verify.hpp"

namespace painleve {

namespace {

using Rng = std::mt19937_64;

const char* const kTitles[] = {
    "",
    "table reproduction (exact balances and resonances)",
    "27-root numeric enumeration",
    "generic -1 resonance and multiplicities",
    "eigenvector fixtures",
    "right series fixture (triplet 1)",
    "left series fixture (triplet 3)",
    "closed-form certification",
    "bridge: poles versus balances and series",
    "symmetry group actions",
    "property suites",
};

struct Failures {
  std::vector<std::string> items;
  void add(std::string s) { items.push_back(std::move(s)); }
  bool empty() const { return items.empty(); }
  std::string summary(std::size_t limit = 4) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size() && i < limit; ++i) os << (i ? "; " : "") << items[i];
    if (items.size() > limit) os << "; ... (" << items.size() << " failures)";
    return os.str();
  }
};

Rational rand_rational(Rng& rng, int num = 9, int den = 5) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  return make_rational(n(rng), d(rng));
}

FieldElem rand_field(Rng& rng) { return FieldElem(rand_rational(rng), rand_rational(rng)); }

Complex rand_complex(Rng& rng, double r = 1.0) {
  std::uniform_real_distribution<double> u(-r, r);
  return {u(rng), u(rng)};
}

std::string row_name(std::size_t i, const TableRow& r) {
  std::ostringstream os;
  os << "row " << i + 1;
  if (r.triplet) os << " (triplet " << r.triplet << ", member " << r.member << ")";
  else os << " (" << to_string(r.balance) << ")";
  return os.str();
}

std::vector<TableRow> fixture_rows(const AcceptanceOptions& opt) {
  std::vector<TableRow> rows = table1_rows();
  if (opt.corrupt_row) {
    const int k = *opt.corrupt_row;
    if (k < 1 || k > static_cast<int>(rows.size())) throw std::invalid_argument("corrupt row out of range");
    rows[k - 1].balance.coeffs[1] += FieldElem(1);
  }
  return rows;
}

const TableRow& find_row(const std::vector<TableRow>& rows, int triplet, int member) {
  for (const auto& r : rows)
    if (r.triplet == triplet && r.member == member) return r;
  throw std::logic_error("fixture row missing");
}

BalanceEquations reference_equations() {
  const ODESystem sys = paper_system();
  return leading_order_equations(sys, dominant_exponents(sys));
}

const ResonanceRoot* root_at(const ResonanceReport& r, const FieldElem& s) {
  for (const auto& root : r.roots)
    if (root.exact() && std::get<FieldElem>(root.value) == s) return &root;
  return nullptr;
}

// ---------------------------------------------------------------------------

void table_reproduction(const std::vector<TableRow>& rows, std::uint64_t seed, Failures& f) {
  const ODESystem sys = paper_system();
  const BalanceEquations eqs = reference_equations();
  int nonzero = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TableRow& row = rows[i];
    const auto res = verify_balance(eqs, row.balance);
    if (!std::all_of(res.begin(), res.end(), [](const FieldElem& e) { return is_zero(e); })) {
      f.add(row_name(i, row) + ": leading-order residual is not zero");
      continue;
    }
    if (row.balance.has_zero != (row.triplet == 0)) f.add(row_name(i, row) + ": zero-coefficient flag disagrees");
    if (row.balance.has_zero) continue;
    ++nonzero;
    const std::string got = resonance_pattern(resonance_report(sys, row.balance));
    if (got != row.resonances) f.add(row_name(i, row) + ": resonances " + got + ", table has " + row.resonances);
  }
  if (nonzero != 24) f.add(std::to_string(nonzero) + " nonzero balances verified, expected 24");

  std::vector<Balance> shuffled;
  for (const auto& r : rows) shuffled.push_back(r.balance);
  Rng rng(seed);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const BalanceTable table = build_table(sys, shuffled);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TableEntry& e = table.rows[i];
    if (e.balance != rows[i].balance || e.group != rows[i].triplet || e.member != rows[i].member)
      f.add(row_name(i, rows[i]) + ": ordering rule places " + to_string(e.balance) + " here");
  }
}

void enumeration(const std::vector<TableRow>& rows, std::uint64_t seed, Failures& f) {
  const BalanceEquations eqs = reference_equations();
  for (std::uint64_t k = 0; k < 5; ++k) {
    NewtonConfig cfg;
    cfg.seed = seed + k;
    const NumericEnumeration en = enumerate_balances_numeric(eqs, cfg);
    const std::string tag = "seed " + std::to_string(cfg.seed) + ": ";
    if (en.roots.size() != 27) f.add(tag + std::to_string(en.roots.size()) + " clusters");
    std::vector<int> hits(rows.size(), 0);
    for (const auto& r : en.roots) {
      std::size_t best = 0;
      double dist = INFINITY;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        double d = 0;
        for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(r.coeffs[j] - rows[i].balance.coeffs[j].to_complex()));
        if (d < dist) {
          dist = d;
          best = i;
        }
      }
      if (dist > 1e-10) f.add(tag + "root farther than 1e-10 from every table row (" + std::to_string(dist) + ")");
      else ++hits[best];
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (hits[i] != 1) f.add(tag + row_name(i, rows[i]) + " matched " + std::to_string(hits[i]) + " times");
  }
}

void generic_resonance(const std::vector<TableRow>& rows, Failures& f) {
  const ODESystem sys = paper_system();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].balance.has_zero) continue;
    const ResonanceReport rep = resonance_report(sys, rows[i].balance);
    if (rep.poly.degree() != 6) f.add(row_name(i, rows[i]) + ": determinant degree " + std::to_string(rep.poly.degree()));
    if (!root_at(rep, FieldElem(-1))) f.add(row_name(i, rows[i]) + ": -1 is not a resonance");
    int total = 0;
    for (const auto& root : rep.roots) {
      total += root.alg_mult;
      if (!root.exact()) f.add(row_name(i, rows[i]) + ": inexact resonance");
      else if (root.geo_mult != root.alg_mult)
        f.add(row_name(i, rows[i]) + ": geometric multiplicity differs at s = " + to_string(std::get<FieldElem>(root.value)));
    }
    if (total != 6) f.add(row_name(i, rows[i]) + ": multiplicities sum to " + std::to_string(total));
  }
}

void eigenvectors(const std::vector<TableRow>& rows, Failures& f) {
  const ODESystem sys = paper_system();
  auto check = [&](const TableRow& row, const std::vector<EigenFixture>& fx, const std::string& label) {
    const ResonanceReport rep = resonance_report(sys, row.balance);
    for (const auto& e : fx) {
      const ResonanceRoot* root = root_at(rep, e.s);
      if (!root) f.add(label + ": no resonance at s = " + to_string(e.s));
      else if (!same_span(root->null_basis, e.basis, 3)) f.add(label + ": null space differs at s = " + to_string(e.s));
    }
    return rep;
  };
  const ResonanceReport r31 = check(find_row(rows, 3, 1), eigenvectors_triplet3_member1(), "triplet 3 member 1");
  check(find_row(rows, 3, 2), eigenvectors_triplet3_member2(), "triplet 3 member 2");
  // Third member: the second member's vectors with i -> -i.
  std::vector<EigenFixture> third = eigenvectors_triplet3_member2();
  for (auto& e : third)
    for (auto& v : e.basis) v = conj(v);
  check(find_row(rows, 3, 3), third, "triplet 3 member 3");

  const ResonanceReport r81 = resonance_report(sys, find_row(rows, 8, 1).balance);
  if (r81.roots.size() != r31.roots.size()) {
    f.add("triplet 8 has a different number of distinct resonances");
  } else {
    for (std::size_t k = 0; k < r31.roots.size(); ++k)
      if (!same_span(r31.roots[k].null_basis, r81.roots[k].null_basis, 3))
        f.add("triplet 8 member 1: null space " + std::to_string(k + 1) + " differs from triplet 3");
  }
  const ResonanceRoot* triple = root_at(r81, FieldElem(-1));
  if (!triple || triple->alg_mult != 3 || !same_span(triple->null_basis, triple_minus_one_basis(), 3))
    f.add("triplet 8 member 1: triple -1 null space is not the full 3-space");
}

void compare_display(const SeriesResult& res, const SeriesDisplay& d, Failures& f) {
  const LaurentSeries mapped = substitute(res.series, d.symbol_map);
  const char* names[] = {"x", "y", "z"};
  for (std::size_t n = 0; n < d.coeffs.size(); ++n) {
    const int power = d.ascending ? -1 + static_cast<int>(n) : -1 - static_cast<int>(n);
    for (std::size_t i = 0; i < 3; ++i) {
      if (n >= mapped.coeffs.size()) {
        f.add("series too short");
        return;
      }
      if (mapped.coeffs[n][i] != d.coeffs[n][i])
        f.add(std::string(names[i]) + " at tau^" + std::to_string(power) + ": computed " + mapped.coeffs[n][i].to_string() +
              ", printed " + d.coeffs[n][i].to_string());
    }
  }
}

void right_series(const std::vector<TableRow>& rows, Failures& f) {
  const ODESystem sys = paper_system();
  const SeriesDisplay d = right_series_display();
  SeriesOptions opt;
  opt.max_order = 8;
  const SeriesResult res = build_right_series(sys, resonance_report(sys, find_row(rows, 1, 1).balance), opt);
  compare_display(res, d, f);
  if (res.halted_at) f.add("recursion halted at order " + std::to_string(*res.halted_at));
  std::set<int> seen;
  for (const auto& c : res.compatibility) {
    seen.insert(c.order);
    const bool zero = std::all_of(c.obstruction.begin(), c.obstruction.end(), [](const ParamPoly& p) { return p.is_zero(); });
    if (!c.consistent || !zero) f.add("compatibility fails at order " + std::to_string(c.order));
  }
  if (!seen.count(1) || !seen.count(2)) f.add("compatibility not checked at both +1 and +2");
  if (res.series.max_index() != 8) f.add("series does not reach order 8");
}

void left_series(const std::vector<TableRow>& rows, Failures& f) {
  const ODESystem sys = paper_system();
  const SeriesDisplay d = left_series_display();
  SeriesOptions opt;
  opt.max_order = static_cast<int>(d.coeffs.size()) - 1;
  const SeriesResult res = build_left_series(sys, resonance_report(sys, find_row(rows, 3, 1).balance), opt);
  compare_display(res, d, f);
  if (res.series.injected.size() != 2) f.add(std::to_string(res.series.injected.size()) + " injected symbols, expected 2");
  if (res.halted_at) f.add("recursion halted at order " + std::to_string(*res.halted_at));
}

double pole_distance(const PoleSet& ps, Complex t) {
  double d = INFINITY;
  for (const auto& p : ps.poles) d = std::min(d, std::abs(p.t - t));
  return d;
}

void closed_form_check(std::uint64_t seed, Failures& f, std::string& note) {
  const ODESystem sys = paper_system();
  const std::vector<std::string> symbols = state_symbols(sys);
  Rng rng(seed);

  int exact_samples = 0;
  while (exact_samples < 1000) {
    ClosedFormParams<FieldElem> p;
    for (auto& c : p.v) c = rand_field(rng);
    const FieldElem t = rand_field(rng);
    ClosedFormValue<FieldElem> v;
    try {
      v = ClosedForm<FieldElem>(p)(t);
    } catch (const PoleError&) {
      continue;
    }
    std::map<std::string, FieldElem> at;
    for (std::size_t i = 0; i < 3; ++i) {
      at[symbols[2 * i]] = v.value[i];
      at[symbols[2 * i + 1]] = v.d1[i];
    }
    for (std::size_t i = 0; i < 3; ++i)
      if (sys.rhs[i].evaluate(at) != v.d2[i]) {
        f.add("exact residual nonzero in equation " + std::to_string(i + 1));
        return;
      }
    ++exact_samples;
  }

  double worst = 0;
  int not_six = 0;
  for (int k = 0; k < 1000; ++k) {
    ClosedFormParams<Complex> p;
    for (auto& c : p.v) c = rand_complex(rng);
    const PoleSet ps = pole_set(p);
    if (ps.count() != 6 || ps.poles.size() != 6) ++not_six;
    Complex t;
    do t = rand_complex(rng, 2.0);
    while (pole_distance(ps, t) < 0.25);
    worst = std::max(worst, residual(sys, closed_form_provider(p), {t}));
  }
  if (worst >= 1e-9) f.add("numeric residual " + std::to_string(worst));
  if (not_six) f.add(std::to_string(not_six) + " parameter sets without exactly 6 simple poles");
  std::ostringstream os;
  os << "exact zero on " << exact_samples << " rational samples, max numeric residual " << std::scientific
     << std::setprecision(1) << worst;
  note = os.str();
}

void bridge(const std::vector<TableRow>& rows, std::uint64_t seed, Failures& f, std::string& note) {
  const ODESystem sys = paper_system();
  constexpr int kOrders = 8;
  std::vector<SeriesResult> series;
  for (int m = 1; m <= 3; ++m) {
    SeriesOptions opt;
    opt.max_order = kOrders;
    series.push_back(build_right_series(sys, resonance_report(sys, find_row(rows, 1, m).balance), opt));
  }
  Rng rng(seed + 1000);
  int poles_checked = 0;
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    ClosedFormParams<Complex> p;
    for (auto& c : p.v) c = rand_complex(rng);
    for (const Pole& pole : pole_set(p).poles) {
      if (pole.multiplicity != 1) continue;
      std::vector<std::array<Complex, 3>> le;
      try {
        le = local_expansion(p, pole.t, kOrders - 1);
      } catch (const NonSimplePole&) {
        continue;
      }
      ++poles_checked;
      std::size_t best = 0;
      double dist = INFINITY;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].balance.has_zero) continue;
        double d = 0;
        for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(le[0][j] - rows[i].balance.coeffs[j].to_complex()));
        if (d < dist) {
          dist = d;
          best = i;
        }
      }
      if (dist > 1e-8) {
        f.add("leading coefficients at a pole match no table row (" + std::to_string(dist) + ")");
        continue;
      }
      if (rows[best].triplet != 1) {
        f.add("pole leading coefficients match " + row_name(best, rows[best]) + ", which has no right series");
        continue;
      }
      const LaurentSeries& s = series[static_cast<std::size_t>(rows[best].member - 1)].series;
      std::map<std::string, Complex> values;
      for (const auto& sym : s.injected) values[sym.name] = le[static_cast<std::size_t>(sym.order)][static_cast<std::size_t>(sym.column)];
      for (int n = 0; n <= kOrders; ++n)
        for (std::size_t i = 0; i < 3; ++i) {
          const Complex a = s.coeffs[static_cast<std::size_t>(n)][i].evaluate(values);
          const Complex b = le[static_cast<std::size_t>(n)][i];
          const double err = std::abs(a - b) / std::max(1.0, std::abs(b));
          worst = std::max(worst, err);
          if (err > 1e-8) f.add("series and local expansion differ at order " + std::to_string(n) + " (" + std::to_string(err) + ")");
        }
    }
  }
  if (poles_checked < 20) f.add("only " + std::to_string(poles_checked) + " simple poles found");
  std::ostringstream os;
  os << poles_checked << " simple poles, max relative coefficient error " << std::scientific << std::setprecision(1) << worst;
  note = os.str();
}

void symmetries(std::uint64_t seed, Failures& f, std::string& note) {
  const ODESystem sys = paper_system();
  const double eps = 1e-2;
  Rng rng(seed + 2000);
  std::vector<double> worst(3, 0.0);
  const auto gens = sl2_symmetries();
  for (int k = 0; k < 12; ++k) {
    ClosedFormParams<Complex> p;
    for (auto& c : p.v) c = rand_complex(rng);
    const PoleSet ps = pole_set(p);
    const TrajectoryProvider sol = closed_form_provider(p);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<Complex> samples;
      while (samples.size() < 20) {
        const Complex s = rand_complex(rng, 2.0);
        Complex pre;
        switch (gens[g].kind) {
          case SymmetryKind::Translation: pre = s - eps; break;
          case SymmetryKind::Scaling: pre = std::exp(eps) * s; break;
          case SymmetryKind::Projective: pre = s / (1.0 - eps * s); break;
        }
        if (pole_distance(ps, pre) >= 0.25) samples.push_back(s);
      }
      worst[g] = std::max(worst[g], symmetry_check(sys, gens[g], sol, eps, samples));
    }
  }
  std::ostringstream os;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!(worst[g] < 1e-7)) f.add(gens[g].name + " residual " + std::to_string(worst[g]));
    os << (g ? ", " : "") << gens[g].name << " " << std::scientific << std::setprecision(1) << worst[g];
  }
  note = "12 solutions, eps = 1e-2: " + os.str();
}

ParamPoly random_poly(Rng& rng, const std::vector<std::string>& symbols, int terms) {
  std::uniform_int_distribution<int> e(0, 2), cnt(0, terms);
  std::vector<std::pair<ParamPoly::Exponents, FieldElem>> t;
  const int n = cnt(rng);
  for (int k = 0; k < n; ++k) {
    ParamPoly::Exponents ex(symbols.size());
    for (auto& x : ex) x = e(rng) == 2 ? e(rng) : 0;
    t.emplace_back(ex, rand_field(rng));
  }
  return ParamPoly::from_terms(symbols, t);
}

void properties(const std::vector<TableRow>& rows, std::uint64_t seed, Failures& f) {
  Rng rng(seed + 3000);

  // Field axioms and the embedding into C.
  for (int k = 0; k < 10000; ++k) {
    const FieldElem a = rand_field(rng), b = rand_field(rng), c = rand_field(rng);
    if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) f.add("associativity");
    if (a + b != b + a || a * b != b * a) f.add("commutativity");
    if (a * (b + c) != a * b + a * c) f.add("distributivity");
    if (a + FieldElem(0) != a || a * FieldElem(1) != a || a - a != FieldElem(0)) f.add("identities");
    if (!is_zero(a) && a * a.inverse() != FieldElem(1)) f.add("inverse");
    if ((a * b).conj() != a.conj() * b.conj() || a * a.conj() != FieldElem(a.norm())) f.add("conjugation");
    if (std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) > 1e-10 * (1 + std::abs((a * b).to_complex())))
      f.add("embedding");
    if (!f.empty()) return;
  }

  // Rank-nullity on matrices of prescribed rank.
  std::uniform_int_distribution<int> dim(1, 5);
  for (int k = 0; k < 300; ++k) {
    const int n = dim(rng), r = std::uniform_int_distribution<int>(0, n)(rng);
    Matrix<FieldElem> a = zero_matrix<FieldElem>(n, std::max(r, 1)), b = zero_matrix<FieldElem>(std::max(r, 1), n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) a(i, j) = rand_field(rng);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = rand_field(rng);
    const Matrix<FieldElem> m = a * b;
    const auto ns = null_space(m);
    if (rank(m) + static_cast<Eigen::Index>(ns.size()) != n) f.add("rank-nullity");
    for (const auto& v : ns) {
      const Vector<FieldElem> mv = m * v;
      for (Eigen::Index i = 0; i < n; ++i)
        if (!is_zero(mv(i))) f.add("null vector not annihilated");
    }
    if (!f.empty()) return;
  }

  // Parse/serialize round trip on random systems and polynomials.
  const std::vector<std::string> names{"x", "y", "z"};
  for (int k = 0; k < 300; ++k) {
    ODESystem sys;
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    sys.var_names.assign(names.begin(), names.begin() + n);
    const auto symbols = state_symbols(sys);
    for (int i = 0; i < n; ++i) sys.rhs.push_back(random_poly(rng, symbols, 6).pruned());
    try {
      if (parse_system(serialize_system(sys)) != sys) f.add("system round trip");
      const ParamPoly p = random_poly(rng, {"a0", "b1", "c2"}, 8);
      if (parse_polynomial(p.to_string()) != p) f.add("polynomial round trip: " + p.to_string());
    } catch (const ParseError& e) {
      f.add(std::string("round trip raised: ") + e.what());
    }
    if (!f.empty()) return;
  }
  if (parse_system(serialize_system(paper_system())) != paper_system()) f.add("fixture round trip");

  // Balance set: closed under conjugation; triplet sum rule.
  const ODESystem sys = paper_system();
  NewtonConfig cfg;
  cfg.seed = seed + 4000;
  const NumericEnumeration en = enumerate_balances_numeric(reference_equations(), cfg);
  std::vector<Balance> exact;
  for (const auto& r : en.roots) {
    if (r.exact) exact.push_back(*r.exact);
    else f.add("unrecognised numeric balance");
  }
  for (const auto& b : exact)
    if (std::find(exact.begin(), exact.end(), b.conj()) == exact.end()) f.add("conjugate of " + to_string(b) + " missing");
  const BalanceTable table = build_table(sys, exact);
  if (table.groups != 8) f.add(std::to_string(table.groups) + " triplets detected");
  for (std::size_t i = 0; i + 2 < table.rows.size(); ++i) {
    const auto& r = table.rows;
    if (r[i].member != 1) continue;
    for (std::size_t j = 1; j < 3; ++j)
      if (r[i + 1].balance.coeffs[j] + r[i + 2].balance.coeffs[j] != -r[i].balance.coeffs[j])
        f.add("sum rule fails in triplet " + std::to_string(r[i].group));
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].member == 1)
      for (std::size_t j = 1; j < 3; ++j)
        if (rows[i + 1].balance.coeffs[j] + rows[i + 2].balance.coeffs[j] != -rows[i].balance.coeffs[j])
          f.add("sum rule fails for table " + row_name(i, rows[i]));
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = id;
  r.title = (id >= 1 && id <= 10) ? kTitles[id] : "unknown";
  const auto start = std::chrono::steady_clock::now();
  Failures f;
  std::string note;
  try {
    const std::vector<TableRow> rows = fixture_rows(opt);
    switch (id) {
      case 1: table_reproduction(rows, opt.seed, f); note = "27 rows, 24 with resonances"; break;
      case 2: enumeration(rows, opt.seed, f); note = "5 seeds from " + std::to_string(opt.seed); break;
      case 3: generic_resonance(rows, f); note = "24 balances"; break;
      case 4: eigenvectors(rows, f); note = "triplets 3 and 8"; break;
      case 5: right_series(rows, f); note = "orders -1..2 compared, compatibility through order 8"; break;
      case 6: left_series(rows, f); note = "orders -1..-4 compared"; break;
      case 7: closed_form_check(opt.seed, f, note); break;
      case 8: bridge(rows, opt.seed, f, note); break;
      case 9: symmetries(opt.seed, f, note); break;
      case 10: properties(rows, opt.seed, f); note = "seeded randomized suites"; break;
      default: f.add("no such criterion");
    }
  } catch (const std::exception& e) {
    f.add(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = f.empty();
  r.detail = r.pass ? note : f.summary();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id)
    if (opt.only.empty() || opt.only.count(id)) out.push_back(run_criterion(id, opt));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << "C" << r.id << (r.id < 10 ? "   " : "  ") << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  (" << std::fixed
     << std::setprecision(2) << r.seconds << " s)  " << r.detail;
  return os.str();
}

}  // namespace painleve
