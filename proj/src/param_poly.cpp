#include "painleve/param_poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace painleve {

bool GrlexGreater::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

ParamPoly::ParamPoly(FieldElem constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, std::move(constant));
}

ParamPoly ParamPoly::symbol(const std::string& name) {
  ParamPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, FieldElem(1));
  return p;
}

ParamPoly ParamPoly::from_terms(std::vector<std::string> variables,
                                const std::vector<std::pair<Exponents, FieldElem>>& terms) {
  std::vector<std::string> sorted = variables;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate variable in polynomial");
  std::vector<std::size_t> where(variables.size());
  for (std::size_t i = 0; i < variables.size(); ++i)
    where[i] = std::lower_bound(sorted.begin(), sorted.end(), variables[i]) - sorted.begin();
  ParamPoly p;
  p.vars_ = sorted;
  for (const auto& [exps, c] : terms) {
    if (exps.size() != variables.size()) throw std::invalid_argument("exponent vector length mismatch");
    Exponents e(sorted.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw std::invalid_argument("negative exponent in polynomial");
      e[where[i]] = exps[i];
    }
    FieldElem& slot = p.terms_[e];
    slot += c;
    if (slot.is_zero()) p.terms_.erase(e);
  }
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                                              terms_.begin()->first.end(),
                                                              [](int e) { return e == 0; }));
}

FieldElem ParamPoly::constant_term() const {
  for (const auto& [e, c] : terms_)
    if (std::all_of(e.begin(), e.end(), [](int k) { return k == 0; })) return c;
  return FieldElem(0);
}

int ParamPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
}

int ParamPoly::degree_in(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return 0;
  const std::size_t k = it - vars_.begin();
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

std::vector<std::string> ParamPoly::used_symbols() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    for (const auto& [e, c] : terms_)
      if (e[k] != 0) {
        out.push_back(vars_[k]);
        break;
      }
  return out;
}

std::vector<std::string> ParamPoly::merged(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void ParamPoly::align_to(const std::vector<std::string>& vars) {
  if (vars == vars_) return;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    where[i] = std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin();
  TermMap remapped;
  for (auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    remapped.emplace(std::move(ne), std::move(c));
  }
  terms_ = std::move(remapped);
  vars_ = vars;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  if (o.vars_ != vars_) {
    align_to(merged(vars_, o.vars_));
    ParamPoly other = o;
    other.align_to(vars_);
    return *this += other;
  }
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return ParamPoly();
  if (a.vars_ != b.vars_) {
    const auto vars = ParamPoly::merged(a.vars_, b.vars_);
    ParamPoly x = a, y = b;
    x.align_to(vars);
    y.align_to(vars);
    return x * y;
  }
  ParamPoly out;
  out.vars_ = a.vars_;
  ParamPoly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      FieldElem prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(e, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const FieldElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  const ParamPoly pa = a.pruned(), pb = b.pruned();
  return pa.vars_ == pb.vars_ && pa.terms_ == pb.terms_;
}

ParamPoly ParamPoly::pow(unsigned exponent) const {
  ParamPoly result(FieldElem(1));
  ParamPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

ParamPoly ParamPoly::derivative(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return ParamPoly();
  const std::size_t k = it - vars_.begin();
  ParamPoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents ne = e;
    --ne[k];
    out.terms_.emplace(std::move(ne), c * FieldElem(static_cast<long>(e[k])));
  }
  return out;
}

ParamPoly ParamPoly::conj() const {
  ParamPoly out = *this;
  for (auto& [e, v] : out.terms_) v = v.conj();
  return out;
}

ParamPoly ParamPoly::pruned() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) used[k] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return *this;
  ParamPoly out;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (used[k]) out.vars_.push_back(vars_[k]);
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (used[k]) ne.push_back(e[k]);
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

namespace {

template <class Value, class Map>
Value evaluate_impl(const std::vector<std::string>& vars, const ParamPoly::TermMap& terms, const Map& values) {
  std::vector<const Value*> bound(vars.size(), nullptr);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    auto it = values.find(vars[k]);
    if (it != values.end()) bound[k] = &it->second;
  }
  Value acc(0);
  for (const auto& [e, c] : terms) {
    Value term;
    if constexpr (std::is_same_v<Value, Complex>) term = c.to_complex();
    else term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!bound[k]) throw std::invalid_argument("unbound symbol '" + vars[k] + "' in evaluation");
      for (int j = 0; j < e[k]; ++j) term = term * *bound[k];
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

FieldElem ParamPoly::evaluate(const std::map<std::string, FieldElem>& values) const {
  return evaluate_impl<FieldElem>(vars_, terms_, values);
}

Complex ParamPoly::evaluate(const std::map<std::string, Complex>& values) const {
  return evaluate_impl<Complex>(vars_, terms_, values);
}

ParamPoly ParamPoly::substitute(const std::map<std::string, ParamPoly>& values) const {
  std::vector<ParamPoly> images(vars_.size());
  std::vector<bool> bound(vars_.size(), false);
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = values.find(vars_[k]);
    if (it != values.end()) {
      images[k] = it->second;
      bound[k] = true;
    } else {
      images[k] = symbol(vars_[k]);
    }
  }
  ParamPoly out;
  for (const auto& [e, c] : terms_) {
    ParamPoly term(c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) term *= images[k].pow(static_cast<unsigned>(e[k]));
    out += term;
  }
  return out;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool constant = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    // sign handling: a term whose coefficient is a negative rational is written "- |c|"
    FieldElem coeff = c;
    bool negative = false;
    if (coeff.is_rational() && sgn(coeff.re()) < 0) {
      negative = true;
      coeff = -coeff;
    } else if (sgn(coeff.re()) == 0 && sgn(coeff.om()) < 0) {
      negative = true;
      coeff = -coeff;
    }
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;

    std::string cs = painleve::to_string(coeff);
    const bool compound = !coeff.is_rational() && sgn(coeff.re()) != 0;
    if (constant) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    bool need_star = false;
    if (cs != "1") {
      os << (compound ? "(" + cs + ")" : cs);
      need_star = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << "*";
      os << vars_[k];
      if (e[k] > 1) os << "^" << e[k];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

}  // namespace painleve
