#include "painleve/table.hpp"

#include <algorithm>
#include <sstream>

namespace painleve {

namespace {

FieldElem root_power(int k) {
  const FieldElem e = FieldElem::cube_root_of_unity();
  return pow(e, static_cast<unsigned>(((k % 3) + 3) % 3));
}

// Exponent of the primitive cube root picked up by each term under the
// substitution; every term of F_j has to pick up k_j.
bool invariant_under(const ODESystem& sys, const std::vector<int>& k) {
  for (std::size_t j = 0; j < sys.size(); ++j) {
    const ParamPoly& f = sys.rhs[j];
    std::vector<int> weight;
    for (const auto& v : f.variables()) {
      const std::string base = v.substr(0, v.find('\''));
      auto it = std::find(sys.var_names.begin(), sys.var_names.end(), base);
      weight.push_back(it == sys.var_names.end() ? 0 : k[static_cast<std::size_t>(it - sys.var_names.begin())]);
    }
    for (const auto& [exps, c] : f.terms()) {
      int w = 0;
      for (std::size_t i = 0; i < exps.size(); ++i) w += exps[i] * weight[i];
      if (((w - k[j]) % 3 + 3) % 3 != 0) return false;
    }
  }
  return true;
}

Balance apply(const Balance& b, const std::vector<int>& k, int times) {
  Balance out = b;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = out.coeffs[i] * root_power(k[i] * times);
  return out;
}

const FieldElem& second(const Balance& b) { return b.coeffs.size() > 1 ? b.coeffs[1] : b.coeffs[0]; }

bool real_ratio(const Balance& b) {
  if (b.coeffs.size() < 3) return true;
  return is_zero((b.coeffs[1] * b.coeffs[2].conj()).om());
}

bool by_im_re(const Balance& x, const Balance& y) {
  const FieldElem &a = second(x), &b = second(y);
  if (a.om() != b.om()) return a.om() < b.om();
  return a.re() < b.re();
}

bool lex_less(const Balance& x, const Balance& y) {
  return std::lexicographical_compare(x.coeffs.begin(), x.coeffs.end(), y.coeffs.begin(), y.coeffs.end(),
                                      [](const FieldElem& a, const FieldElem& b) { return compare(a, b) < 0; });
}

int minus_one_count(const ResonanceReport& r) {
  for (const auto& root : r.roots)
    if (root.exact() && std::get<FieldElem>(root.value) == FieldElem(-1)) return root.alg_mult;
  return 0;
}

struct Block {
  std::vector<TableEntry> rows;
  bool zero_row = false;
  bool grouped = false;
};

}  // namespace

std::optional<std::vector<int>> cyclic_symmetry(const ODESystem& sys) {
  const std::size_t n = sys.size();
  if (n < 2) return std::nullopt;
  std::vector<int> k(n, 0);
  // Odometer over k_1..k_{n-1} in {0,1,2}, skipping the identity.
  while (true) {
    std::size_t i = 1;
    while (i < n && k[i] == 2) k[i++] = 0;
    if (i == n) return std::nullopt;
    ++k[i];
    if (invariant_under(sys, k)) return k;
  }
}

BalanceTable build_table(const ODESystem& sys, const std::vector<Balance>& balances, double tol) {
  BalanceTable table;
  table.symmetry = cyclic_symmetry(sys);
  std::vector<bool> used(balances.size(), false);
  std::vector<Block> blocks;

  auto entry = [&](const Balance& b) {
    TableEntry e;
    e.balance = b;
    if (!b.has_zero) e.report = resonance_report(sys, b, tol);
    return e;
  };

  for (std::size_t i = 0; i < balances.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Balance& b = balances[i];
    Block blk;
    blk.zero_row = b.has_zero;
    std::vector<Balance> members{b};
    if (!b.has_zero && table.symmetry) {
      std::vector<std::size_t> found;
      for (int t = 1; t <= 2; ++t) {
        const Balance img = apply(b, *table.symmetry, t);
        for (std::size_t j = 0; j < balances.size(); ++j)
          if (!used[j] && balances[j] == img) {
            found.push_back(j);
            break;
          }
      }
      if (found.size() == 2 && found[0] != found[1]) {
        for (std::size_t j : found) {
          used[j] = true;
          members.push_back(balances[j]);
        }
        blk.grouped = true;
      }
    }
    if (blk.grouped) {
      auto lead = std::min_element(members.begin(), members.end(), [](const Balance& x, const Balance& y) {
        if (real_ratio(x) != real_ratio(y)) return real_ratio(x);
        return by_im_re(x, y);
      });
      std::iter_swap(members.begin(), lead);
      std::sort(members.begin() + 1, members.end(), by_im_re);
    }
    for (const auto& m : members) blk.rows.push_back(entry(m));
    blocks.push_back(std::move(blk));
  }

  std::stable_sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
    const Balance &a = x.rows.front().balance, &b = y.rows.front().balance;
    if (const int c = compare(a.coeffs[0], b.coeffs[0]); c != 0) return c < 0;
    if (x.zero_row != y.zero_row) return x.zero_row;
    if (x.zero_row) return lex_less(a, b);
    const int mx = minus_one_count(*x.rows.front().report), my = minus_one_count(*y.rows.front().report);
    if (mx != my) return mx < my;
    const FieldElem &sa = second(a), &sb = second(b);
    if (sa.om() != sb.om()) return sa.om() > sb.om();
    return lex_less(a, b);
  });

  for (auto& blk : blocks) {
    const int g = blk.grouped ? ++table.groups : 0;
    int m = 0;
    for (auto& row : blk.rows) {
      row.group = g;
      row.member = blk.grouped ? ++m : 0;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

std::string render_table(const BalanceTable& table, const std::vector<std::string>& var_names) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"row", "triplet"};
  for (const auto& v : var_names) head.push_back("c_" + v);
  head.push_back("resonances");
  cells.push_back(head);
  int idx = 0;
  for (const auto& r : table.rows) {
    std::vector<std::string> line{std::to_string(++idx), r.group ? std::to_string(r.group) + "." + std::to_string(r.member) : "-"};
    for (const auto& c : r.balance.coeffs) line.push_back(to_string(c));
    line.push_back(r.report ? resonance_pattern(*r.report) : "(zero coefficient)");
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : cells)
    for (std::size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], line[j].size());
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      if (j) os << "  ";
      os << cells[i][j];
      if (j + 1 < cells[i].size()) os << std::string(width[j] - cells[i][j].size(), ' ');
    }
    os << "\n";
    if (i == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      os << std::string(total - 2, '-') << "\n";
    }
  }
  return os.str();
}

}  // namespace painleve
