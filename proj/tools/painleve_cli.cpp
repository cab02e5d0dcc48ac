// painleve: singularity analysis of polynomial second-order ODE systems.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "painleve/acceptance.hpp"
#include "painleve/report.hpp"
#include "painleve/verify.hpp"

using namespace painleve;

namespace {

constexpr int kOk = 0, kAnalysisFailure = 1, kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  Complex z;
  if (!(in >> z) || !(in >> std::ws).eof()) throw InputError("cannot read '" + text + "' as a number or (re,im) pair");
  return z;
}

// "1, (0.5,-1), 2" -> values; commas inside parentheses are kept.
std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(parse_complex(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(parse_complex(cur));
  return out;
}

int report_error(bool as_json, const std::string& kind, const std::string& msg, int code, int line = 0, int col = 0) {
  if (as_json) std::cout << error_json(kind, msg, line, col).dump(2) << "\n";
  std::cerr << "error: " << msg << "\n";
  return code;
}

// Runs fn and maps exceptions onto exit codes.
template <class Fn>
int guarded(bool as_json, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return report_error(as_json, to_string(e.kind()), e.what(), kInputError, e.line(), e.column());
  } catch (const InputError& e) {
    return report_error(as_json, "input", e.what(), kInputError);
  } catch (const Json::exception& e) {
    return report_error(as_json, "input", e.what(), kInputError);
  } catch (const std::invalid_argument& e) {
    return report_error(as_json, "input", e.what(), kInputError);
  } catch (const std::exception& e) {
    return report_error(as_json, "analysis", e.what(), kAnalysisFailure);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularity analysis of autonomous polynomial second-order ODE systems"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // analyze
  std::string path;
  bool table = false, json = false;
  AnalyzeOptions aopt;
  auto* analyze_cmd = app.add_subcommand("analyze", "balances, resonances and branch classification");
  analyze_cmd->add_option("file", path, "system file, '-' for stdin")->required();
  analyze_cmd->add_flag("--table", table, "print the balance table");
  analyze_cmd->add_flag("--json", json, "print the JSON analysis document");
  analyze_cmd->add_option("--seed", aopt.seed, "random seed for the numeric enumeration");
  analyze_cmd->add_option("--tol", aopt.tol, "numeric tolerance");
  analyze_cmd->add_option("--starts", aopt.starts, "Newton starts")->check(CLI::PositiveNumber);

  // series
  int balance = 0, max_order = 8;
  std::string direction;
  std::vector<std::string> pins;
  bool series_json = false;
  std::uint64_t series_seed = 1;
  auto* series_cmd = app.add_subcommand("series", "Laurent series about a balance");
  series_cmd->add_option("file", path, "system file, '-' for stdin")->required();
  series_cmd->add_option("--balance", balance, "row of the balance table (1-based)")->required();
  series_cmd->add_option("--direction", direction, "right or left; defaults from the classification")
      ->check(CLI::IsMember({"right", "left"}));
  series_cmd->add_option("--max-order", max_order, "last relative order")->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--pin", pins, "injected symbols fixed to zero");
  series_cmd->add_flag("--json", series_json, "print JSON");
  series_cmd->add_option("--seed", series_seed, "random seed for the numeric enumeration");

  // verify-paper
  AcceptanceOptions vopt;
  int corrupt = 0;
  std::vector<int> only;
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the built-in acceptance checks");
  verify_cmd->add_option("--seed", vopt.seed, "base random seed");
  verify_cmd->add_option("--corrupt-row", corrupt, "mutate this table row first")->check(CLI::Range(1, 27));
  verify_cmd->add_option("--only", only, "criteria to run")->check(CLI::Range(1, 10));

  // integrate
  std::string from = "0", to = "1", init, csv;
  IntegrateOptions iopt;
  auto* integrate_cmd = app.add_subcommand("integrate", "integrate along a straight segment in the complex plane");
  integrate_cmd->add_option("file", path, "system file, '-' for stdin")->required();
  integrate_cmd->add_option("--from", from, "start time, number or (re,im)");
  integrate_cmd->add_option("--to", to, "end time");
  integrate_cmd->add_option("--init", init, "x, x', y, y', ... separated by commas")->required();
  integrate_cmd->add_option("--tol", iopt.tol, "local error tolerance");
  integrate_cmd->add_option("--csv", csv, "write the trajectory here, '-' for stdout");

  // poles
  std::string params_path;
  int depth = 2;
  bool poles_json = false;
  auto* poles_cmd = app.add_subcommand("poles", "poles of the closed-form solution and local expansions");
  poles_cmd->add_option("--params", params_path, "JSON file with a0..c2")->required();
  poles_cmd->add_option("--depth", depth, "expansion depth")->check(CLI::Range(-1, 30));
  poles_cmd->add_flag("--json", poles_json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  if (*analyze_cmd) {
    return guarded(json, [&] {
      const ODESystem sys = parse_system(read_source(path));
      const Analysis a = analyze(sys, aopt);
      if (json) std::cout << to_json(a).dump(2) << "\n";
      if (table || !json) {
        std::cout << render_table(a.table, sys.var_names);
        int nonzero = 0;
        for (const auto& r : a.table.rows) nonzero += r.report ? 1 : 0;
        if (!a.unrecognized.empty()) {
          std::cout << "\nnumeric balances outside Q(w):\n";
          std::cout.precision(12);
          for (const auto& r : a.unrecognized) {
            std::cout << " ";
            for (const Complex& z : r.coeffs) std::cout << " (" << z.real() << ", " << z.imag() << ")";
            std::cout << "\n";
          }
        }
        if (!json)
          std::cout << "\n" << a.numeric.roots.size() << " balances (Bezout bound " << a.numeric.bezout_bound << "), "
                    << nonzero << " without zero coefficients, " << a.table.groups << " triplets\n";
      }
      for (const auto& w : a.numeric.warnings) std::cerr << "warning: " << w << "\n";
      if (!a.unrecognized.empty()) {
        std::cerr << "warning: " << a.unrecognized.size() << " numeric balances are not exact in Q(w)\n";
      }
      return kOk;
    });
  }

  if (*series_cmd) {
    return guarded(series_json, [&] {
      const ODESystem sys = parse_system(read_source(path));
      AnalyzeOptions o;
      o.seed = series_seed;
      const Analysis a = analyze(sys, o);
      if (balance < 1 || balance > static_cast<int>(a.table.rows.size()))
        throw InputError("--balance must lie in 1.." + std::to_string(a.table.rows.size()));
      const TableEntry& row = a.table.rows[static_cast<std::size_t>(balance - 1)];
      if (!row.report) throw InputError("balance " + std::to_string(balance) + " has a zero coefficient");
      const BranchClass cls = row.report->branch_class;
      std::string dir = direction;
      if (dir.empty()) dir = cls == BranchClass::RightSeries ? "right" : "left";
      SeriesOptions so;
      so.max_order = max_order;
      so.pinned.insert(pins.begin(), pins.end());
      const bool matches = (dir == "right") ? cls == BranchClass::RightSeries : cls != BranchClass::RightSeries;
      if (!matches) {
        std::cerr << "warning: balance " << balance << " is classified " << to_string(cls) << "; forcing a " << dir
                  << " series\n";
        so.allow_branch_mismatch = true;
      }
      const SeriesResult res = dir == "right" ? build_right_series(sys, *row.report, so) : build_left_series(sys, *row.report, so);
      if (series_json) std::cout << to_json(res, balance).dump(2) << "\n";
      else std::cout << render_series(res);
      return res.halted_at ? kAnalysisFailure : kOk;
    });
  }

  if (*verify_cmd) {
    return guarded(false, [&] {
      if (corrupt) vopt.corrupt_row = corrupt;
      vopt.only.insert(only.begin(), only.end());
      bool all = true;
      for (int id = 1; id <= 10; ++id) {
        if (!vopt.only.empty() && !vopt.only.count(id)) continue;
        const CriterionResult r = run_criterion(id, vopt);
        std::cout << format_result(r) << std::endl;
        all = all && r.pass;
      }
      return all ? kOk : kAnalysisFailure;
    });
  }

  if (*integrate_cmd) {
    return guarded(false, [&] {
      const ODESystem sys = parse_system(read_source(path));
      const State y0 = parse_complex_list(init);
      if (y0.size() != 2 * sys.size())
        throw InputError("--init needs " + std::to_string(2 * sys.size()) + " values, got " + std::to_string(y0.size()));
      const Trajectory tr = integrate(sys, y0, parse_complex(from), parse_complex(to), iopt);
      if (!csv.empty()) {
        if (csv == "-") {
          write_csv(std::cout, tr, sys.var_names);
        } else {
          std::ofstream out(csv);
          if (!out) throw InputError("cannot write '" + csv + "'");
          write_csv(out, tr, sys.var_names);
        }
      }
      std::ostream& log = csv == "-" ? std::cerr : std::cout;
      log.precision(15);
      log << tr.times.size() - 1 << " steps, " << tr.rejected_steps << " rejected\n";
      for (std::size_t i = 0; i < sys.size(); ++i) log << sys.var_names[i] << " = " << tr.back()[2 * i] << "\n";
      if (!tr.complete) {
        std::cerr << "error: " << tr.diagnostic << "\n";
        return kAnalysisFailure;
      }
      return kOk;
    });
  }

  if (*poles_cmd) {
    return guarded(poles_json, [&] {
      Json j;
      try {
        j = Json::parse(read_source(params_path));
      } catch (const Json::parse_error& e) {
        throw InputError(std::string("parameters: ") + e.what());
      }
      const auto params = closed_form_params_from_json(j);
      const PoleSet ps = pole_set(params);
      Json out;
      out["degree"] = ps.degree;
      Json list = Json::array();
      for (const Pole& p : ps.poles) {
        Json e{{"t", {p.t.real(), p.t.imag()}}, {"multiplicity", p.multiplicity}, {"factor", p.factor}};
        if (p.multiplicity == 1) {
          try {
            Json terms = Json::array();
            const auto le = local_expansion(params, p.t, depth);
            for (std::size_t m = 0; m < le.size(); ++m) {
              Json c = Json::array();
              for (const Complex& z : le[m]) c.push_back({z.real(), z.imag()});
              terms.push_back({{"power", static_cast<int>(m) - 1}, {"coefficients", c}});
            }
            e["expansion"] = terms;
          } catch (const NonSimplePole&) {
            e["expansion"] = nullptr;
          }
        }
        list.push_back(e);
      }
      out["poles"] = list;
      if (poles_json) {
        std::cout << out.dump(2) << "\n";
        return kOk;
      }
      std::cout << ps.count() << " poles (degree " << ps.degree << ")\n";
      std::cout.precision(10);
      for (const auto& e : out["poles"]) {
        std::cout << "t = (" << e["t"][0].get<double>() << ", " << e["t"][1].get<double>() << ")  multiplicity "
                  << e["multiplicity"].get<int>();
        if (e.contains("expansion") && !e["expansion"].is_null()) {
          const auto& lead = e["expansion"][0]["coefficients"];
          std::cout << "  leading";
          for (const auto& c : lead) std::cout << " (" << c[0].get<double>() << ", " << c[1].get<double>() << ")";
        }
        std::cout << "\n";
      }
      return kOk;
    });
  }
  return kInputError;
}
