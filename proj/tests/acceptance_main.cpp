// Prints one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <iostream>

#include <CLI11.hpp>

#include "painleve/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  painleve::AcceptanceOptions opt;
  std::vector<int> only;
  int corrupt = 0;
  app.add_option("--seed", opt.seed, "base random seed");
  app.add_option("--only", only, "criteria to run")->check(CLI::Range(1, 10));
  app.add_option("--corrupt-row", corrupt, "mutate this table row first")->check(CLI::Range(1, 27));
  CLI11_PARSE(app, argc, argv);
  opt.only.insert(only.begin(), only.end());
  if (corrupt) opt.corrupt_row = corrupt;

  bool all = true;
  for (int id = 1; id <= 10; ++id) {
    if (!opt.only.empty() && !opt.only.count(id)) continue;
    const auto r = painleve::run_criterion(id, opt);
    std::cout << painleve::format_result(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
