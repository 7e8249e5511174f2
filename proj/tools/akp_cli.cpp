// akp: run a valuation scenario or a built-in demo and print its report.
//
//   akp --scenario chain.json [--format human|machine] [--oracle] [--budget "0,1,-1,2;3"]
//   akp --demo sqrt-minus-2
//
// Exit status: 0 all checks passed, 1 a check failed or a key was refuted,
// 2 the input could not be used (bad JSON, parse error, chain violation).

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "akp/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Abstract key polynomials over (Q, v_p) and (F_p(t), v_t)"};
  std::string scenario;
  std::string demo;
  std::string format = "human";
  std::string budget;
  bool oracle = false;

  auto* scenario_opt = app.add_option("--scenario", scenario, "Scenario file (JSON)");
  auto* demo_opt = app.add_option("--demo", demo, "Built-in scenario: sqrt-minus-2 or char2-xsq-t");
  scenario_opt->excludes(demo_opt);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--oracle", oracle, "Cross-check queries against the brute-force oracle");
  app.add_option("--budget", budget, "Search budget: c1,c2,...;maxdeg or default;maxdeg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : akp::cli::kInputError;
  }
  if (scenario.empty() && demo.empty()) {
    std::cerr << "akp: one of --scenario or --demo is required\n" << app.help();
    return akp::cli::kInputError;
  }

  akp::cli::RunOptions opts;
  opts.oracle = oracle;
  if (!budget.empty()) opts.budget = budget;

  akp::cli::Outcome out = demo.empty() ? akp::cli::run_file(scenario, opts) : akp::cli::run_demo(demo, opts);
  if (out.report.contains("error")) std::cerr << "akp: " << out.report["error"]["message"].get<std::string>() << "\n";
  std::cout << (format == "machine" ? akp::cli::render_machine(out.report) : akp::cli::render_human(out.report));
  return out.exit_code;
}
