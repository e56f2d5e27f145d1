#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "loopfusion/cli.hpp"
#include "loopfusion/errors.hpp"

using namespace loopfusion;

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    cfg.limits = Limits::from_environment();
  } catch (const ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_code::usage;
  }
  std::string format = "text";
  std::string output;

  CLI::App app{"Modular data, fusion rules, level-rank duality and Jones-Wassermann subfactor invariants for affine SU(n)"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    bool needs_m;
  };
  const Command commands[] = {
      {"weights", "list the level-m weights of SU(n)", true},
      {"smatrix", "S-matrix, twists and quantum dimensions", true},
      {"fusion", "Verlinde fusion coefficients", true},
      {"levelrank", "branching of SU(mn) level 1 vacuum under SU(m) level n x SU(n) level m", true},
      {"index", "Jones-Wassermann index for an interval with --components arcs", true},
      {"graph", "dual principal graph for an interval with --components arcs", true},
      {"u1", "U(1) at level n: twists, monodromy and index", false},
      {"inclusion", "index of a conformal inclusion", true},
  };
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--n", cfg.n, s.needs_m ? "rank n of SU(n)" : "level n")->required();
    if (s.needs_m) sub->add_option("--m", cfg.m, "level m (rank m for levelrank/inclusion upper factor)")->required();
    if (std::string(s.name) == "index" || std::string(s.name) == "graph" || std::string(s.name) == "u1" ||
        std::string(s.name) == "inclusion")
      sub->add_option("--components", cfg.components, "number of disjoint arcs of the interval (l)");
    if (std::string(s.name) == "index") sub->add_option("--weight", cfg.weight, "Dynkin labels, e.g. 1,0, or vacuum");
    if (std::string(s.name) == "inclusion") sub->add_option("--kind", cfg.kind, "sumxsun or u1xsun");
    sub->add_option("--format", format, "json, csv, dot or text");
    sub->add_option("--output", output, "write to this file instead of standard output");
    sub->add_flag("--verify", cfg.verify, "run the invariant checks; exit 3 if any fails");
    sub->add_option("--tol-unitarity", cfg.tolerances.unitarity);
    sub->add_option("--tol-integrality", cfg.tolerances.integrality);
    sub->add_option("--tol-identity", cfg.tolerances.identity);
    sub->add_option("--max-basis", cfg.limits.max_basis);
    sub->add_option("--max-tuples", cfg.limits.max_tuples);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code::usage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  const auto parsed = parse_format(format);
  if (!parsed) {
    std::cerr << "usage error: unknown format '" << format << "'\n";
    return exit_code::usage;
  }
  cfg.format = *parsed;

  const CommandResult result = run_command(cfg);
  std::cerr << result.error;
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "usage error: cannot open " << output << "\n";
      return exit_code::usage;
    }
    out << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}
