#pragma once

// Command surface shared by the loopfusion executable and the test suites.
// run_command never throws: every failure is mapped to an exit code.

#include <optional>
#include <string>
#include <vector>

#include "loopfusion/checks.hpp"
#include "loopfusion/limits.hpp"
#include "loopfusion/subfactor.hpp"

namespace loopfusion {

enum class Format { json, csv, dot, text };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int consistency = 3;
inline constexpr int resource = 4;
}  // namespace exit_code

struct RunConfig {
  std::string command;  // weights | smatrix | fusion | levelrank | index | graph | u1 | inclusion
  int n = 0;
  int m = 0;
  int components = 1;
  std::optional<std::string> weight;  // comma-separated Dynkin labels, or "vacuum"
  std::string kind = "sumxsun";       // inclusion kind: sumxsun | u1xsun
  Format format = Format::text;
  bool verify = false;
  Tolerances tolerances;
  Limits limits;
};

struct CommandResult {
  std::string output;  // destined for stdout or --output
  std::string error;   // destined for stderr
  int exit_code = exit_code::ok;
};

CommandResult run_command(const RunConfig& config);

// Throws ArgumentError when cfg holds a non-positive tolerance or cap.
void validate(const RunConfig& config);

std::optional<Format> parse_format(const std::string& s);
// "0", "1,0", "vacuum" -> weight of SU(rank) at level.
LevelWeight parse_weight(const std::string& s, int rank, int level);

// DOT form of the dual principal graph: boxes for even tuples, circles for
// odd vertices, one undirected edge line per unit of multiplicity.
std::string to_dot(const PrincipalGraph& g);

// %.*g with negative zero folded to zero.
std::string format_double(double v, int precision = 17);

}  // namespace loopfusion
