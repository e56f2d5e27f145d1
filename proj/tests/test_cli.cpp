#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "loopfusion/cli.hpp"
#include "oracles.hpp"

using namespace loopfusion;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(LOOPFUSION_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunConfig config(std::string command, int n, int m, Format f = Format::text) {
  RunConfig c;
  c.command = std::move(command);
  c.n = n;
  c.m = m;
  c.format = f;
  return c;
}

int line_count(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("weights rows") {
    auto r = run_command(config("weights", 2, 1, Format::csv));
    CHECK(r.exit_code == 0);
    CHECK(line_count(r.output) == 1 + 2);
    r = run_command(config("weights", 3, 2, Format::csv));
    CHECK(line_count(r.output) == 1 + 6);
    CHECK(r.output == golden("weights_su3_level2.csv"));
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run_command(config("weights", 1, 2)).exit_code == exit_code::usage);
    CHECK(run_command(config("nonsense", 2, 2)).exit_code == exit_code::usage);
    CHECK(run_command(config("smatrix", 2, 2, Format::dot)).exit_code == exit_code::usage);
    auto c = config("inclusion", 2, 2);
    c.kind = "other";
    CHECK(run_command(c).exit_code == exit_code::usage);
    c = config("smatrix", 2, 2);
    c.tolerances.identity = 0;
    CHECK(run_command(c).exit_code == exit_code::usage);
    c = config("smatrix", 2, 2);
    c.limits.max_basis = 0;
    CHECK(run_command(c).exit_code == exit_code::usage);
    c = config("index", 2, 2);
    c.weight = "3";
    const auto r = run_command(c);
    CHECK(r.exit_code == exit_code::usage);
    CHECK(r.output.empty());
    CHECK_FALSE(r.error.empty());
    c.weight = "x";
    CHECK(run_command(c).exit_code == exit_code::usage);
    c = config("graph", 2, 2);
    c.components = 0;
    CHECK(run_command(c).exit_code == exit_code::usage);
  }

  TEST_CASE("resource cap exits 4") {
    auto c = config("smatrix", 3, 4);
    c.limits.max_basis = 10;
    CHECK(run_command(c).exit_code == exit_code::resource);
    c = config("graph", 3, 2);
    c.components = 3;
    c.limits.max_tuples = 100;
    CHECK(run_command(c).exit_code == exit_code::resource);
  }

  TEST_CASE("failed checks exit 3 and name the check") {
    auto c = config("smatrix", 3, 3);
    c.verify = true;
    c.tolerances.unitarity = 1e-300;
    const auto r = run_command(c);
    CHECK(r.exit_code == exit_code::consistency);
    CHECK(r.error.find("s_unitary") != std::string::npos);
  }

  TEST_CASE("index report") {
    auto c = config("index", 2, 1);
    c.components = 2;
    c.weight = "0";
    const auto r = run_command(c);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("d = 1.4142135623731") != std::string::npos);
    CHECK(r.output.find("index = 2\n") != std::string::npos);
    CHECK(r.output.find("S00") != std::string::npos);
    CHECK(parse_weight("vacuum", 3, 2) == LevelWeight::vacuum(3, 2));
    CHECK(parse_weight("1,0", 3, 2) == LevelWeight(3, 2, {1, 0}));
  }

  TEST_CASE("graph formats") {
    auto c = config("graph", 2, 1, Format::dot);
    c.components = 2;
    auto r = run_command(c);
    CHECK(r.exit_code == 0);
    CHECK(r.output == golden("graph_su2_level1_c2.dot"));
    CHECK(r.output == oracle::zn_principal_graph_dot(2, 2));
    c.n = 3;
    CHECK(run_command(c).output == golden("graph_su3_level1_c2.dot"));
    c = config("graph", 2, 2, Format::csv);
    c.components = 2;
    CHECK(run_command(c).output == golden("graph_su2_level2_c2.csv"));
  }

  TEST_CASE("table goldens") {
    CHECK(run_command(config("fusion", 2, 2, Format::csv)).output == golden("fusion_su2_level2.csv"));
    auto c = config("levelrank", 3, 2, Format::csv);
    CHECK(run_command(c).output == golden("levelrank_2_3.csv"));
  }

  TEST_CASE("every command verifies cleanly") {
    for (const char* cmd : {"weights", "smatrix", "fusion", "levelrank", "index", "graph", "u1", "inclusion"}) {
      CAPTURE(cmd);
      auto c = config(cmd, 3, 2);
      c.components = 2;
      c.verify = true;
      const auto r = run_command(c);
      CHECK(r.exit_code == 0);
      CHECK(r.output.find("PASS") != std::string::npos);
      CHECK(r.output.find("FAIL") == std::string::npos);
    }
    auto c = config("inclusion", 3, 1);
    c.kind = "u1xsun";
    c.verify = true;
    CHECK(run_command(c).exit_code == 0);
  }

  TEST_CASE("json envelope") {
    auto c = config("smatrix", 2, 2, Format::json);
    c.verify = true;
    const auto doc = nlohmann::json::parse(run_command(c).output);
    CHECK(doc.contains("params"));
    CHECK(doc.contains("data"));
    REQUIRE(doc["checks"].is_array());
    for (const auto& ch : doc["checks"]) {
      CHECK(ch.contains("name"));
      CHECK(ch.contains("residual"));
      CHECK(ch["pass"].get<bool>());
    }
    const auto& s = doc["data"]["S"];
    REQUIRE(s.size() == 3);
    REQUIRE(s[0][0].size() == 2);
    CHECK(s[0][0][0].get<double>() == doctest::Approx(0.5));
    CHECK(doc["params"]["n"] == 2);
  }

  TEST_CASE("output is deterministic") {
    for (Format f : {Format::json, Format::csv, Format::text}) {
      auto c = config("levelrank", 2, 4, f);
      c.verify = true;
      CHECK(run_command(c).output == run_command(c).output);
    }
  }

  TEST_CASE("number formatting") {
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(2.0, 15) == "2");
    CHECK(parse_format("csv") == Format::csv);
    CHECK_FALSE(parse_format("xml").has_value());
  }
}
