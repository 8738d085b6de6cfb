#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "pdcover/commands.hpp"

using namespace pdcover;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() /
          ("pdcover_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(dir, ec); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
  }
};

const char* kTriangleGraph = "3 3\n0 1 1 1\n1 2 1 1\n0 2 1 1\n";
const char* kSingletonFamily = "3 3\n0\n1\n2\n";

}  // namespace

TEST_CASE("solve writes a certificate with the expected totals") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = RunConfig::Command::kSolve;
  cfg.graph_path = tmp.write("t.graph", kTriangleGraph);
  cfg.family_path = tmp.write("t.family", kSingletonFamily);
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitOk);
  CHECK(res.output.find("cost: 2\n") != std::string::npos);
  CHECK(res.output.find("dual-total: 3/2\n") != std::string::npos);
  CHECK(res.output.find("solution: 0 1\n") != std::string::npos);
}

TEST_CASE("solve in json keeps the same numbers") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = RunConfig::Command::kSolve;
  cfg.format = OutputFormat::kJson;
  cfg.graph_path = tmp.write("t.graph", kTriangleGraph);
  cfg.family_path = tmp.write("t.family", kSingletonFamily);
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitOk);
  CHECK(res.output.find("\"cost\": \"2\"") != std::string::npos);
  CHECK(res.output.find("\"total\": \"3/2\"") != std::string::npos);
}

TEST_CASE("empty family solves to a zero-cost certificate") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = RunConfig::Command::kSolve;
  cfg.graph_path = tmp.write("t.graph", kTriangleGraph);
  cfg.family_path = tmp.write("e.family", "3 0\n");
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitOk);
  CHECK(res.output.find("cost: 0\n") != std::string::npos);
  CHECK(res.output.find("solution:\n") != std::string::npos);
}

TEST_CASE("disconnected candidates exit with the infeasible code") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = RunConfig::Command::kSolve;
  cfg.graph_path = tmp.write("d.graph", "3 1\n0 1 1 1\n");
  cfg.family_path = tmp.write("d.family", "3 1\n2\n");
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitInfeasible);
  CHECK(res.diagnostics.find("{2}") != std::string::npos);
}

TEST_CASE("parse errors exit with code 4 and a line number") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = RunConfig::Command::kSolve;
  cfg.graph_path = tmp.write("bad.graph", "3 1\nnot an edge\n");
  cfg.family_path = tmp.write("t.family", kSingletonFamily);
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitParse);
  CHECK(res.diagnostics.find(":2:") != std::string::npos);
}

TEST_CASE("capacity violations exit with code 3") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = RunConfig::Command::kBaseline;
  std::string big = "2 23\n";
  for (int t = 0; t < 23; ++t) big += "0 1 1 1\n";
  cfg.graph_path = tmp.write("big.graph", big);
  cfg.family_path = tmp.write("b.family", "2 1\n0\n");
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitCapacity);
}

TEST_CASE("baseline command reports the optimum") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = RunConfig::Command::kBaseline;
  cfg.graph_path = tmp.write("t.graph", kTriangleGraph);
  cfg.family_path = tmp.write("t.family", kSingletonFamily);
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitOk);
  CHECK(res.output.find("opt-cost: 2\n") != std::string::npos);
}

TEST_CASE("verify command reports a clean run") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = RunConfig::Command::kVerify;
  cfg.graph_path = tmp.write("t.graph", kTriangleGraph);
  cfg.family_path = tmp.write("t.family", kSingletonFamily);
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitOk);
  CHECK(res.output.find("violations: 0\n") != std::string::npos);
  CHECK(res.output.find("weak-duality: yes\n") != std::string::npos);
}

TEST_CASE("nmc two-section instance solves end to end") {
  TempDir tmp;
  const char* nmc =
      "4 6\n#base\n0 1 0 1\n1 2 0 1\n2 3 0 1\n3 0 0 1\n"
      "#candidates\n0 2 1 1\n1 3 1 1\n";
  RunConfig cfg;
  cfg.command = RunConfig::Command::kSolve;
  cfg.source = RunConfig::Source::kNearMinCuts;
  cfg.graph_path = tmp.write("c4.nmc", nmc);
  cfg.k = 3;
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitOk);
  CHECK(res.output.find("cost: 2\n") != std::string::npos);
  CHECK(res.output.find("family-members: 12\n") != std::string::npos);
  CHECK(res.output.find("family-cores: 4\n") != std::string::npos);
}

TEST_CASE("nmc with separate base graph matches the sectioned form") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = RunConfig::Command::kSolve;
  cfg.source = RunConfig::Source::kNearMinCuts;
  cfg.base_graph_path =
      tmp.write("base.graph", "4 4\n0 1 0 1\n1 2 0 1\n2 3 0 1\n3 0 0 1\n");
  cfg.graph_path = tmp.write("cand.graph", "4 2\n0 2 1 1\n1 3 1 1\n");
  cfg.k = 3;
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitOk);
  CHECK(res.output.find("cost: 2\n") != std::string::npos);
}

TEST_CASE("capk solve reports rounds and the final cut") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = RunConfig::Command::kSolve;
  cfg.source = RunConfig::Source::kCapKecss;
  cfg.graph_path =
      tmp.write("p.graph", "2 3\n0 1 1 1\n0 1 1 1\n0 1 1 1\n");
  cfg.k = 2;
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitOk);
  CHECK(res.output.find("rounds: 2") != std::string::npos);
  CHECK(res.output.find("cost: 2\n") != std::string::npos);
  CHECK(res.output.find("min-cut: 2\n") != std::string::npos);
}

TEST_CASE("gen writes instance files and a manifest") {
  TempDir tmp;
  RunConfig cfg;
  cfg.command = RunConfig::Command::kGen;
  cfg.seed = 42;
  cfg.count = 3;
  cfg.out = (tmp.dir / "inst").string();
  const CommandResult res = run_command(cfg);
  CHECK(res.exit_code == kExitOk);
  CHECK(fs::exists(tmp.dir / "inst_0.graph"));
  CHECK(fs::exists(tmp.dir / "inst_0.family"));
  CHECK(res.output.find("seed=42") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical outputs") {
  TempDir tmp;

  RunConfig gen;
  gen.command = RunConfig::Command::kGen;
  gen.seed = 7;
  gen.count = 2;
  gen.out = (tmp.dir / "a").string();
  const CommandResult g1 = run_command(gen);
  gen.out = (tmp.dir / "b").string();
  const CommandResult g2 = run_command(gen);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  CHECK(slurp(tmp.dir / "a_0.graph") == slurp(tmp.dir / "b_0.graph"));
  CHECK(slurp(tmp.dir / "a_0.family") == slurp(tmp.dir / "b_0.family"));
  CHECK(slurp(tmp.dir / "a_1.graph") == slurp(tmp.dir / "b_1.graph"));

  RunConfig sweep;
  sweep.command = RunConfig::Command::kSweep;
  sweep.seed = 11;
  sweep.count = 4;
  const CommandResult s1 = run_command(sweep);
  const CommandResult s2 = run_command(sweep);
  CHECK(s1.exit_code == kExitOk);
  CHECK(s1.output == s2.output);
  sweep.format = OutputFormat::kJson;
  const CommandResult s3 = run_command(sweep);
  const CommandResult s4 = run_command(sweep);
  CHECK(s3.output == s4.output);
}

TEST_CASE("small sweeps run clean in every mode") {
  for (const auto source :
       {RunConfig::Source::kExplicit, RunConfig::Source::kNearMinCuts,
        RunConfig::Source::kCapKecss}) {
    RunConfig cfg;
    cfg.command = RunConfig::Command::kSweep;
    cfg.source = source;
    cfg.seed = 20;
    cfg.count = 5;
    const CommandResult res = run_command(cfg);
    CHECK(res.exit_code == kExitOk);
    CHECK(res.output.find("violations (gamma-verified): 0") !=
          std::string::npos);
  }
}
