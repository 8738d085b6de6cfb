#pragma once

#include <cstdint>
#include <string>

#include "pdcover/io.hpp"
#include "pdcover/sweep.hpp"

namespace pdcover {

// Command-layer configuration, filled by the CLI front end. Keeping the
// command implementations here lets tests drive them in-process.
struct RunConfig {
  enum class Command { kSolve, kBaseline, kVerify, kGen, kSweep };
  enum class Source { kExplicit, kUncrossable, kNearMinCuts, kCapKecss };

  Command command = Command::kSolve;
  Source source = Source::kExplicit;
  std::string graph_path;
  std::string family_path;
  std::string base_graph_path;  // optional alternative to a two-section file
  int k = 1;
  std::uint64_t seed = 1;
  int count = 10;
  std::string out;  // output file (solve/baseline/verify) or prefix (gen)
  OutputFormat format = OutputFormat::kText;
  int gamma_samples = 200;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;          // written to `out` when set, else stdout
  std::string diagnostics;     // stderr
};

CommandResult cmd_solve(const RunConfig& cfg);
CommandResult cmd_baseline(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_gen(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);

// Dispatch on cfg.command; exceptions are mapped to exit codes here.
CommandResult run_command(const RunConfig& cfg);

}  // namespace pdcover
