// Command-line front end. All real work happens in the command layer so the
// same paths are exercised in-process by the tests.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "pdcover/commands.hpp"

namespace {

int emit(const pdcover::CommandResult& res, const std::string& out_path) {
  if (!res.diagnostics.empty()) std::cerr << res.diagnostics;
  if (!res.output.empty()) {
    if (out_path.empty()) {
      std::cout << res.output;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return pdcover::kExitParse;
      }
      out << res.output;
    }
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"primal-dual edge cover of pliable set families"};
  app.require_subcommand(1);

  pdcover::RunConfig cfg;
  std::string mode = "explicit";
  std::string format = "text";

  const std::map<std::string, pdcover::RunConfig::Source> modes{
      {"explicit", pdcover::RunConfig::Source::kExplicit},
      {"uncrossable", pdcover::RunConfig::Source::kUncrossable},
      {"nmc", pdcover::RunConfig::Source::kNearMinCuts},
      {"capk", pdcover::RunConfig::Source::kCapKecss},
  };

  auto add_common = [&](CLI::App* sub, bool instance_flags) {
    sub->add_option("--mode", mode,
                    "family source: explicit, uncrossable, nmc, capk")
        ->check(CLI::IsMember({"explicit", "uncrossable", "nmc", "capk"}));
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "output file (or prefix for gen)");
    if (instance_flags) {
      sub->add_option("--graph", cfg.graph_path,
                      "graph file (or two-section nmc instance)");
      sub->add_option("--family", cfg.family_path, "explicit family file");
      sub->add_option("--base-graph", cfg.base_graph_path,
                      "separate base graph for nmc mode");
      sub->add_option("--k", cfg.k, "connectivity / deficiency threshold");
    }
  };

  CLI::App* solve = app.add_subcommand("solve", "run the two-phase solver");
  add_common(solve, true);
  CLI::App* baseline =
      app.add_subcommand("baseline", "exact optimum by exhaustive search");
  add_common(baseline, true);
  CLI::App* verify =
      app.add_subcommand("verify", "solve and check the structural invariants");
  add_common(verify, true);
  verify->add_option("--gamma-samples", cfg.gamma_samples,
                     "residual samples for the nesting check");

  CLI::App* gen = app.add_subcommand("gen", "write random instances");
  add_common(gen, false);
  gen->add_option("--seed", cfg.seed, "rng seed");
  gen->add_option("--count", cfg.count, "number of instances");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "generate, solve, compare against the baseline and verify");
  add_common(sweep, false);
  sweep->add_option("--seed", cfg.seed, "rng seed");
  sweep->add_option("--count", cfg.count, "number of instances");
  sweep->add_option("--gamma-samples", cfg.gamma_samples,
                    "residual samples for the nesting check");

  CLI11_PARSE(app, argc, argv);

  cfg.source = modes.at(mode);
  cfg.format = format == "json" ? pdcover::OutputFormat::kJson
                                : pdcover::OutputFormat::kText;
  if (solve->parsed()) cfg.command = pdcover::RunConfig::Command::kSolve;
  if (baseline->parsed()) cfg.command = pdcover::RunConfig::Command::kBaseline;
  if (verify->parsed()) cfg.command = pdcover::RunConfig::Command::kVerify;
  if (gen->parsed()) cfg.command = pdcover::RunConfig::Command::kGen;
  if (sweep->parsed()) cfg.command = pdcover::RunConfig::Command::kSweep;

  // gen uses --out as the instance-file prefix; its manifest goes to stdout.
  const std::string out_path =
      cfg.command == pdcover::RunConfig::Command::kGen ? "" : cfg.out;
  return emit(pdcover::run_command(cfg), out_path);
}
