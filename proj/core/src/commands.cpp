#include "pdcover/commands.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "pdcover/applications.hpp"
#include "pdcover/baseline.hpp"
#include "pdcover/errors.hpp"
#include "pdcover/generator.hpp"
#include "pdcover/witness.hpp"

namespace pdcover {
namespace {

struct LoadedInstance {
  Graph g;                       // the graph the solver buys edges from
  std::unique_ptr<FamilyOracle> oracle;
  bool symmetric = false;
  std::map<std::string, std::string> extras;
};

LoadedInstance load_explicit(const RunConfig& cfg) {
  if (cfg.graph_path.empty() || cfg.family_path.empty())
    throw InputDomainError("explicit mode needs --graph and --family");
  Graph g = read_graph_file(cfg.graph_path);
  ExplicitFamily fam = read_family_file(cfg.family_path);
  if (fam.ground_set_size() != g.vertex_count())
    throw InputDomainError("family and graph disagree on the ground set");
  const FamilyClass cls = classify(fam);
  LoadedInstance inst{std::move(g), nullptr, cls.symmetric, {}};
  inst.extras["family-members"] = std::to_string(fam.size());
  inst.extras["family-class"] =
      std::string(cls.uncrossable        ? "uncrossable"
                  : cls.semi_uncrossable ? "semi-uncrossable"
                  : cls.pliable          ? "pliable"
                                         : "unstructured") +
      (cls.symmetric ? "+symmetric" : "");
  inst.oracle = std::make_unique<ExplicitFamilyOracle>(std::move(fam),
                                                       cls.pliable);
  return inst;
}

LoadedInstance load_nmc(const RunConfig& cfg) {
  Graph base(0);
  Graph candidates(0);
  if (!cfg.base_graph_path.empty()) {
    if (cfg.graph_path.empty())
      throw InputDomainError("nmc mode with --base-graph needs --graph too");
    base = read_graph_file(cfg.base_graph_path);
    candidates = read_graph_file(cfg.graph_path);
  } else {
    if (cfg.graph_path.empty())
      throw InputDomainError("nmc mode needs --graph (two-section file)");
    NmcSections sections = read_nmc_sections_file(cfg.graph_path);
    base = std::move(sections.base);
    candidates = std::move(sections.candidates);
  }
  NearMinCutsInstance nmc(std::move(base), std::move(candidates), cfg.k);
  LoadedInstance inst{nmc.candidates, nullptr, /*symmetric=*/true, {}};
  auto oracle = std::make_unique<NearMinCutsOracle>(nmc.base, nmc.k);
  if (nmc.base.vertex_count() <= 16) {
    const auto members = oracle->enumerate_members();
    inst.extras["family-members"] = std::to_string(members.size());
    inst.extras["family-cores"] = std::to_string(
        oracle->min_cores(EdgeSet(), nmc.candidates).size());
  }
  inst.extras["k"] = std::to_string(nmc.k);
  inst.oracle = std::move(oracle);
  return inst;
}

std::string render_certificate(const RunConfig& cfg, const SolveResult& r,
                               const Graph& g,
                               const std::map<std::string, std::string>& extras) {
  return cfg.format == OutputFormat::kJson ? certificate_json(r, g, extras)
                                           : certificate_text(r, g, extras);
}

CommandResult capk_solve(const RunConfig& cfg) {
  if (cfg.graph_path.empty())
    throw InputDomainError("capk mode needs --graph");
  CapKecssInstance inst(read_graph_file(cfg.graph_path), cfg.k);
  const CapKecssResult result = solve_cap_kecss(inst);

  CommandResult out;
  std::ostringstream os;
  if (cfg.format == OutputFormat::kJson) {
    // One certificate per round would be unwieldy; summarize.
    os << "{\n  \"format\": \"pdcover-capk\",\n  \"k\": " << inst.k
       << ",\n  \"rounds\": " << result.rounds.size()
       << ",\n  \"cost\": \"" << format_rational(result.cost)
       << "\",\n  \"selected\": [";
    bool first = true;
    for (int e : result.selected.ids()) {
      if (!first) os << ", ";
      os << e;
      first = false;
    }
    os << "],\n  \"min_cut\": " << min_capacitated_cut(inst.g, result.selected)
       << "\n}\n";
  } else {
    os << "pdcover capk result\n";
    os << "k: " << inst.k << "\n";
    os << "rounds: " << result.rounds.size() << " (bound "
       << inst.max_rounds() << ")\n";
    os << "selected:";
    for (int e : result.selected.ids()) os << ' ' << e;
    os << "\ncost: " << format_rational(result.cost) << "\n";
    os << "min-cut: " << min_capacitated_cut(inst.g, result.selected) << "\n";
  }
  out.output = os.str();
  return out;
}

bool explicit_like(RunConfig::Source s) {
  return s == RunConfig::Source::kExplicit ||
         s == RunConfig::Source::kUncrossable;
}

CommandResult dispatch_solve(const RunConfig& cfg) {
  if (cfg.source == RunConfig::Source::kCapKecss) return capk_solve(cfg);
  LoadedInstance inst =
      explicit_like(cfg.source) ? load_explicit(cfg) : load_nmc(cfg);
  const SolveResult result = solve(inst.g, *inst.oracle);
  const VerificationReport rep =
      verify_solve(inst.g, *inst.oracle, result, inst.symmetric);
  inst.extras["verification-violations"] = std::to_string(rep.violation_count());
  inst.extras["verification-snapshots"] = std::to_string(rep.snapshots.size());

  CommandResult out;
  out.output = render_certificate(cfg, result, inst.g, inst.extras);
  if (rep.violation_count() > 0) {
    out.exit_code = kExitLemmaViolation;
    out.diagnostics = "structural verification reported " +
                      std::to_string(rep.violation_count()) + " violation(s)\n";
  }
  return out;
}

CommandResult dispatch_baseline(const RunConfig& cfg) {
  BaselineResult result;
  if (cfg.source == RunConfig::Source::kCapKecss) {
    if (cfg.graph_path.empty())
      throw InputDomainError("capk mode needs --graph");
    CapKecssInstance inst(read_graph_file(cfg.graph_path), cfg.k);
    result = optimal_cap_kecss(inst);
  } else {
    LoadedInstance inst =
        explicit_like(cfg.source) ? load_explicit(cfg) : load_nmc(cfg);
    result = optimal_cover(inst.g, *inst.oracle);
  }
  CommandResult out;
  out.output = cfg.format == OutputFormat::kJson ? baseline_json(result)
                                                 : baseline_text(result);
  if (!result.feasible) out.exit_code = kExitInfeasible;
  return out;
}

CommandResult dispatch_verify(const RunConfig& cfg) {
  CommandResult out;
  if (cfg.source == RunConfig::Source::kCapKecss) {
    // Capacitated runs are verified round by round through the sweep path;
    // for a single instance, verify each round's solve.
    if (cfg.graph_path.empty())
      throw InputDomainError("capk mode needs --graph");
    CapKecssInstance inst(read_graph_file(cfg.graph_path), cfg.k);
    const CapKecssResult result = solve_cap_kecss(inst);
    long violations = 0;
    std::ostringstream os;
    EdgeSet selected;
    for (std::size_t r = 0; r < result.rounds.size(); ++r) {
      Graph pool(inst.g.vertex_count());
      std::vector<int> pool_to_g;
      for (const Edge& e : inst.g.edges())
        if (!selected.contains(e.id)) {
          pool.add_edge(e.u, e.v, e.cost, e.capacity);
          pool_to_g.push_back(e.id);
        }
      CapResidualOracle oracle(inst.g, selected, inst.k);
      const VerificationReport rep =
          verify_solve(pool, oracle, result.rounds[r], /*symmetric=*/true);
      violations += rep.violation_count();
      os << "round " << (r + 1) << ":\n"
         << (cfg.format == OutputFormat::kJson
                 ? verification_report_json(rep)
                 : verification_report_text(rep));
      for (int pe : result.rounds[r].solution.ids())
        selected = selected.with(pool_to_g[pe]);
    }
    os << "final-cut: " << min_capacitated_cut(inst.g, result.selected)
       << " (k=" << inst.k << ")\n";
    out.output = os.str();
    if (violations > 0) out.exit_code = kExitLemmaViolation;
    return out;
  }

  LoadedInstance inst =
      explicit_like(cfg.source) ? load_explicit(cfg) : load_nmc(cfg);
  const SolveResult result = solve(inst.g, *inst.oracle);
  std::optional<Rational> opt;
  if (inst.g.edge_count() <= kBaselineMaxEdges &&
      inst.g.vertex_count() <= kBaselineMaxVertices) {
    const BaselineResult base = optimal_cover(inst.g, *inst.oracle);
    if (base.feasible) opt = base.opt_cost;
  }
  const VerificationReport rep =
      verify_solve(inst.g, *inst.oracle, result, inst.symmetric, opt);
  out.output = cfg.format == OutputFormat::kJson
                   ? verification_report_json(rep)
                   : verification_report_text(rep);
  if (rep.violation_count() > 0) out.exit_code = kExitLemmaViolation;
  return out;
}

CommandResult dispatch_gen(const RunConfig& cfg) {
  if (cfg.out.empty()) throw InputDomainError("gen needs --out prefix");
  CommandResult res;
  std::ostringstream manifest;
  manifest << "pdcover gen manifest\n";
  manifest << "rng: " << Rng::kAlgorithm << " seed=" << cfg.seed
           << " count=" << cfg.count << "\n";

  for (int idx = 0; idx < cfg.count; ++idx) {
    const std::uint64_t seed = derive_seed(cfg.seed, idx);
    Rng rng(seed);
    const std::string stem = cfg.out + "_" + std::to_string(idx);
    switch (cfg.source) {
      case RunConfig::Source::kExplicit:
      case RunConfig::Source::kUncrossable: {
        const FamilyKind kind = cfg.source == RunConfig::Source::kUncrossable
                                    ? FamilyKind::kUncrossable
                                    : FamilyKind::kPliable;
        std::optional<ExplicitInstance> inst;
        ExplicitGenParams params;
        for (int a = 0; a < 60 && !inst; ++a)
          inst = generate_explicit_instance(rng, params, kind);
        if (!inst) {
          manifest << idx << ": generation failed\n";
          break;
        }
        std::ofstream(stem + ".graph") << write_graph(inst->g);
        std::ofstream(stem + ".family") << write_family(inst->fam);
        manifest << idx << ": " << stem << ".graph " << stem << ".family n="
                 << inst->g.vertex_count() << " m=" << inst->g.edge_count()
                 << " members=" << inst->fam.size() << "\n";
        break;
      }
      case RunConfig::Source::kNearMinCuts: {
        std::optional<NearMinCutsInstance> inst;
        NmcGenParams params;
        for (int a = 0; a < 60 && !inst; ++a)
          inst = generate_nmc_instance(rng, params);
        if (!inst) {
          manifest << idx << ": generation failed\n";
          break;
        }
        std::ofstream(stem + ".nmc")
            << write_nmc_sections(inst->base, inst->candidates);
        manifest << idx << ": " << stem << ".nmc n="
                 << inst->base.vertex_count() << " k=" << inst->k << "\n";
        break;
      }
      case RunConfig::Source::kCapKecss: {
        std::optional<CapKecssInstance> inst;
        CapKGenParams params;
        for (int a = 0; a < 60 && !inst; ++a)
          inst = generate_capk_instance(rng, params);
        if (!inst) {
          manifest << idx << ": generation failed\n";
          break;
        }
        std::ofstream(stem + ".graph") << write_graph(inst->g);
        manifest << idx << ": " << stem << ".graph n="
                 << inst->g.vertex_count() << " m=" << inst->g.edge_count()
                 << " k=" << inst->k << "\n";
        break;
      }
    }
  }
  res.output = manifest.str();
  return res;
}

CommandResult dispatch_sweep(const RunConfig& cfg) {
  SweepConfig sc;
  switch (cfg.source) {
    case RunConfig::Source::kExplicit: sc.mode = SweepMode::kExplicit; break;
    case RunConfig::Source::kUncrossable:
      sc.mode = SweepMode::kUncrossable;
      break;
    case RunConfig::Source::kNearMinCuts: sc.mode = SweepMode::kNearMinCuts; break;
    case RunConfig::Source::kCapKecss: sc.mode = SweepMode::kCapKecss; break;
  }
  sc.seed = cfg.seed;
  sc.count = cfg.count;
  sc.gamma_samples = cfg.gamma_samples;
  const SweepSummary summary = run_sweep(sc);
  CommandResult out;
  out.output = cfg.format == OutputFormat::kJson ? summary.to_json()
                                                 : summary.to_text();
  if (summary.total_violations > 0) out.exit_code = kExitLemmaViolation;
  return out;
}

}  // namespace

CommandResult cmd_solve(const RunConfig& cfg) { return dispatch_solve(cfg); }
CommandResult cmd_baseline(const RunConfig& cfg) {
  return dispatch_baseline(cfg);
}
CommandResult cmd_verify(const RunConfig& cfg) { return dispatch_verify(cfg); }
CommandResult cmd_gen(const RunConfig& cfg) { return dispatch_gen(cfg); }
CommandResult cmd_sweep(const RunConfig& cfg) { return dispatch_sweep(cfg); }

CommandResult run_command(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case RunConfig::Command::kSolve: return cmd_solve(cfg);
      case RunConfig::Command::kBaseline: return cmd_baseline(cfg);
      case RunConfig::Command::kVerify: return cmd_verify(cfg);
      case RunConfig::Command::kGen: return cmd_gen(cfg);
      case RunConfig::Command::kSweep: return cmd_sweep(cfg);
    }
    throw InputDomainError("unknown command");
  } catch (const ParseError& e) {
    return CommandResult{kExitParse, "", std::string(e.what()) + "\n"};
  } catch (const CapacityError& e) {
    return CommandResult{kExitCapacity, "", std::string(e.what()) + "\n"};
  } catch (const InfeasibleError& e) {
    return CommandResult{
        kExitInfeasible, "",
        std::string(e.what()) + "\nviolated set: " +
            VertexSet(e.ground_size(), e.core_bits()).to_string() + "\n"};
  } catch (const InputDomainError& e) {
    return CommandResult{kExitParse, "", std::string(e.what()) + "\n"};
  } catch (const Error& e) {
    return CommandResult{kExitLemmaViolation, "", std::string(e.what()) + "\n"};
  }
}

}  // namespace pdcover
