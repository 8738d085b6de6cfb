#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdcover/generator.hpp"
#include "pdcover/rational.hpp"
#include "pdcover/witness.hpp"

namespace pdcover {

enum class SweepMode { kExplicit, kUncrossable, kNearMinCuts, kCapKecss };

struct SweepConfig {
  SweepMode mode = SweepMode::kExplicit;
  std::uint64_t seed = 1;
  int count = 0;
  // Residual nesting check: exhaustive when |E| <= gamma_exhaustive_max_edges,
  // sampled with gamma_samples subsets otherwise.
  int gamma_exhaustive_max_edges = 10;
  int gamma_samples = 200;
  ExplicitGenParams explicit_params;
  NmcGenParams nmc_params;
  CapKGenParams capk_params;
};

struct InstanceOutcome {
  int index = 0;
  std::uint64_t seed = 0;
  bool generated = false;
  bool solved = false;
  int n = 0, m = 0;
  bool pliable = false;
  bool uncrossable = false;
  bool semi_uncrossable = false;
  bool symmetric = false;
  bool gamma_verified = false;   // positive residual-nesting check (or implied)
  bool gamma_exhaustive = false; // the check was exhaustive, not sampled
  Rational cost;
  Rational dual_total;
  std::optional<Rational> opt;   // exact baseline optimum
  bool feasible_ok = false;
  bool weak_duality_ok = false;
  long violations = 0;           // structural check violations (gated)
  ViolationCounts counts;        // per-check breakdown behind `violations`
  int snapshots = 0;
  int snapshots_supported = 0;
  int max_ell_supported = 0;
  int max_ell_unsupported = 0;
  // Capacitated mode only.
  int rounds = 0;
  int rounds_bound = 0;
  bool final_cut_ok = false;
  bool round_ratio_ok = false;
  std::string note;              // failure or skip reason
};

struct SweepSummary {
  SweepConfig config;
  std::vector<InstanceOutcome> instances;  // ordered by index

  int generated = 0;
  int solved = 0;
  int gamma_verified_count = 0;
  int uncrossable_count = 0;
  // Structural violations on gamma-verified instances: the guarantees apply
  // there, so the expected count is zero.
  long total_violations = 0;
  ViolationCounts violation_detail;  // per-check breakdown, gamma-verified only
  // Violations on instances that failed (or skipped) the gamma check carry no
  // guarantee; kept separate as diagnostics.
  long violations_outside_gamma = 0;
  int snapshots_total = 0;
  int snapshots_supported = 0;
  int max_ell_supported = 0;    // gamma-verified instances, supported chains
  int max_ell_unsupported = 0;  // everything else

  // Max cost/OPT over instances with the strongest verified class label.
  std::optional<Rational> max_ratio_gamma;        // gamma-verified instances
  std::optional<Rational> max_ratio_uncrossable;  // uncrossable instances
  std::optional<Rational> max_ratio_any;
  // Max cost/dual_total, the operative primal-dual guarantee.
  std::optional<Rational> max_primal_dual_ratio_gamma;

  bool weak_duality_all_ok = true;
  bool feasibility_all_ok = true;
  // Capacitated mode aggregates.
  bool capk_all_final_cut_ok = true;
  bool capk_all_ratio_ok = true;

  std::string to_text() const;
  std::string to_json() const;
};

SweepSummary run_sweep(const SweepConfig& cfg);

}  // namespace pdcover
