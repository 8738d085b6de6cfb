#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdcover/family.hpp"
#include "pdcover/graph.hpp"
#include "pdcover/solver.hpp"

namespace pdcover {

// Laminar witness family for an inclusion-minimal cover I, augmented by the
// full set and rooted there. Every non-root set S is a family member with
// δ_I(S) = {its edge}; the edge<->set mapping is a bijection.
struct WitnessForest {
  std::vector<VertexSet> sets;            // root (full set) is sets[root]
  std::vector<int> parent;                // parent index, -1 at root
  std::vector<std::vector<int>> children; // sorted by child set bitmask
  std::vector<int> edge_of_set;           // covering edge id, -1 at root
  std::map<int, int> set_of_edge;         // edge id -> set index
  int root = -1;

  int size() const { return static_cast<int>(sets.size()); }
};

// One uncrossing replacement: witness of `edge` changed from `before` to one
// of the four derived sets of (before, other), lowering the total overlap
// count.
struct UncrossStep {
  int edge = -1;
  VertexSet before, other, after;
  long beta_before = 0, beta_after = 0;
};

struct WitnessAssignment {
  int edge = -1;
  VertexSet set;
};

// Total overlap count: for each assigned set, the number of other assigned
// sets it overlaps, summed.
long beta_of(const std::vector<WitnessAssignment>& l);

// Deterministic initial witness choice for e: the smallest-bitmask minimal
// core of the family residual to I∖{e}. Empty when I is not minimal at e.
std::optional<VertexSet> initial_witness(const Graph& g,
                                         const FamilyOracle& oracle,
                                         const EdgeSet& i, int e);

struct UncrossResult {
  std::vector<WitnessAssignment> assignments;  // laminar
  std::vector<UncrossStep> steps;
};

// Repeatedly replaces one set of an overlapping pair by a derived set that is
// a member and still uniquely covered by its edge, preferring the smallest
// replacement (cardinality, then bitmask). The overlap count drops at every
// step, which bounds the loop; a step with no valid replacement reports the
// family as not pliable.
UncrossResult uncross_witness_family(const Graph& g,
                                     const FamilyOracle& oracle,
                                     const EdgeSet& i,
                                     std::vector<WitnessAssignment> initial);

struct WitnessBuildResult {
  WitnessForest forest;
  std::vector<UncrossStep> steps;
};

// Initial witnesses chosen in reverse addition order, then uncrossed until
// laminar, then rooted. `cover_edges` must be an inclusion-minimal cover of
// the oracle family, in addition order.
WitnessBuildResult build_witness_forest(const Graph& g,
                                        const FamilyOracle& oracle,
                                        const std::vector<int>& cover_edges);

// A maximal run of hollow single-child sets, bottom-up: chain sets
// S_0,...,S_ell where S_1..S_ell are hollow (own no core), each S_{i-1} the
// unique child of S_i, and S_ell is not the root.
struct ChainRecord {
  std::vector<int> set_indices;            // size ell+1, S_0 first
  int ell = 0;
  std::vector<int> edges;                  // covering edge of each S_i
  std::vector<std::pair<int, int>> ends;   // (a_i, b_i), a_i inside S_i
  std::vector<int> a_core, b_core;         // owning core index or -1
  int contribution = 0;                    // cores crossed by chain edges, summed
};

struct ChainReport {
  std::vector<ChainRecord> chains;  // only runs with ell >= 1
  int max_ell = 0;
  std::vector<bool> hollow;         // per forest set index
  std::vector<int> owner_of_core;   // forest set index owning each core
};

ChainReport find_hollow_chains(const WitnessForest& wf,
                               const std::vector<VertexSet>& cores,
                               const Graph& g);

// Chain case rules, per chain (U = union of cores):
//   (a) a_1 in U implies ell = 1
//   (b) b_0 in U implies ell <= 2; at ell = 2, a_1 not in U and b_0, b_1, a_2
//       lie in one core
//   (c) b_1 in U implies ell <= 3; at ell = 3, a_1, b_0, a_2 not in U and
//       b_1, b_2, a_3 lie in one core
// plus ell <= 3, and the generalized end rules for every index i:
//   a_i in U (i >= 1) implies ell = i; b_{i-1} in U implies ell <= i+1 and at
//   ell = i+1 the triple b_{i-1}, b_i, a_{i+1} lies in one core.
// These conclusions are only guaranteed when every cover edge crosses some
// core; chains where that fails are flagged instead of counted as violations.
struct ChainLemmaResult {
  bool cases_pass = true;        // (a)(b)(c) and ell <= 3 over supported chains
  bool end_rules_pass = true;    // generalized index rules over supported chains
  bool all_chains_supported = true;  // every chain edge crosses some core
  long case_violation_count = 0;
  long end_rule_violation_count = 0;
  std::vector<std::string> violations;
  std::vector<std::string> unsupported_chains;  // diagnostics, not violations
  int max_ell_supported = 0;
  int max_ell_unsupported = 0;
};

ChainLemmaResult verify_chain_lemma(const ChainReport& report);

struct CoreDegreeResult {
  long lhs = 0;    // sum over cores of d_solution(core)
  long bound = 0;  // 5(2|C|-1), or 10(|C|-1) when symmetric
  bool pass = false;
  bool symmetric_used = false;
  std::vector<int> edges_covering_no_core;  // precondition diagnostics
};

CoreDegreeResult verify_core_degree_bound(const EdgeSet& solution,
                                          const std::vector<VertexSet>& cores,
                                          const Graph& g, bool symmetric);

struct TreeBoundResult {
  int edge_count = 0;       // after shortcutting maximal hollow chains
  int r_count = 0;          // non-hollow nodes
  bool root_multi_child = false;
  int bound = 0;            // 2|R|-1, or 2(|R|-1) with a multi-child root
  bool pass = false;
};

// Contracts every maximal hollow chain to a single tree edge and checks the
// edge count against the non-hollow node count.
TreeBoundResult verify_tree_edge_bound(const WitnessForest& wf,
                                       const std::vector<VertexSet>& cores,
                                       const Graph& g);

// Per-iteration snapshot verification: the family residual to the edges added
// before the iteration, covered by the surviving solution edges added at or
// after it.
struct SnapshotVerification {
  int iteration = 0;  // 1-based
  int core_count = 0;
  int cover_size = 0;
  bool minimal_cover_ok = false;
  bool witness_ok = false;       // built: laminar, bijective, witness property
  bool beta_monotone_ok = false; // every uncross step lowered beta
  bool hypothesis_ok = false;    // every surviving edge crosses some core
  CoreDegreeResult core_degree;
  ChainLemmaResult chain_lemma;
  TreeBoundResult tree_bound;
  bool child_gap_ok = false;     // hollow single-child S: no member in S∖child
  bool crossing_core_ok = false; // core reaching outside S_0 into S_i crosses S_i
  int max_ell = 0;
  std::string failure;           // non-empty when a stage could not run
};

// Violations broken out per check so callers can gate on each bound
// separately. Chain case and end rules count only chains whose edges all
// cross cores; everything else is unconditional.
struct ViolationCounts {
  long result_level = 0;   // dual feasibility, tightness, coverage, minimality,
                           // weak duality
  long minimal_cover = 0;  // snapshot survivors fail minimal-cover replay
  long witness = 0;        // witness family construction failed
  long beta = 0;           // an uncross step failed to lower the overlap count
  long degree = 0;         // core degree bound
  long chain_cases = 0;
  long chain_end_rules = 0;
  long tree = 0;
  long child_gap = 0;
  long crossing_core = 0;

  long total() const {
    return result_level + minimal_cover + witness + beta + degree +
           chain_cases + chain_end_rules + tree + child_gap + crossing_core;
  }
};

struct VerificationReport {
  std::vector<SnapshotVerification> snapshots;
  bool dual_feasible = false;
  bool solution_tight = false;
  bool coverage_ok = false;
  bool solution_minimal = false;
  std::optional<bool> weak_duality_ok;  // set when an exact optimum is supplied

  int snapshots_supported = 0;   // hypothesis_ok count
  int max_ell_supported = 0;
  int max_ell_unsupported = 0;
  ViolationCounts counts;

  long violation_count() const { return counts.total(); }
  bool all_pass() const { return counts.total() == 0; }
};

// Runs every structural check against a finished solve. `symmetric` marks the
// family as closed under complement (enables the tighter degree bound).
// `exact_opt` enables the weak-duality comparison.
VerificationReport verify_solve(const Graph& g, const FamilyOracle& oracle,
                                const SolveResult& result, bool symmetric,
                                const std::optional<Rational>& exact_opt = {});

}  // namespace pdcover
