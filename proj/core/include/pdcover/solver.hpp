#pragma once

#include <map>
#include <vector>

#include "pdcover/family.hpp"
#include "pdcover/graph.hpp"

namespace pdcover {

// Sparse dual assignment plus per-edge slack c_e - sum of duals loading e.
// Feasibility (slack_e >= 0 for every edge) is maintained exactly.
struct DualState {
  std::map<VertexSet, Rational> y;  // only sets raised by a positive amount
  std::vector<Rational> slack;      // indexed by edge id

  Rational total() const {
    Rational t = 0;
    for (const auto& [s, v] : y) t += v;
    return t;
  }
};

struct IterationRecord {
  int index = 0;                  // 1-based
  std::vector<VertexSet> cores;   // residual cores at the start, nonempty
  Rational epsilon;               // uniform raise amount, >= 0
  int added_edge = -1;
};

struct Phase1Result {
  std::vector<int> edges;  // in addition order
  DualState duals;
  std::vector<IterationRecord> iterations;
};

struct SolveResult {
  EdgeSet solution;                     // after reverse delete
  std::vector<int> phase1_edges;        // addition order
  DualState duals;
  std::vector<IterationRecord> iterations;
  Rational cost;        // of solution
  Rational dual_total;  // sum of duals; lower bound on any feasible cover

  // Solution edges in addition order (phase1_edges filtered to survivors).
  std::vector<int> solution_in_addition_order() const;
};

// Uniform dual raising on the residual cores until some unused edge goes
// tight (possibly a zero raise); the tight edge with the smallest id is
// added. Stops when no cores remain. Throws InfeasibleError naming a core
// that no edge of the graph crosses.
Phase1Result phase1(const Graph& g, const FamilyOracle& oracle);

// Scans phase1 edges in exact reverse addition order and drops an edge iff
// the remainder still covers the family. Returns an inclusion-minimal cover.
EdgeSet phase2_reverse_delete(const Graph& g, const FamilyOracle& oracle,
                              const std::vector<int>& phase1_edges);

// phase1 + phase2, with coverage, tightness and dual feasibility checked.
SolveResult solve(const Graph& g, const FamilyOracle& oracle);

}  // namespace pdcover
