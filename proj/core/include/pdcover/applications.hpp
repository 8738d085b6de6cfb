#pragma once

#include <vector>

#include "pdcover/baseline.hpp"
#include "pdcover/family.hpp"
#include "pdcover/graph.hpp"
#include "pdcover/solver.hpp"

namespace pdcover {

inline constexpr int kEnumerationOracleMaxVertices = 20;

// Deficient-cut covering: buy candidate edges so that every vertex set whose
// cut degree in the fixed base graph is below k gains at least one edge.
struct NearMinCutsInstance {
  Graph base;        // costs ignored
  Graph candidates;  // edge set available for purchase
  int k = 1;

  NearMinCutsInstance(Graph base_graph, Graph candidate_graph, int threshold);
};

// Enumeration-backed oracle for {S : 0 < |S| < n, d_base(S) < k}. Membership
// is O(|E0|); min_cores scans subsets by ascending popcount with minimality
// pruning. Requires n <= kEnumerationOracleMaxVertices.
class NearMinCutsOracle : public FamilyOracle {
 public:
  NearMinCutsOracle(const Graph& base, int k);

  int ground_set_size() const override { return base_.vertex_count(); }
  bool is_member(const VertexSet& s) const override;
  std::vector<VertexSet> min_cores(const EdgeSet& i,
                                   const Graph& g) const override;

  int threshold() const { return k_; }
  // All members, ascending bitmask. 2^n scan; intended for desk-scale stats.
  std::vector<VertexSet> enumerate_members() const;

 private:
  Graph base_;
  int k_;
};

NearMinCutsOracle near_min_cuts_oracle(const NearMinCutsInstance& inst);

SolveResult solve_near_min_cuts(const NearMinCutsInstance& inst);

// Capacitated k-connectivity: pick edges so every cut carries total capacity
// at least k.
struct CapKecssInstance {
  Graph g;
  int k = 1;

  CapKecssInstance(Graph graph, int threshold);

  std::int64_t min_capacity() const;  // u_min over edges
  int max_rounds() const;             // ceil(k / u_min)
};

// Round family {S : u(δ_J(S)) < k} for the accumulated selection J.
// Pliable by submodularity of the capacitated cut function, and symmetric.
class CapResidualOracle : public FamilyOracle {
 public:
  CapResidualOracle(const Graph& g, EdgeSet selected, int k);

  int ground_set_size() const override { return g_.vertex_count(); }
  bool is_member(const VertexSet& s) const override;
  std::vector<VertexSet> min_cores(const EdgeSet& i,
                                   const Graph& g) const override;

 private:
  const Graph& g_;
  EdgeSet selected_;
  int k_;
};

struct CapKecssResult {
  EdgeSet selected;
  std::vector<SolveResult> rounds;
  Rational cost;
};

// Iterative reduction: each round covers the current deficient-cut family
// with the unused edges and adds the round's solution to J; every round lifts
// the minimum capacitated cut by at least u_min, so there are at most
// ceil(k/u_min) rounds. Throws InfeasibleError naming a deficient cut when
// even the full edge set cannot reach k.
CapKecssResult solve_cap_kecss(const CapKecssInstance& inst);

// Minimum over all proper nonempty S of u(δ_J(S)). Exhaustive over 2^(n-1)
// cuts; n <= kEnumerationOracleMaxVertices.
std::int64_t min_capacitated_cut(const Graph& g, const EdgeSet& j);

}  // namespace pdcover
