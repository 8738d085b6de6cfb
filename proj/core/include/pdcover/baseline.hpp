#pragma once

#include "pdcover/family.hpp"
#include "pdcover/graph.hpp"

namespace pdcover {

struct CapKecssInstance;  // applications.hpp

struct BaselineResult {
  bool feasible = false;
  Rational opt_cost;  // valid only when feasible
  EdgeSet opt_set;    // lexicographically least optimal edge-id set
};

inline constexpr int kBaselineMaxEdges = 22;
inline constexpr int kBaselineMaxVertices = 20;

// Exact minimum-cost cover by branch and bound over edge subsets. Coverage is
// evaluated directly against the enumerated member list (via is_member), a
// code path independent of the oracle's min_cores. Ties in cost are broken
// toward the lexicographically least sorted edge-id sequence.
BaselineResult optimal_cover(const Graph& g, const FamilyOracle& oracle);

// Exact minimum-cost J with capacitated cut value >= k on every proper
// nonempty vertex set.
BaselineResult optimal_cap_kecss(const CapKecssInstance& inst);

}  // namespace pdcover
