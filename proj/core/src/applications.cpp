#include "pdcover/applications.hpp"

#include <algorithm>

#include "pdcover/errors.hpp"

namespace pdcover {

NearMinCutsInstance::NearMinCutsInstance(Graph base_graph,
                                         Graph candidate_graph, int threshold)
    : base(std::move(base_graph)),
      candidates(std::move(candidate_graph)),
      k(threshold) {
  if (base.vertex_count() != candidates.vertex_count())
    throw InputDomainError("base and candidate graphs differ in vertex count");
  if (k < 1) throw InputDomainError("threshold k must be positive");
}

NearMinCutsOracle::NearMinCutsOracle(const Graph& base, int k)
    : base_(base), k_(k) {
  if (base_.vertex_count() > kEnumerationOracleMaxVertices)
    throw CapacityError("enumeration oracle limited to " +
                        std::to_string(kEnumerationOracleMaxVertices) +
                        " vertices (got " +
                        std::to_string(base_.vertex_count()) + ")");
  if (k < 1) throw InputDomainError("threshold k must be positive");
}

bool NearMinCutsOracle::is_member(const VertexSet& s) const {
  if (s.ground_size() != base_.vertex_count())
    throw InputDomainError("set over a different ground set");
  if (s.empty() || s.is_full()) return false;
  return cut_degree(base_.all_edges(), s, base_) < k_;
}

std::vector<VertexSet> NearMinCutsOracle::min_cores(const EdgeSet& i,
                                                    const Graph& g) const {
  auto cores = min_cores_by_enumeration(
      base_.vertex_count(), [this](const VertexSet& s) { return is_member(s); },
      i, g, kEnumerationOracleMaxVertices);
  require_pairwise_disjoint(cores, "near-min-cuts cores");
  return cores;
}

std::vector<VertexSet> NearMinCutsOracle::enumerate_members() const {
  const int n = base_.vertex_count();
  std::vector<VertexSet> out;
  const std::uint64_t full = VertexSet::mask(n);
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    const VertexSet s(n, bits);
    if (is_member(s)) out.push_back(s);
  }
  return out;
}

NearMinCutsOracle near_min_cuts_oracle(const NearMinCutsInstance& inst) {
  return NearMinCutsOracle(inst.base, inst.k);
}

SolveResult solve_near_min_cuts(const NearMinCutsInstance& inst) {
  NearMinCutsOracle oracle(inst.base, inst.k);
  return solve(inst.candidates, oracle);
}

CapKecssInstance::CapKecssInstance(Graph graph, int threshold)
    : g(std::move(graph)), k(threshold) {
  if (k < 0) throw InputDomainError("threshold k must be non-negative");
}

std::int64_t CapKecssInstance::min_capacity() const {
  std::int64_t u_min = 0;
  for (const Edge& e : g.edges())
    u_min = (u_min == 0) ? e.capacity : std::min(u_min, e.capacity);
  return u_min;
}

int CapKecssInstance::max_rounds() const {
  const std::int64_t u_min = min_capacity();
  if (u_min <= 0) return 0;
  return static_cast<int>((k + u_min - 1) / u_min);
}

CapResidualOracle::CapResidualOracle(const Graph& g, EdgeSet selected, int k)
    : g_(g), selected_(selected), k_(k) {
  if (g.vertex_count() > kEnumerationOracleMaxVertices)
    throw CapacityError("enumeration oracle limited to " +
                        std::to_string(kEnumerationOracleMaxVertices) +
                        " vertices (got " + std::to_string(g.vertex_count()) +
                        ")");
}

bool CapResidualOracle::is_member(const VertexSet& s) const {
  if (s.empty() || s.is_full()) return false;
  return cut_capacity(selected_, s, g_) < k_;
}

std::vector<VertexSet> CapResidualOracle::min_cores(const EdgeSet& i,
                                                    const Graph& g) const {
  auto cores = min_cores_by_enumeration(
      g_.vertex_count(), [this](const VertexSet& s) { return is_member(s); },
      i, g, kEnumerationOracleMaxVertices);
  require_pairwise_disjoint(cores, "capacitated round cores");
  return cores;
}

std::int64_t min_capacitated_cut(const Graph& g, const EdgeSet& j) {
  const int n = g.vertex_count();
  if (n > kEnumerationOracleMaxVertices)
    throw CapacityError("exhaustive cut scan limited to " +
                        std::to_string(kEnumerationOracleMaxVertices) +
                        " vertices");
  if (n < 2) return 0;
  std::int64_t best = -1;
  const std::uint64_t full = VertexSet::mask(n);
  for (std::uint64_t bits = 1; bits < full; bits += 2) {
    const std::int64_t cap = cut_capacity(j, VertexSet(n, bits), g);
    if (best < 0 || cap < best) best = cap;
  }
  return best < 0 ? 0 : best;
}

CapKecssResult solve_cap_kecss(const CapKecssInstance& inst) {
  if (inst.k < 1) throw InputDomainError("threshold k must be positive");
  const Graph& g = inst.g;
  const int n = g.vertex_count();

  // Feasibility up front: even taking everything must reach k on every cut.
  const std::uint64_t full_vs = VertexSet::mask(n);
  for (std::uint64_t bits = 1; bits < full_vs; bits += 2) {
    const VertexSet s(n, bits);
    if (cut_capacity(g.all_edges(), s, g) < inst.k)
      throw InfeasibleError(
          "full edge set leaves the cut at " + s.to_string() + " below k",
          s.bits(), n);
  }

  CapKecssResult result;
  result.cost = 0;
  const int bound = inst.max_rounds();
  const std::int64_t u_min = inst.min_capacity();
  std::int64_t min_cut = min_capacitated_cut(g, result.selected);
  while (min_cut < inst.k) {
    // Bought edges leave the pool; their capacity is already counted by the
    // round oracle through `selected`.
    Graph pool(n);
    std::vector<int> pool_to_g;
    for (const Edge& e : g.edges()) {
      if (result.selected.contains(e.id)) continue;
      pool.add_edge(e.u, e.v, e.cost, e.capacity);
      pool_to_g.push_back(e.id);
    }

    CapResidualOracle oracle(g, result.selected, inst.k);
    SolveResult round = solve(pool, oracle);
    for (int pe : round.solution.ids()) {
      result.selected = result.selected.with(pool_to_g[pe]);
      result.cost += g.edge(pool_to_g[pe]).cost;
    }
    result.rounds.push_back(std::move(round));

    // Every deficient cut gains an edge, so the minimum lifts by >= u_min;
    // this is what bounds the round count.
    const std::int64_t lifted = min_capacitated_cut(g, result.selected);
    PDCOVER_CHECK(lifted >= std::min<std::int64_t>(inst.k, min_cut + u_min),
                  "round lifts the minimum capacitated cut by u_min");
    min_cut = lifted;
    PDCOVER_CHECK(static_cast<int>(result.rounds.size()) <= bound,
                  "round count within ceil(k/u_min)");
  }
  return result;
}

}  // namespace pdcover
