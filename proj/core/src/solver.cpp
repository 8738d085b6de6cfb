#include "pdcover/solver.hpp"

#include <algorithm>

#include "pdcover/errors.hpp"

namespace pdcover {

std::vector<int> SolveResult::solution_in_addition_order() const {
  std::vector<int> out;
  for (int e : phase1_edges)
    if (solution.contains(e)) out.push_back(e);
  return out;
}

Phase1Result phase1(const Graph& g, const FamilyOracle& oracle) {
  if (oracle.ground_set_size() != g.vertex_count())
    throw InputDomainError("oracle ground set does not match graph");

  Phase1Result res;
  res.duals.slack.reserve(g.edge_count());
  for (const Edge& e : g.edges()) res.duals.slack.push_back(e.cost);

  EdgeSet in_solution;
  const EdgeSet all = g.all_edges();
  int iteration = 0;

  while (true) {
    const std::vector<VertexSet> cores = oracle.min_cores(in_solution, g);
    if (cores.empty()) break;
    ++iteration;

    // A core none of the graph's edges can ever cross stays uncovered forever.
    for (const auto& c : cores)
      if (delta(all, c, g).empty())
        throw InfeasibleError(
            "no edge of the graph crosses the uncovered set " + c.to_string(),
            c.bits(), g.vertex_count());

    // Load multiplicity per unused edge: the number of cores it crosses.
    std::vector<int> mult(g.edge_count(), 0);
    for (const auto& c : cores)
      for (int e : delta(all.minus(in_solution), c, g).ids()) ++mult[e];

    int chosen = -1;
    Rational eps;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (mult[e] == 0 || in_solution.contains(e)) continue;
      Rational candidate = res.duals.slack[e] / mult[e];
      if (chosen == -1 || candidate < eps) {
        chosen = e;
        eps = candidate;
      }
    }
    PDCOVER_CHECK(chosen != -1, "some core has a crossing edge");

    for (const auto& c : cores) {
      if (eps > 0) res.duals.y[c] += eps;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      if (mult[e] == 0) continue;
      res.duals.slack[e] -= eps * mult[e];
      PDCOVER_CHECK(res.duals.slack[e] >= 0, "dual feasibility");
    }
    PDCOVER_CHECK(res.duals.slack[chosen] == 0, "added edge is tight");

    IterationRecord rec;
    rec.index = iteration;
    rec.cores = cores;
    rec.epsilon = eps;
    rec.added_edge = chosen;
    res.iterations.push_back(std::move(rec));

    res.edges.push_back(chosen);
    in_solution = in_solution.with(chosen);
    PDCOVER_CHECK(iteration <= g.edge_count(), "one edge added per iteration");
  }
  return res;
}

EdgeSet phase2_reverse_delete(const Graph& g, const FamilyOracle& oracle,
                              const std::vector<int>& phase1_edges) {
  EdgeSet keep = EdgeSet::from_ids(phase1_edges);
  PDCOVER_CHECK(oracle.covers_family(keep, g),
                "reverse delete requires a covering edge set");
  for (auto it = phase1_edges.rbegin(); it != phase1_edges.rend(); ++it) {
    const EdgeSet without = keep.without(*it);
    if (oracle.covers_family(without, g)) keep = without;
  }
  return keep;
}

SolveResult solve(const Graph& g, const FamilyOracle& oracle) {
  Phase1Result p1 = phase1(g, oracle);
  SolveResult res;
  res.solution = phase2_reverse_delete(g, oracle, p1.edges);
  res.phase1_edges = std::move(p1.edges);
  res.duals = std::move(p1.duals);
  res.iterations = std::move(p1.iterations);
  res.dual_total = res.duals.total();
  res.cost = 0;
  for (int e : res.solution.ids()) {
    res.cost += g.edge(e).cost;
    PDCOVER_CHECK(res.duals.slack[e] == 0, "solution edges are tight");
  }
  PDCOVER_CHECK(oracle.covers_family(res.solution, g),
                "solution covers the family");
  return res;
}

}  // namespace pdcover
