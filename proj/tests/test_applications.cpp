#include <doctest.h>

#include "pdcover/applications.hpp"
#include "pdcover/baseline.hpp"
#include "pdcover/family.hpp"
#include "pdcover/generator.hpp"

using namespace pdcover;

namespace {

Graph cycle4_base() {
  Graph g(4);
  g.add_edge(0, 1, Rational(0));
  g.add_edge(1, 2, Rational(0));
  g.add_edge(2, 3, Rational(0));
  g.add_edge(3, 0, Rational(0));
  return g;
}

}  // namespace

TEST_CASE("4-cycle at k=3: twelve deficient sets, four singleton cores") {
  const NearMinCutsOracle oracle(cycle4_base(), 3);
  const auto members = oracle.enumerate_members();
  CHECK(members.size() == 12);
  // singletons, adjacent pairs and triples qualify; opposite pairs do not
  CHECK(oracle.is_member(VertexSet::of(4, {0})));
  CHECK(oracle.is_member(VertexSet::of(4, {0, 1})));
  CHECK(!oracle.is_member(VertexSet::of(4, {0, 2})));
  CHECK(oracle.is_member(VertexSet::of(4, {0, 1, 2})));

  Graph candidates(4);
  candidates.add_edge(0, 2, Rational(1));
  candidates.add_edge(1, 3, Rational(1));
  const auto cores = oracle.min_cores(EdgeSet(), candidates);
  REQUIRE(cores.size() == 4);
  for (int v = 0; v < 4; ++v) CHECK(cores[v] == VertexSet::of(4, {v}));
}

TEST_CASE("k=1 on a connected base graph leaves nothing deficient") {
  Graph path(3);
  path.add_edge(0, 1, Rational(0));
  path.add_edge(1, 2, Rational(0));
  const NearMinCutsOracle oracle(path, 1);
  CHECK(oracle.enumerate_members().empty());
}

TEST_CASE("complete base graph K4 at k=3 has no deficient set") {
  Graph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v, Rational(0));
  const NearMinCutsOracle oracle(k4, 3);
  CHECK(oracle.enumerate_members().empty());
}

TEST_CASE("oracle refuses oversized ground sets") {
  CHECK_THROWS_AS(NearMinCutsOracle(Graph(21), 1), CapacityError);
}

TEST_CASE("4-cycle with two diagonals: both are needed") {
  Graph candidates(4);
  candidates.add_edge(0, 2, Rational(1));
  candidates.add_edge(1, 3, Rational(1));
  const NearMinCutsInstance inst(cycle4_base(), std::move(candidates), 3);
  const SolveResult r = solve_near_min_cuts(inst);
  CHECK(r.solution == EdgeSet::of({0, 1}));
  CHECK(r.cost == 2);

  const NearMinCutsOracle oracle(inst.base, inst.k);
  const BaselineResult opt = optimal_cover(inst.candidates, oracle);
  REQUIRE(opt.feasible);
  CHECK(opt.opt_cost == 2);
  CHECK(r.cost <= Rational(10) * opt.opt_cost);
}

TEST_CASE("duplicated cycle edges as candidates stay within ratio 10") {
  Graph candidates(4);
  candidates.add_edge(0, 1, Rational(1));
  candidates.add_edge(1, 2, Rational(1));
  candidates.add_edge(2, 3, Rational(1));
  candidates.add_edge(3, 0, Rational(1));
  const NearMinCutsInstance inst(cycle4_base(), std::move(candidates), 3);
  const SolveResult r = solve_near_min_cuts(inst);

  const NearMinCutsOracle oracle(inst.base, inst.k);
  CHECK(oracle.min_cores(r.solution, inst.candidates).empty());
  const BaselineResult opt = optimal_cover(inst.candidates, oracle);
  REQUIRE(opt.feasible);
  CHECK(r.cost <= Rational(10) * opt.opt_cost);
  CHECK(r.dual_total <= opt.opt_cost);
}

TEST_CASE("empty deficient family solves to the empty set") {
  Graph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v, Rational(0));
  Graph candidates(4);
  candidates.add_edge(0, 1, Rational(1));
  const NearMinCutsInstance inst(std::move(k4), std::move(candidates), 3);
  const SolveResult r = solve_near_min_cuts(inst);
  CHECK(r.solution.empty());
  CHECK(r.cost == 0);
}

TEST_CASE("path base at k=2, one candidate across") {
  Graph path(3);
  path.add_edge(0, 1, Rational(0));
  path.add_edge(1, 2, Rational(0));
  Graph candidates(3);
  candidates.add_edge(0, 2, Rational(1));
  const NearMinCutsInstance inst(std::move(path), std::move(candidates), 2);

  const NearMinCutsOracle oracle(inst.base, inst.k);
  const auto cores = oracle.min_cores(EdgeSet(), inst.candidates);
  REQUIRE(cores.size() == 2);
  CHECK(cores[0] == VertexSet::of(3, {0}));
  CHECK(cores[1] == VertexSet::of(3, {2}));

  const SolveResult r = solve_near_min_cuts(inst);
  CHECK(r.solution == EdgeSet::of({0}));
  CHECK(r.cost == 1);
}

TEST_CASE("infeasible deficient cut is reported with the cut") {
  Graph base(4);
  base.add_edge(0, 1, Rational(0));
  Graph candidates(4);
  candidates.add_edge(0, 1, Rational(1));
  const NearMinCutsInstance inst(std::move(base), std::move(candidates), 1);
  CHECK_THROWS_AS(solve_near_min_cuts(inst), InfeasibleError);
}

TEST_CASE("capacitated solve: three parallel edges, k=2, two rounds") {
  Graph g(2);
  g.add_edge(0, 1, Rational(1), 1);
  g.add_edge(0, 1, Rational(1), 1);
  g.add_edge(0, 1, Rational(1), 1);
  const CapKecssInstance inst(std::move(g), 2);
  CHECK(inst.min_capacity() == 1);
  CHECK(inst.max_rounds() == 2);

  const CapKecssResult r = solve_cap_kecss(inst);
  CHECK(r.rounds.size() == 2);
  CHECK(r.selected.count() == 2);
  CHECK(r.cost == 2);
  CHECK(min_capacitated_cut(inst.g, r.selected) >= 2);

  const BaselineResult opt = optimal_cap_kecss(inst);
  REQUIRE(opt.feasible);
  CHECK(opt.opt_cost == 2);
}

TEST_CASE("k at most u_min reduces to a single round") {
  Graph g(3);
  g.add_edge(0, 1, Rational(1), 2);
  g.add_edge(1, 2, Rational(1), 2);
  g.add_edge(0, 2, Rational(1), 2);
  const CapKecssInstance inst(std::move(g), 2);
  CHECK(inst.max_rounds() == 1);
  const CapKecssResult r = solve_cap_kecss(inst);
  CHECK(r.rounds.size() == 1);
  CHECK(min_capacitated_cut(inst.g, r.selected) >= 2);
}

TEST_CASE("cycle edges capacity 1 plus diagonals capacity 2, k=2") {
  Graph g(4);
  g.add_edge(0, 1, Rational(1), 1);
  g.add_edge(1, 2, Rational(1), 1);
  g.add_edge(2, 3, Rational(1), 1);
  g.add_edge(3, 0, Rational(1), 1);
  g.add_edge(0, 2, Rational(1), 2);
  g.add_edge(1, 3, Rational(1), 2);
  const CapKecssInstance inst(std::move(g), 2);

  const CapKecssResult r = solve_cap_kecss(inst);
  CHECK(min_capacitated_cut(inst.g, r.selected) >= 2);

  const BaselineResult opt = optimal_cap_kecss(inst);
  REQUIRE(opt.feasible);
  CHECK(r.cost <= Rational(10) * Rational(inst.max_rounds()) * opt.opt_cost);
}

TEST_CASE("capacitated infeasibility names a cut") {
  Graph g(3);
  g.add_edge(0, 1, Rational(1), 1);
  const CapKecssInstance inst(std::move(g), 1);
  CHECK_THROWS_AS(solve_cap_kecss(inst), InfeasibleError);
}

TEST_CASE("deficient families are pliable and symmetric on random instances") {
  int checked = 0;
  for (std::uint64_t seed = 600; seed < 640 && checked < 12; ++seed) {
    Rng rng(seed);
    NmcGenParams params;
    params.n_max = 6;
    auto inst = generate_nmc_instance(rng, params);
    if (!inst) continue;
    const NearMinCutsOracle oracle(inst->base, inst->k);
    const auto members = oracle.enumerate_members();
    if (members.empty()) continue;
    ExplicitFamily fam(inst->base.vertex_count(), members);
    const FamilyClass cls = classify(fam);
    CHECK(cls.pliable);
    CHECK(cls.symmetric);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("round families stay pliable along the capacitated reduction") {
  int checked = 0;
  for (std::uint64_t seed = 700; seed < 740 && checked < 8; ++seed) {
    Rng rng(seed);
    CapKGenParams params;
    auto inst = generate_capk_instance(rng, params);
    if (!inst) continue;
    const CapKecssResult r = solve_cap_kecss(*inst);
    CHECK(static_cast<int>(r.rounds.size()) <= inst->max_rounds());
    CHECK(min_capacitated_cut(inst->g, r.selected) >= inst->k);

    EdgeSet selected;
    for (const SolveResult& round : r.rounds) {
      CapResidualOracle oracle(inst->g, selected, inst->k);
      ExplicitFamily fam(inst->g.vertex_count());
      const std::uint64_t full = VertexSet::mask(inst->g.vertex_count());
      for (std::uint64_t bits = 1; bits < full; ++bits) {
        const VertexSet s(inst->g.vertex_count(), bits);
        if (oracle.is_member(s)) fam.add(s);
      }
      if (fam.size() > 0) {
        const FamilyClass cls = classify(fam);
        CHECK(cls.pliable);
        CHECK(cls.symmetric);
      }
      // rebuild the selection the same way the reduction does
      Graph pool(inst->g.vertex_count());
      std::vector<int> pool_to_g;
      for (const Edge& e : inst->g.edges())
        if (!selected.contains(e.id)) {
          pool.add_edge(e.u, e.v, e.cost, e.capacity);
          pool_to_g.push_back(e.id);
        }
      for (int pe : round.solution.ids())
        selected = selected.with(pool_to_g[pe]);
    }
    CHECK(selected == r.selected);
    ++checked;
  }
  CHECK(checked > 0);
}
