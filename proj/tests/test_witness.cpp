#include <doctest.h>

#include "pdcover/baseline.hpp"
#include "pdcover/generator.hpp"
#include "pdcover/solver.hpp"
#include "pdcover/witness.hpp"

using namespace pdcover;

namespace {

Graph triangle() {
  Graph g(3);
  g.add_edge(0, 1, Rational(1));
  g.add_edge(1, 2, Rational(1));
  g.add_edge(0, 2, Rational(1));
  return g;
}

ExplicitFamilyOracle singletons3() {
  ExplicitFamily fam(3);
  fam.add(VertexSet::of(3, {0}));
  fam.add(VertexSet::of(3, {1}));
  fam.add(VertexSet::of(3, {2}));
  return ExplicitFamilyOracle(std::move(fam), true);
}

// Nested member chain: every member's unique covering edge is the next path
// edge, which touches no core, so the hollow chain grows past every case
// bound. The chain checks must classify it as outside the hypothesis (its
// edges cross no core) rather than as a violation.
struct NestedInstance {
  Graph g{6};
  ExplicitFamily fam{6};
  NestedInstance() {
    g.add_edge(0, 1, Rational(1));
    g.add_edge(1, 2, Rational(1));
    g.add_edge(2, 3, Rational(1));
    g.add_edge(3, 4, Rational(1));
    g.add_edge(4, 5, Rational(1));
    fam.add(VertexSet::of(6, {0}));
    fam.add(VertexSet::of(6, {0, 1}));
    fam.add(VertexSet::of(6, {0, 1, 2}));
    fam.add(VertexSet::of(6, {0, 1, 2, 3}));
    fam.add(VertexSet::of(6, {0, 1, 2, 3, 4}));
  }
};

// Hand-built supported length-1 chain: {0,1} is hollow, its covering edge
// (1,2) ends in the core {2}.
struct SupportedChainInstance {
  Graph g{4};
  ExplicitFamily fam{4};
  SupportedChainInstance() {
    g.add_edge(0, 1, Rational(1));
    g.add_edge(2, 3, Rational(2));
    g.add_edge(1, 2, Rational(1));
    fam.add(VertexSet::of(4, {0}));
    fam.add(VertexSet::of(4, {2}));
    fam.add(VertexSet::of(4, {0, 1}));
  }
};

}  // namespace

TEST_CASE("triangle witnesses are the two endpoint cores") {
  const Graph g = triangle();
  const auto oracle = singletons3();
  const WitnessBuildResult wb = build_witness_forest(g, oracle, {0, 1});
  CHECK(wb.steps.empty());
  REQUIRE(wb.forest.size() == 3);
  CHECK(wb.forest.sets[wb.forest.set_of_edge.at(0)] == VertexSet::of(3, {0}));
  CHECK(wb.forest.sets[wb.forest.set_of_edge.at(1)] == VertexSet::of(3, {2}));
  CHECK(wb.forest.sets[wb.forest.root] == VertexSet::full_set(3));
  CHECK(wb.forest.children[wb.forest.root].size() == 2);
}

TEST_CASE("a single-edge cover has a single trivially laminar witness") {
  Graph g(2);
  g.add_edge(0, 1, Rational(1));
  ExplicitFamily fam(2);
  fam.add(VertexSet::of(2, {0}));
  const ExplicitFamilyOracle oracle(std::move(fam), true);
  const WitnessBuildResult wb = build_witness_forest(g, oracle, {0});
  CHECK(wb.forest.size() == 2);
  CHECK(wb.steps.empty());
}

TEST_CASE("non-minimal covers are rejected with the offending edge") {
  const Graph g = triangle();
  const auto oracle = singletons3();
  CHECK_THROWS_WITH_AS(build_witness_forest(g, oracle, {0, 1, 2}),
                       doctest::Contains("not inclusion-minimal"), Error);
}

TEST_CASE("one uncrossing step fixes a constructed overlapping pair") {
  // I = {(0,3), (2,3)}; {0,1} and {1,2} are valid witnesses but overlap.
  Graph g(4);
  g.add_edge(0, 3, Rational(1));
  g.add_edge(2, 3, Rational(1));
  ExplicitFamily fam(4);
  fam.add(VertexSet::of(4, {0, 1}));
  fam.add(VertexSet::of(4, {1, 2}));
  fam.add(VertexSet::of(4, {0}));
  fam.add(VertexSet::of(4, {2}));
  REQUIRE(classify(fam).pliable);
  const ExplicitFamilyOracle oracle(std::move(fam), true);
  const EdgeSet cover = EdgeSet::of({0, 1});

  std::vector<WitnessAssignment> initial{
      {0, VertexSet::of(4, {0, 1})},
      {1, VertexSet::of(4, {1, 2})},
  };
  CHECK(beta_of(initial) == 2);

  const UncrossResult ur =
      uncross_witness_family(g, oracle, cover, std::move(initial));
  REQUIRE(ur.steps.size() == 1);
  // Replacement candidates are {0} (for edge 0) and {2} (for edge 1); the
  // smaller bitmask wins.
  CHECK(ur.steps[0].edge == 0);
  CHECK(ur.steps[0].before == VertexSet::of(4, {0, 1}));
  CHECK(ur.steps[0].after == VertexSet::of(4, {0}));
  CHECK(ur.steps[0].beta_after < ur.steps[0].beta_before);
  CHECK(beta_of(ur.assignments) == 0);
}

TEST_CASE("forest with no hollow sets yields no chains") {
  const Graph g = triangle();
  const auto oracle = singletons3();
  const WitnessBuildResult wb = build_witness_forest(g, oracle, {0, 1});
  const std::vector<VertexSet> cores{VertexSet::of(3, {0}),
                                     VertexSet::of(3, {1}),
                                     VertexSet::of(3, {2})};
  const ChainReport report = find_hollow_chains(wb.forest, cores, g);
  CHECK(report.chains.empty());
  CHECK(report.max_ell == 0);
  const ChainLemmaResult lemma = verify_chain_lemma(report);
  CHECK(lemma.cases_pass);
  CHECK(lemma.violations.empty());
}

TEST_CASE("supported length-1 chain passes every case rule") {
  SupportedChainInstance inst;
  const ExplicitFamilyOracle oracle(inst.fam, true);
  const SolveResult r = solve(inst.g, oracle);
  CHECK(r.solution == EdgeSet::of({0, 2}));

  const auto cores = oracle.min_cores(EdgeSet(), inst.g);
  REQUIRE(cores.size() == 2);  // {0} and {2}

  const WitnessBuildResult wb =
      build_witness_forest(inst.g, oracle, r.solution_in_addition_order());
  const ChainReport report = find_hollow_chains(wb.forest, cores, inst.g);
  REQUIRE(report.chains.size() == 1);
  CHECK(report.chains[0].ell == 1);
  // the chain edge (1,2) ends in the core {2}
  CHECK(report.chains[0].b_core[1] >= 0);
  CHECK(report.chains[0].a_core[1] == -1);

  const ChainLemmaResult lemma = verify_chain_lemma(report);
  CHECK(lemma.all_chains_supported);
  CHECK(lemma.cases_pass);
  CHECK(lemma.end_rules_pass);
  CHECK(lemma.max_ell_supported == 1);
}

TEST_CASE("nested chain instance: long chain sits outside the hypothesis") {
  NestedInstance inst;
  REQUIRE(classify(inst.fam).uncrossable);  // nested families uncross freely
  const ExplicitFamilyOracle oracle(inst.fam, true);
  const SolveResult r = solve(inst.g, oracle);
  CHECK(r.solution.count() == 5);

  const VerificationReport rep =
      verify_solve(inst.g, oracle, r, /*symmetric=*/false);
  CHECK(rep.violation_count() == 0);
  CHECK(rep.max_ell_unsupported == 4);
  CHECK(rep.max_ell_supported == 0);
  CHECK(rep.snapshots.size() == 5);
  // first snapshot: only the path edge at the bottom crosses the core {0}
  CHECK(!rep.snapshots[0].hypothesis_ok);
}

TEST_CASE("supported length-2 chain: the end-of-chain triple shares a core") {
  // Nested witnesses {0} c {0,1,5} c {0,1,2,5} with covering edges
  // (0,1), (5,2), (2,4); the core {1,2,3} catches b_0, b_1 and a_2.
  Graph g(6);
  g.add_edge(0, 1, Rational(1));
  g.add_edge(5, 2, Rational(1));
  g.add_edge(2, 4, Rational(1));
  ExplicitFamily fam(6);
  fam.add(VertexSet::of(6, {0}));
  fam.add(VertexSet::of(6, {0, 5}));
  fam.add(VertexSet::of(6, {0, 1, 5}));
  fam.add(VertexSet::of(6, {0, 1, 2, 5}));
  fam.add(VertexSet::of(6, {0, 1, 2, 3, 5}));
  fam.add(VertexSet::of(6, {1, 2, 3}));
  REQUIRE(classify(fam).pliable);
  const ExplicitFamilyOracle oracle(std::move(fam), true);

  const auto cores = oracle.min_cores(EdgeSet(), g);
  REQUIRE(cores.size() == 2);
  CHECK(cores[0] == VertexSet::of(6, {0}));
  CHECK(cores[1] == VertexSet::of(6, {1, 2, 3}));

  const WitnessBuildResult wb = build_witness_forest(g, oracle, {0, 1, 2});
  const ChainReport report = find_hollow_chains(wb.forest, cores, g);
  REQUIRE(report.chains.size() == 1);
  const ChainRecord& chain = report.chains[0];
  CHECK(chain.ell == 2);
  CHECK(chain.b_core[0] == 1);
  CHECK(chain.b_core[1] == 1);
  CHECK(chain.a_core[2] == 1);
  CHECK(chain.a_core[1] == -1);

  const ChainLemmaResult lemma = verify_chain_lemma(report);
  CHECK(lemma.all_chains_supported);
  CHECK(lemma.cases_pass);
  CHECK(lemma.end_rules_pass);
  CHECK(lemma.max_ell_supported == 2);
}

TEST_CASE("core degree bound on the triangle solution") {
  const Graph g = triangle();
  const std::vector<VertexSet> cores{VertexSet::of(3, {0}),
                                     VertexSet::of(3, {1}),
                                     VertexSet::of(3, {2})};
  const CoreDegreeResult r =
      verify_core_degree_bound(EdgeSet::of({0, 1}), cores, g, false);
  CHECK(r.lhs == 4);  // 1 + 2 + 1
  CHECK(r.bound == 25);
  CHECK(r.pass);
  CHECK(r.edges_covering_no_core.empty());
}

TEST_CASE("core degree bound, single core and single edge") {
  Graph g(2);
  g.add_edge(0, 1, Rational(1));
  const std::vector<VertexSet> cores{VertexSet::of(2, {0})};
  const CoreDegreeResult r =
      verify_core_degree_bound(EdgeSet::of({0}), cores, g, false);
  CHECK(r.lhs == 1);
  CHECK(r.bound == 5);
  CHECK(r.pass);
}

TEST_CASE("core degree diagnostics list edges touching no core") {
  Graph g(4);
  g.add_edge(0, 1, Rational(1));
  g.add_edge(2, 3, Rational(1));
  const std::vector<VertexSet> cores{VertexSet::of(4, {0})};
  const CoreDegreeResult r =
      verify_core_degree_bound(EdgeSet::of({0, 1}), cores, g, false);
  CHECK(r.edges_covering_no_core == std::vector<int>{1});
}

TEST_CASE("tree edge bound on a star of cores") {
  const Graph g = triangle();
  const auto oracle = singletons3();
  const WitnessBuildResult wb = build_witness_forest(g, oracle, {0, 1});
  const std::vector<VertexSet> cores{VertexSet::of(3, {0}),
                                     VertexSet::of(3, {1}),
                                     VertexSet::of(3, {2})};
  const TreeBoundResult r = verify_tree_edge_bound(wb.forest, cores, g);
  CHECK(r.edge_count == 2);
  CHECK(r.r_count == 3);  // both leaves own cores; the root owns {1}
  CHECK(r.root_multi_child);
  CHECK(r.bound == 4);
  CHECK(r.pass);
}

TEST_CASE("tree edge bound after shortcutting the nested chain") {
  NestedInstance inst;
  const ExplicitFamilyOracle oracle(inst.fam, true);
  const SolveResult r = solve(inst.g, oracle);
  const WitnessBuildResult wb =
      build_witness_forest(inst.g, oracle, r.solution_in_addition_order());
  const auto cores = oracle.min_cores(EdgeSet(), inst.g);  // just {0}
  REQUIRE(cores.size() == 1);
  const TreeBoundResult t = verify_tree_edge_bound(wb.forest, cores, inst.g);
  // the whole hollow run contracts to one edge: {0} -> root
  CHECK(t.edge_count == 1);
  CHECK(t.r_count == 1);
  CHECK(!t.root_multi_child);
  CHECK(t.bound == 1);
  CHECK(t.pass);
}

TEST_CASE("full verification of the triangle run") {
  const Graph g = triangle();
  const auto oracle = singletons3();
  const SolveResult r = solve(g, oracle);
  const BaselineResult opt = optimal_cover(g, oracle);
  const VerificationReport rep =
      verify_solve(g, oracle, r, /*symmetric=*/false, opt.opt_cost);
  CHECK(rep.violation_count() == 0);
  CHECK(rep.dual_feasible);
  CHECK(rep.solution_tight);
  CHECK(rep.coverage_ok);
  CHECK(rep.solution_minimal);
  REQUIRE(rep.weak_duality_ok.has_value());
  CHECK(*rep.weak_duality_ok);
  CHECK(rep.snapshots.size() == 2);
  CHECK(rep.snapshots_supported == 2);
}

TEST_CASE("random pliable instances verify cleanly when gamma holds") {
  int verified = 0;
  for (std::uint64_t seed = 900; seed < 960 && verified < 25; ++seed) {
    Rng rng(seed);
    ExplicitGenParams params;
    params.n_max = 6;
    params.m_max = 10;
    auto inst = generate_explicit_instance(rng, params, FamilyKind::kPliable);
    if (!inst) continue;
    const FamilyClass cls = classify(inst->fam);
    const bool gamma =
        cls.gamma_pliable ||
        check_gamma(inst->fam, inst->g, GammaMode::kExhaustive).holds;
    if (!gamma) continue;
    const ExplicitFamilyOracle oracle(inst->fam, true);
    SolveResult r;
    try {
      r = solve(inst->g, oracle);
    } catch (const InfeasibleError&) {
      continue;
    }
    const VerificationReport rep =
        verify_solve(inst->g, oracle, r, cls.symmetric);
    CHECK(rep.violation_count() == 0);
    CHECK(rep.max_ell_supported <= 3);
    ++verified;
  }
  CHECK(verified > 0);
}
