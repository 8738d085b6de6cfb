#include "pdcover/witness.hpp"

#include <algorithm>
#include <unordered_set>

#include "pdcover/errors.hpp"

namespace pdcover {

long beta_of(const std::vector<WitnessAssignment>& l) {
  long beta = 0;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (a != b && overlaps(l[a].set, l[b].set)) ++beta;
  return beta;
}

std::optional<VertexSet> initial_witness(const Graph& g,
                                         const FamilyOracle& oracle,
                                         const EdgeSet& i, int e) {
  if (!i.contains(e)) throw InputDomainError("edge not part of the cover");
  const auto cores = oracle.min_cores(i.without(e), g);
  for (const auto& s : cores) {
    // Minimal uncovered members of I∖{e} are covered by e alone once I covers
    // the family; ascending order makes the first hit the smallest bitmask.
    if (delta(i, s, g) == EdgeSet::of({e})) return s;
  }
  return std::nullopt;
}

UncrossResult uncross_witness_family(const Graph& g,
                                     const FamilyOracle& oracle,
                                     const EdgeSet& i,
                                     std::vector<WitnessAssignment> initial) {
  UncrossResult res;
  res.assignments = std::move(initial);
  auto& l = res.assignments;

  // Scan pairs in edge-id order so runs are reproducible.
  std::vector<int> order(l.size());
  for (std::size_t t = 0; t < l.size(); ++t) order[t] = static_cast<int>(t);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return l[a].edge < l[b].edge; });

  long beta = beta_of(l);
  const long initial_beta = beta;
  long steps = 0;

  while (beta > 0) {
    // A valid replacement takes one set of an overlapping pair to a derived
    // member still uniquely covered by its edge. Replacing against the first
    // overlapping pair alone can trade one overlap for another (the new set
    // may overlap sets the old one merely contained), so search every pair
    // and keep only moves that lower the overlap count outright.
    struct Move {
      long beta_after = 0;
      VertexSet set;
      int slot = -1;
      VertexSet other;
    };
    std::optional<Move> best;
    bool any_overlap = false;

    auto offer = [&](const VertexSet& x, int slot, const VertexSet& other) {
      const VertexSet saved = l[slot].set;
      l[slot].set = x;
      const long after = beta_of(l);
      l[slot].set = saved;
      if (after < beta &&
          (!best || after < best->beta_after ||
           (after == best->beta_after &&
            (x.size() < best->set.size() ||
             (x.size() == best->set.size() &&
              (x.bits() < best->set.bits() ||
               (x.bits() == best->set.bits() &&
                l[slot].edge < l[best->slot].edge))))))) {
        best = Move{after, x, slot, other};
      }
    };

    for (std::size_t xo = 0; xo < order.size(); ++xo) {
      for (std::size_t yo = xo + 1; yo < order.size(); ++yo) {
        const int pa = order[xo];
        const int pb = order[yo];
        const VertexSet a = l[pa].set;
        const VertexSet b = l[pb].set;
        if (!overlaps(a, b)) continue;
        any_overlap = true;
        const VertexSet derived[4] = {a & b, a | b, a.minus(b), b.minus(a)};
        for (const VertexSet& x : derived) {
          if (x.empty() || x.is_full() || !oracle.is_member(x)) continue;
          const EdgeSet dx = delta(i, x, g);
          if (dx == EdgeSet::of({l[pa].edge})) offer(x, pa, b);
          if (dx == EdgeSet::of({l[pb].edge})) offer(x, pb, a);
        }
      }
    }
    PDCOVER_CHECK(any_overlap, "positive overlap count implies a pair");
    if (!best)
      throw Error(
          "uncrossing stalled: no single replacement lowers the overlap "
          "count; family not pliable?");

    UncrossStep step;
    step.edge = l[best->slot].edge;
    step.before = l[best->slot].set;
    step.other = best->other;
    step.after = best->set;
    step.beta_before = beta;
    step.beta_after = best->beta_after;
    l[best->slot].set = best->set;
    beta = best->beta_after;
    res.steps.push_back(step);
    ++steps;
    PDCOVER_CHECK(steps <= initial_beta, "uncrossing terminates");
  }
  return res;
}

namespace {

WitnessForest forest_from_assignments(
    const Graph& g, const EdgeSet& i,
    const std::vector<WitnessAssignment>& assignments) {
  const int n = g.vertex_count();
  WitnessForest wf;

  std::vector<std::pair<VertexSet, int>> entries;  // set, covering edge
  std::unordered_set<std::uint64_t> seen;
  for (const auto& wa : assignments) {
    PDCOVER_CHECK(seen.insert(wa.set.bits()).second, "witness sets distinct");
    entries.emplace_back(wa.set, wa.edge);
  }
  entries.emplace_back(VertexSet::full_set(n), -1);
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    return x.first.bits() < y.first.bits();
  });

  for (const auto& [s, e] : entries) {
    wf.sets.push_back(s);
    wf.edge_of_set.push_back(e);
    if (e >= 0) wf.set_of_edge[e] = static_cast<int>(wf.sets.size()) - 1;
  }
  wf.parent.assign(wf.size(), -1);
  wf.children.assign(wf.size(), {});

  for (int s = 0; s < wf.size(); ++s) {
    if (wf.sets[s].is_full()) {
      wf.root = s;
      continue;
    }
    int parent = -1;
    for (int t = 0; t < wf.size(); ++t) {
      if (t == s || !wf.sets[s].proper_subset_of(wf.sets[t])) continue;
      if (parent == -1 || wf.sets[t].proper_subset_of(wf.sets[parent]))
        parent = t;
    }
    PDCOVER_CHECK(parent != -1, "every set has a strict superset (the root)");
    wf.parent[s] = parent;
    wf.children[parent].push_back(s);
  }
  // children come out sorted because sets are scanned in ascending bitmask

  // Laminarity and the witness property, checked exactly.
  for (int s = 0; s < wf.size(); ++s)
    for (int t = s + 1; t < wf.size(); ++t) {
      const VertexSet& a = wf.sets[s];
      const VertexSet& b = wf.sets[t];
      PDCOVER_CHECK(!a.intersects(b) || a.subset_of(b) || b.subset_of(a),
                    "witness family laminar");
    }
  for (int s = 0; s < wf.size(); ++s) {
    if (s == wf.root) continue;
    PDCOVER_CHECK(delta(i, wf.sets[s], g) == EdgeSet::of({wf.edge_of_set[s]}),
                  "witness property: unique covering edge");
  }
  PDCOVER_CHECK(wf.size() == i.count() + 1,
                "one witness per edge plus the root");
  return wf;
}

}  // namespace

WitnessBuildResult build_witness_forest(const Graph& g,
                                        const FamilyOracle& oracle,
                                        const std::vector<int>& cover_edges) {
  const EdgeSet i = EdgeSet::from_ids(cover_edges);
  if (!oracle.covers_family(i, g))
    throw InputDomainError("edge set does not cover the family");

  std::vector<WitnessAssignment> initial;
  for (auto it = cover_edges.rbegin(); it != cover_edges.rend(); ++it) {
    auto w = initial_witness(g, oracle, i, *it);
    if (!w)
      throw Error("cover is not inclusion-minimal: removing edge " +
                  std::to_string(*it) + " leaves the family covered");
    initial.push_back(WitnessAssignment{*it, *w});
  }

  UncrossResult ur = uncross_witness_family(g, oracle, i, std::move(initial));

  WitnessBuildResult out;
  out.forest = forest_from_assignments(g, i, ur.assignments);
  out.steps = std::move(ur.steps);
  return out;
}

namespace {

struct Ownership {
  std::vector<int> owner_of_core;  // forest set index
  std::vector<bool> hollow;        // per forest set
};

Ownership compute_ownership(const WitnessForest& wf,
                            const std::vector<VertexSet>& cores) {
  Ownership own;
  own.owner_of_core.assign(cores.size(), -1);
  own.hollow.assign(wf.size(), true);
  for (std::size_t c = 0; c < cores.size(); ++c) {
    int best = -1;
    for (int s = 0; s < wf.size(); ++s) {
      if (!cores[c].subset_of(wf.sets[s])) continue;
      if (best == -1 || wf.sets[s].proper_subset_of(wf.sets[best])) best = s;
    }
    PDCOVER_CHECK(best != -1, "the root contains every core");
    own.owner_of_core[c] = best;
    own.hollow[best] = false;
  }
  return own;
}

bool is_chain_node(const WitnessForest& wf, const Ownership& own, int s) {
  return s != wf.root && own.hollow[s] && wf.children[s].size() == 1;
}

int core_of_vertex(const std::vector<VertexSet>& cores, int v) {
  for (std::size_t c = 0; c < cores.size(); ++c)
    if (cores[c].contains(v)) return static_cast<int>(c);
  return -1;
}

}  // namespace

ChainReport find_hollow_chains(const WitnessForest& wf,
                               const std::vector<VertexSet>& cores,
                               const Graph& g) {
  ChainReport report;
  const Ownership own = compute_ownership(wf, cores);
  report.hollow = own.hollow;
  report.owner_of_core = own.owner_of_core;

  for (int s = 0; s < wf.size(); ++s) {
    if (!is_chain_node(wf, own, s)) continue;
    const int child = wf.children[s][0];
    if (is_chain_node(wf, own, child)) continue;  // not the bottom of its run

    ChainRecord rec;
    rec.set_indices.push_back(child);  // S_0
    int cur = s;
    while (true) {
      rec.set_indices.push_back(cur);
      const int p = wf.parent[cur];
      if (p == -1 || !is_chain_node(wf, own, p)) break;
      cur = p;
    }
    rec.ell = static_cast<int>(rec.set_indices.size()) - 1;

    for (int idx : rec.set_indices) {
      const int e = wf.edge_of_set[idx];
      PDCOVER_CHECK(e >= 0, "chain sets are not the root");
      rec.edges.push_back(e);
      const Edge& edge = g.edge(e);
      const bool u_inside = wf.sets[idx].contains(edge.u);
      PDCOVER_CHECK(u_inside != wf.sets[idx].contains(edge.v),
                    "covering edge crosses its set");
      const int a = u_inside ? edge.u : edge.v;
      const int b = u_inside ? edge.v : edge.u;
      rec.ends.emplace_back(a, b);
      rec.a_core.push_back(core_of_vertex(cores, a));
      rec.b_core.push_back(core_of_vertex(cores, b));
      for (const auto& c : cores)
        if (edge.crosses(c)) ++rec.contribution;
    }
    report.max_ell = std::max(report.max_ell, rec.ell);
    report.chains.push_back(std::move(rec));
  }
  return report;
}

ChainLemmaResult verify_chain_lemma(const ChainReport& report) {
  ChainLemmaResult res;

  auto chain_name = [&](const ChainRecord& c) {
    std::string s = "chain ell=" + std::to_string(c.ell) + " sets[";
    for (std::size_t t = 0; t < c.set_indices.size(); ++t)
      s += (t ? "," : "") + std::to_string(c.set_indices[t]);
    return s + "]";
  };

  for (const ChainRecord& chain : report.chains) {
    // The case rules assume every cover edge crosses some core; a chain edge
    // with both ends in one core (or touching none) is outside that regime.
    bool supported = true;
    for (int t = 0; t <= chain.ell; ++t)
      if (chain.a_core[t] == chain.b_core[t]) supported = false;

    if (!supported) {
      res.all_chains_supported = false;
      res.max_ell_unsupported = std::max(res.max_ell_unsupported, chain.ell);
      res.unsupported_chains.push_back(chain_name(chain) +
                                       ": an edge crosses no core");
      continue;
    }
    res.max_ell_supported = std::max(res.max_ell_supported, chain.ell);

    auto in_u = [&](int core_idx) { return core_idx >= 0; };
    auto fail_case = [&](const std::string& what) {
      res.cases_pass = false;
      ++res.case_violation_count;
      res.violations.push_back(chain_name(chain) + ": " + what);
    };
    auto fail_end_rule = [&](const std::string& what) {
      res.end_rules_pass = false;
      ++res.end_rule_violation_count;
      res.violations.push_back(chain_name(chain) + ": " + what);
    };

    if (chain.ell > 3) fail_case("length exceeds 3");
    if (chain.ell >= 1 && !in_u(chain.a_core[1]) && !in_u(chain.b_core[1]))
      fail_case("edge covering S_1 touches no core");
    // (a)
    if (chain.ell >= 1 && in_u(chain.a_core[1]) && chain.ell != 1)
      fail_case("a_1 in a core but length != 1");
    // (b)
    if (in_u(chain.b_core[0])) {
      if (chain.ell > 2) fail_case("b_0 in a core but length > 2");
      if (chain.ell == 2) {
        if (in_u(chain.a_core[1]))
          fail_case("b_0 in a core, length 2, yet a_1 in a core");
        if (!(chain.b_core[0] == chain.b_core[1] &&
              chain.b_core[0] == chain.a_core[2]))
          fail_case("b_0, b_1, a_2 not in one core at length 2");
      }
    }
    // (c)
    if (chain.ell >= 1 && in_u(chain.b_core[1])) {
      if (chain.ell > 3) fail_case("b_1 in a core but length > 3");
      if (chain.ell == 3) {
        if (in_u(chain.a_core[1]) || in_u(chain.b_core[0]) ||
            in_u(chain.a_core[2]))
          fail_case("b_1 in a core, length 3, yet a_1/b_0/a_2 touch cores");
        if (!(chain.b_core[1] == chain.b_core[2] &&
              chain.b_core[1] == chain.a_core[3]))
          fail_case("b_1, b_2, a_3 not in one core at length 3");
      }
    }
    // Generalized end rules across all indices.
    for (int t = 1; t <= chain.ell; ++t) {
      if (in_u(chain.a_core[t]) && chain.ell != t)
        fail_end_rule("a_" + std::to_string(t) +
                      " in a core but the chain continues");
    }
    for (int j = 0; j < chain.ell; ++j) {
      if (!in_u(chain.b_core[j])) continue;
      if (chain.ell > j + 2) {
        fail_end_rule("b_" + std::to_string(j) +
                      " in a core but the chain runs past " +
                      std::to_string(j + 2));
      } else if (chain.ell == j + 2) {
        if (!(chain.b_core[j] == chain.b_core[j + 1] &&
              chain.b_core[j] == chain.a_core[j + 2]))
          fail_end_rule("b_" + std::to_string(j) + ", b_" +
                        std::to_string(j + 1) + ", a_" + std::to_string(j + 2) +
                        " not in one core at the chain end");
      }
    }
  }
  return res;
}

CoreDegreeResult verify_core_degree_bound(const EdgeSet& solution,
                                          const std::vector<VertexSet>& cores,
                                          const Graph& g, bool symmetric) {
  CoreDegreeResult res;
  res.symmetric_used = symmetric;
  for (const auto& c : cores) res.lhs += cut_degree(solution, c, g);
  const long csize = static_cast<long>(cores.size());
  res.bound = symmetric ? 10 * (csize - 1) : 5 * (2 * csize - 1);
  res.pass = cores.empty() ? true : res.lhs <= res.bound;
  for (int e : solution.ids()) {
    bool covers_core = false;
    for (const auto& c : cores)
      if (g.edge(e).crosses(c)) {
        covers_core = true;
        break;
      }
    if (!covers_core) res.edges_covering_no_core.push_back(e);
  }
  return res;
}

TreeBoundResult verify_tree_edge_bound(const WitnessForest& wf,
                                       const std::vector<VertexSet>& cores,
                                       const Graph& g) {
  (void)g;
  TreeBoundResult res;
  const Ownership own = compute_ownership(wf, cores);

  // Contract every maximal run of hollow single-child nodes: the run's nodes
  // disappear and the node below reattaches above the run.
  std::vector<bool> removed(wf.size(), false);
  std::vector<int> parent = wf.parent;
  for (int s = 0; s < wf.size(); ++s) {
    if (!is_chain_node(wf, own, s)) continue;
    removed[s] = true;
  }
  for (int s = 0; s < wf.size(); ++s) {
    if (removed[s] || s == wf.root) continue;
    int p = parent[s];
    while (p != -1 && removed[p]) p = wf.parent[p];
    parent[s] = p;
  }

  std::vector<int> child_count(wf.size(), 0);
  int nodes = 0;
  for (int s = 0; s < wf.size(); ++s) {
    if (removed[s]) continue;
    ++nodes;
    if (s != wf.root) ++child_count[parent[s]];
    if (!own.hollow[s]) ++res.r_count;
  }
  res.edge_count = nodes - 1;
  res.root_multi_child = child_count[wf.root] >= 2;
  res.bound =
      res.root_multi_child ? 2 * (res.r_count - 1) : 2 * res.r_count - 1;
  res.pass = res.edge_count <= res.bound;
  return res;
}

namespace {

Rational dual_load(const DualState& duals, const Edge& e) {
  Rational load = 0;
  for (const auto& [s, y] : duals.y)
    if (e.crosses(s)) load += y;
  return load;
}

// No residual member may hide in the gap between a hollow single-child set
// and its child.
bool check_child_gap(const WitnessForest& wf, const Ownership& own,
                     const FamilyOracle& residual_oracle) {
  for (int s = 0; s < wf.size(); ++s) {
    if (s == wf.root || !own.hollow[s] || wf.children[s].size() != 1) continue;
    const VertexSet gap = wf.sets[s].minus(wf.sets[wf.children[s][0]]);
    const std::uint64_t gap_bits = gap.bits();
    for (std::uint64_t sub = gap_bits; sub != 0; sub = (sub - 1) & gap_bits) {
      if (residual_oracle.is_member(VertexSet(gap.ground_size(), sub)))
        return false;
    }
  }
  return true;
}

// A core reaching into a chain set from outside the chain's bottom must cross
// that set.
bool check_crossing_core(const WitnessForest& wf, const ChainReport& chains,
                         const std::vector<VertexSet>& cores) {
  for (const ChainRecord& chain : chains.chains) {
    const VertexSet& s0 = wf.sets[chain.set_indices[0]];
    for (int t = 1; t <= chain.ell; ++t) {
      const VertexSet& si = wf.sets[chain.set_indices[t]];
      for (const auto& c : cores) {
        if ((c & si).minus(s0).empty()) continue;
        if (!crosses(c, si)) return false;
      }
    }
  }
  return true;
}

}  // namespace

VerificationReport verify_solve(const Graph& g, const FamilyOracle& oracle,
                                const SolveResult& result, bool symmetric,
                                const std::optional<Rational>& exact_opt) {
  VerificationReport rep;

  // Result-level accounting from scratch.
  rep.dual_feasible = true;
  for (const Edge& e : g.edges())
    if (dual_load(result.duals, e) > e.cost) rep.dual_feasible = false;
  rep.solution_tight = true;
  for (int e : result.solution.ids())
    if (dual_load(result.duals, g.edge(e)) != g.edge(e).cost)
      rep.solution_tight = false;
  rep.coverage_ok = oracle.covers_family(result.solution, g);
  rep.solution_minimal = true;
  for (int e : result.solution.ids())
    if (oracle.covers_family(result.solution.without(e), g))
      rep.solution_minimal = false;
  if (exact_opt) rep.weak_duality_ok = result.dual_total <= *exact_opt;

  if (!rep.dual_feasible) ++rep.counts.result_level;
  if (!rep.solution_tight) ++rep.counts.result_level;
  if (!rep.coverage_ok) ++rep.counts.result_level;
  if (!rep.solution_minimal) ++rep.counts.result_level;
  if (rep.weak_duality_ok && !*rep.weak_duality_ok) ++rep.counts.result_level;

  // Per-iteration snapshots: the family residual to the edges added earlier,
  // covered by the surviving edges added at or after the iteration.
  EdgeSet before;
  for (std::size_t r = 0; r < result.iterations.size(); ++r) {
    const IterationRecord& rec = result.iterations[r];
    SnapshotVerification snap;
    snap.iteration = rec.index;
    snap.core_count = static_cast<int>(rec.cores.size());

    const ResidualOracle res_oracle(oracle, before, g);
    before = before.with(rec.added_edge);

    std::vector<int> survivors;
    for (std::size_t t = r; t < result.phase1_edges.size(); ++t)
      if (result.solution.contains(result.phase1_edges[t]))
        survivors.push_back(result.phase1_edges[t]);
    snap.cover_size = static_cast<int>(survivors.size());
    const EdgeSet survivor_set = EdgeSet::from_ids(survivors);

    snap.minimal_cover_ok = res_oracle.covers_family(survivor_set, g);
    for (int e : survivors)
      if (res_oracle.covers_family(survivor_set.without(e), g))
        snap.minimal_cover_ok = false;
    if (!snap.minimal_cover_ok) {
      ++rep.counts.minimal_cover;
      snap.failure = "survivors are not a minimal cover of the residual";
      rep.snapshots.push_back(std::move(snap));
      continue;
    }

    snap.core_degree =
        verify_core_degree_bound(survivor_set, rec.cores, g, symmetric);
    snap.hypothesis_ok = snap.core_degree.edges_covering_no_core.empty();
    if (!snap.core_degree.pass) ++rep.counts.degree;

    try {
      WitnessBuildResult wb = build_witness_forest(g, res_oracle, survivors);
      snap.witness_ok = true;
      snap.beta_monotone_ok = true;
      for (const auto& step : wb.steps)
        if (step.beta_after >= step.beta_before) snap.beta_monotone_ok = false;

      const ChainReport chains = find_hollow_chains(wb.forest, rec.cores, g);
      snap.max_ell = chains.max_ell;
      snap.chain_lemma = verify_chain_lemma(chains);
      snap.tree_bound = verify_tree_edge_bound(wb.forest, rec.cores, g);

      const Ownership own = compute_ownership(wb.forest, rec.cores);
      snap.child_gap_ok = check_child_gap(wb.forest, own, res_oracle);
      snap.crossing_core_ok =
          check_crossing_core(wb.forest, chains, rec.cores);

      if (!snap.beta_monotone_ok) ++rep.counts.beta;
      rep.counts.chain_cases += snap.chain_lemma.case_violation_count;
      rep.counts.chain_end_rules += snap.chain_lemma.end_rule_violation_count;
      if (!snap.tree_bound.pass) ++rep.counts.tree;
      if (!snap.child_gap_ok) ++rep.counts.child_gap;
      if (!snap.crossing_core_ok) ++rep.counts.crossing_core;

      rep.max_ell_supported =
          std::max(rep.max_ell_supported, snap.chain_lemma.max_ell_supported);
      rep.max_ell_unsupported = std::max(
          rep.max_ell_unsupported, snap.chain_lemma.max_ell_unsupported);
    } catch (const Error& e) {
      snap.witness_ok = false;
      snap.failure = e.what();
      ++rep.counts.witness;
    }

    if (snap.hypothesis_ok) ++rep.snapshots_supported;
    rep.snapshots.push_back(std::move(snap));
  }
  return rep;
}

}  // namespace pdcover
