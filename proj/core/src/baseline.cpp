#include "pdcover/baseline.hpp"

#include <algorithm>
#include <vector>

#include "pdcover/applications.hpp"
#include "pdcover/errors.hpp"

namespace pdcover {
namespace {

// Lexicographic order on edge-id sets viewed as sorted id sequences.
bool lex_less(const EdgeSet& a, const EdgeSet& b) {
  const auto ia = a.ids();
  const auto ib = b.ids();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(),
                                      ib.end());
}

struct SearchState {
  const Graph* g = nullptr;
  std::vector<std::uint64_t> requirement_masks;  // one per constraint
  std::vector<std::uint64_t> suffix_union;       // edges with id >= i
  bool found = false;
  Rational best_cost;
  EdgeSet best_set;

  bool satisfied(std::uint64_t chosen) const {
    for (std::uint64_t req : requirement_masks)
      if ((chosen & req) == 0) return false;
    return true;
  }

  void consider(std::uint64_t chosen, const Rational& cost) {
    if (!satisfied(chosen)) return;
    const EdgeSet s(chosen);
    if (!found || cost < best_cost ||
        (cost == best_cost && lex_less(s, best_set))) {
      found = true;
      best_cost = cost;
      best_set = s;
    }
  }

  void recurse(int next, std::uint64_t chosen, const Rational& cost) {
    if (found && cost > best_cost) return;
    const std::uint64_t reachable = chosen | suffix_union[next];
    for (std::uint64_t req : requirement_masks)
      if ((reachable & req) == 0) return;  // some constraint is out of reach
    if (next == g->edge_count()) {
      consider(chosen, cost);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << next;
    recurse(next + 1, chosen | bit, cost + g->edge(next).cost);
    recurse(next + 1, chosen, cost);
  }
};

void require_baseline_size(const Graph& g) {
  if (g.edge_count() > kBaselineMaxEdges)
    throw CapacityError("exact baseline limited to " +
                        std::to_string(kBaselineMaxEdges) + " edges (got " +
                        std::to_string(g.edge_count()) + ")");
  if (g.vertex_count() > kBaselineMaxVertices)
    throw CapacityError("exact baseline limited to " +
                        std::to_string(kBaselineMaxVertices) +
                        " vertices (got " + std::to_string(g.vertex_count()) +
                        ")");
}

}  // namespace

BaselineResult optimal_cover(const Graph& g, const FamilyOracle& oracle) {
  require_baseline_size(g);
  if (oracle.ground_set_size() != g.vertex_count())
    throw InputDomainError("oracle ground set does not match graph");
  const int n = g.vertex_count();

  // Enumerate the members directly through is_member; coverage below never
  // touches min_cores, so the two code paths stay independent.
  SearchState st;
  st.g = &g;
  const std::uint64_t full = VertexSet::mask(n);
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    const VertexSet s(n, bits);
    if (!oracle.is_member(s)) continue;
    st.requirement_masks.push_back(delta(g.all_edges(), s, g).bits());
  }

  st.suffix_union.assign(g.edge_count() + 1, 0);
  for (int e = g.edge_count() - 1; e >= 0; --e)
    st.suffix_union[e] = st.suffix_union[e + 1] | (std::uint64_t{1} << e);

  st.recurse(0, 0, Rational(0));

  BaselineResult out;
  out.feasible = st.found;
  if (st.found) {
    out.opt_cost = st.best_cost;
    out.opt_set = st.best_set;
  }
  return out;
}

BaselineResult optimal_cap_kecss(const CapKecssInstance& inst) {
  const Graph& g = inst.g;
  require_baseline_size(g);
  const int n = g.vertex_count();
  const int m = g.edge_count();

  // Canonical cuts: proper nonempty S containing vertex 0 (complements give
  // the rest). Per cut, the crossing-edge mask.
  std::vector<std::uint64_t> cut_masks;
  if (n >= 2) {
    const std::uint64_t full = VertexSet::mask(n);
    for (std::uint64_t bits = 1; bits < full; bits += 2)
      cut_masks.push_back(delta(g.all_edges(), VertexSet(n, bits), g).bits());
  }

  auto feasible = [&](std::uint64_t chosen) {
    for (std::uint64_t cm : cut_masks) {
      std::int64_t cap = 0;
      std::uint64_t bits = chosen & cm;
      while (bits) {
        cap += g.edge(std::countr_zero(bits)).capacity;
        bits &= bits - 1;
      }
      if (cap < inst.k) return false;
    }
    return true;
  };

  BaselineResult out;
  if (!feasible(VertexSet::mask(m))) {
    out.feasible = false;
    return out;
  }

  bool found = false;
  Rational best_cost;
  EdgeSet best_set;
  // Plain enumeration with cost pruning; capacity constraints are not
  // monotone enough for the requirement-mask shortcut above.
  std::vector<std::pair<std::uint64_t, Rational>> stack;
  auto consider = [&](std::uint64_t chosen, const Rational& cost) {
    if (!feasible(chosen)) return;
    const EdgeSet s(chosen);
    if (!found || cost < best_cost ||
        (cost == best_cost && lex_less(s, best_set))) {
      found = true;
      best_cost = cost;
      best_set = s;
    }
  };
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t chosen = 0; chosen < limit; ++chosen) {
    Rational cost = 0;
    std::uint64_t bits = chosen;
    bool prune = false;
    while (bits) {
      cost += g.edge(std::countr_zero(bits)).cost;
      bits &= bits - 1;
      if (found && cost > best_cost) {
        prune = true;
        break;
      }
    }
    if (!prune) consider(chosen, cost);
  }
  out.feasible = found;
  if (found) {
    out.opt_cost = best_cost;
    out.opt_set = best_set;
  }
  return out;
}

}  // namespace pdcover
