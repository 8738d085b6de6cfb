#include "pdcover/graph.hpp"

#include <sstream>

namespace pdcover {

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : elements()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

int Graph::add_edge(int u, int v, Rational cost, std::int64_t capacity) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw InputDomainError("edge endpoint out of range");
  if (u == v) throw InputDomainError("self-loops are not allowed");
  if (cost < 0) throw InputDomainError("negative edge cost");
  if (capacity < 1) throw InputDomainError("edge capacity must be positive");
  if (edge_count() >= kMaxEdges)
    throw CapacityError("edge count exceeds " + std::to_string(kMaxEdges));
  Edge e;
  e.id = edge_count();
  e.u = u;
  e.v = v;
  e.cost = std::move(cost);
  e.capacity = capacity;
  edges_.push_back(std::move(e));
  return edges_.back().id;
}

namespace {
void require_args(const EdgeSet& j, const VertexSet& s, const Graph& g) {
  if (s.ground_size() != g.vertex_count())
    throw InputDomainError("vertex set ground size does not match graph");
  if (!j.subset_of(g.all_edges()))
    throw InputDomainError("edge set references ids beyond the graph");
}
}  // namespace

EdgeSet delta(const EdgeSet& j, const VertexSet& s, const Graph& g) {
  require_args(j, s, g);
  EdgeSet out;
  for (int e : j.ids())
    if (g.edge(e).crosses(s)) out = out.with(e);
  return out;
}

int cut_degree(const EdgeSet& j, const VertexSet& s, const Graph& g) {
  return delta(j, s, g).count();
}

std::int64_t cut_capacity(const EdgeSet& j, const VertexSet& s,
                          const Graph& g) {
  require_args(j, s, g);
  std::int64_t total = 0;
  for (int e : j.ids())
    if (g.edge(e).crosses(s)) total += g.edge(e).capacity;
  return total;
}

bool covers(const EdgeSet& j, const VertexSet& s, const Graph& g) {
  require_args(j, s, g);
  for (int e : j.ids())
    if (g.edge(e).crosses(s)) return true;
  return false;
}

}  // namespace pdcover
