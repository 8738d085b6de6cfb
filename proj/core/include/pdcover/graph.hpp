#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pdcover/errors.hpp"
#include "pdcover/rational.hpp"

namespace pdcover {

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxEdges = 64;

// A subset of the ground set {0,...,n-1}, stored as a single-word bitmask.
// Canonical: no bit at position >= n is ever set.
class VertexSet {
 public:
  VertexSet() : bits_(0), n_(0) {}
  VertexSet(int n, std::uint64_t bits) : bits_(bits), n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw CapacityError("ground set size " + std::to_string(n) +
                          " outside [0," + std::to_string(kMaxVertices) + "]");
    if ((bits & ~mask(n)) != 0)
      throw InputDomainError("vertex set has bits beyond ground set");
  }

  static VertexSet empty_set(int n) { return VertexSet(n, 0); }
  static VertexSet full_set(int n) { return VertexSet(n, mask(n)); }
  static VertexSet of(int n, std::initializer_list<int> vs) {
    std::uint64_t b = 0;
    for (int v : vs) {
      if (v < 0 || v >= n) throw InputDomainError("vertex id out of range");
      b |= std::uint64_t{1} << v;
    }
    return VertexSet(n, b);
  }

  int ground_size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == mask(n_); }
  bool contains(int v) const {
    return v >= 0 && v < n_ && ((bits_ >> v) & 1) != 0;
  }

  VertexSet with(int v) const {
    if (v < 0 || v >= n_) throw InputDomainError("vertex id out of range");
    return VertexSet(n_, bits_ | (std::uint64_t{1} << v));
  }

  VertexSet operator&(const VertexSet& o) const {
    require_same(o);
    return VertexSet(n_, bits_ & o.bits_);
  }
  VertexSet operator|(const VertexSet& o) const {
    require_same(o);
    return VertexSet(n_, bits_ | o.bits_);
  }
  // Set difference, *this minus o.
  VertexSet minus(const VertexSet& o) const {
    require_same(o);
    return VertexSet(n_, bits_ & ~o.bits_);
  }
  VertexSet complement() const { return VertexSet(n_, ~bits_ & mask(n_)); }

  bool subset_of(const VertexSet& o) const {
    require_same(o);
    return (bits_ & ~o.bits_) == 0;
  }
  bool proper_subset_of(const VertexSet& o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  bool intersects(const VertexSet& o) const {
    require_same(o);
    return (bits_ & o.bits_) != 0;
  }

  bool operator==(const VertexSet& o) const = default;
  // Orders by ground size first, then ascending bitmask. All containers keyed
  // by VertexSet iterate in this (deterministic) order.
  auto operator<=>(const VertexSet& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return bits_ <=> o.bits_;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  // "{0,2,5}"
  std::string to_string() const;

  static std::uint64_t mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

 private:
  void require_same(const VertexSet& o) const {
    if (n_ != o.n_)
      throw InputDomainError("vertex sets over different ground sets");
  }

  std::uint64_t bits_;
  int n_;
};

// A set of edge ids, bitmask form. Graphs are capped at 64 edges so edge-set
// algebra stays single-word, mirroring the 64-vertex cap.
class EdgeSet {
 public:
  EdgeSet() : bits_(0) {}
  explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

  static EdgeSet all(int m) { return EdgeSet(VertexSet::mask(m)); }
  static EdgeSet of(std::initializer_list<int> ids) {
    EdgeSet s;
    for (int e : ids) s = s.with(e);
    return s;
  }
  static EdgeSet from_ids(const std::vector<int>& ids) {
    EdgeSet s;
    for (int e : ids) s = s.with(e);
    return s;
  }

  std::uint64_t bits() const { return bits_; }
  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int e) const {
    return e >= 0 && e < kMaxEdges && ((bits_ >> e) & 1) != 0;
  }
  EdgeSet with(int e) const {
    if (e < 0 || e >= kMaxEdges) throw InputDomainError("edge id out of range");
    return EdgeSet(bits_ | (std::uint64_t{1} << e));
  }
  EdgeSet without(int e) const {
    if (e < 0 || e >= kMaxEdges) throw InputDomainError("edge id out of range");
    return EdgeSet(bits_ & ~(std::uint64_t{1} << e));
  }

  EdgeSet operator&(const EdgeSet& o) const { return EdgeSet(bits_ & o.bits_); }
  EdgeSet operator|(const EdgeSet& o) const { return EdgeSet(bits_ | o.bits_); }
  EdgeSet minus(const EdgeSet& o) const { return EdgeSet(bits_ & ~o.bits_); }
  bool subset_of(const EdgeSet& o) const { return (bits_ & ~o.bits_) == 0; }

  bool operator==(const EdgeSet& o) const = default;
  auto operator<=>(const EdgeSet& o) const = default;

  std::vector<int> ids() const {
    std::vector<int> out;
    std::uint64_t b = bits_;
    while (b) {
      out.push_back(std::countr_zero(b));
      b &= b - 1;
    }
    return out;
  }

 private:
  std::uint64_t bits_;
};

struct Edge {
  int id = -1;
  int u = -1;
  int v = -1;
  Rational cost;
  std::int64_t capacity = 1;

  // True when the edge has exactly one endpoint in S.
  bool crosses(const VertexSet& s) const { return s.contains(u) != s.contains(v); }
};

// Immutable after construction. Parallel edges are allowed (distinct ids);
// self-loops are not.
class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw CapacityError("vertex count " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxVertices));
  }

  int add_edge(int u, int v, Rational cost, std::int64_t capacity = 1);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const {
    if (id < 0 || id >= edge_count())
      throw InputDomainError("edge id " + std::to_string(id) + " out of range");
    return edges_[id];
  }
  const std::vector<Edge>& edges() const { return edges_; }
  EdgeSet all_edges() const { return EdgeSet::all(edge_count()); }

 private:
  int n_;
  std::vector<Edge> edges_;
};

// Edges of J with exactly one endpoint in S.
EdgeSet delta(const EdgeSet& j, const VertexSet& s, const Graph& g);
int cut_degree(const EdgeSet& j, const VertexSet& s, const Graph& g);
std::int64_t cut_capacity(const EdgeSet& j, const VertexSet& s, const Graph& g);
bool covers(const EdgeSet& j, const VertexSet& s, const Graph& g);

}  // namespace pdcover
