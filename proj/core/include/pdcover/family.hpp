#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdcover/graph.hpp"

namespace pdcover {

// Oracle view of a set family F over the ground set {0..n-1}. The empty set
// and the full set are never members. Implementations are immutable after
// construction; both operations are pure.
class FamilyOracle {
 public:
  virtual ~FamilyOracle() = default;
  virtual int ground_set_size() const = 0;
  virtual bool is_member(const VertexSet& s) const = 0;
  // Inclusion-minimal members of the residual family F^I (members uncovered
  // by I), sorted by ascending bitmask. For pliable families the result is
  // pairwise disjoint; implementations that know the family is pliable check
  // this on every call.
  virtual std::vector<VertexSet> min_cores(const EdgeSet& i,
                                           const Graph& g) const = 0;

  bool covers_family(const EdgeSet& i, const Graph& g) const {
    return min_cores(i, g).empty();
  }
};

// A family given by an explicit, deduplicated member list. Order of first
// insertion is preserved.
class ExplicitFamily {
 public:
  explicit ExplicitFamily(int n) : n_(n) {}
  ExplicitFamily(int n, const std::vector<VertexSet>& members);

  // Rejects the empty set and the full set; duplicates are ignored.
  void add(const VertexSet& s);
  bool contains(const VertexSet& s) const;

  int ground_set_size() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<VertexSet>& members() const { return members_; }

 private:
  int n_;
  std::vector<VertexSet> members_;
  std::unordered_map<std::uint64_t, int> index_;
};

// Members of fam with no crossing edge in I, original order preserved.
ExplicitFamily residual(const ExplicitFamily& fam, const EdgeSet& i,
                        const Graph& g);

// Inclusion-minimal members of residual(fam, i, g), ascending bitmask order.
std::vector<VertexSet> min_cores(const ExplicitFamily& fam, const EdgeSet& i,
                                 const Graph& g);

// All four of A∩B, V∖(A∪B), A∖B, B∖A are non-empty.
bool crosses(const VertexSet& a, const VertexSet& b);
// A∩B, A∖B, B∖A are non-empty (no condition on the outside).
bool overlaps(const VertexSet& a, const VertexSet& b);

struct FamilyClass {
  bool uncrossable = false;
  bool semi_uncrossable = false;
  bool pliable = false;
  // Set when the class containment alone proves it (semi-uncrossable families
  // qualify). A positive residual-property check can strengthen a pliable
  // family to gamma-pliable; see check_gamma.
  bool gamma_pliable = false;
  bool symmetric = false;
};

// Exhaustive pair check over all member pairs. Membership tests treat the
// empty set and the full set as non-members.
FamilyClass classify(const ExplicitFamily& fam);

struct GammaCounterexample {
  EdgeSet i;
  VertexSet s1, s2, core;
  std::string to_string() const;
};

struct GammaCheckResult {
  bool holds = false;
  std::optional<GammaCounterexample> counterexample;
  long residuals_checked = 0;
};

enum class GammaMode { kExhaustive, kSampled };

// Residual nesting property: for every examined edge set I, every nested pair
// S1 ⊂ S2 of residual members and every residual core C crossing both,
// S2 ∖ (S1 ∪ C) is empty or itself a residual member. Exhaustive mode
// enumerates all 2^|E| edge subsets and requires |E| <= 12; sampled mode
// draws `samples` subsets from a deterministic generator.
GammaCheckResult check_gamma(const ExplicitFamily& fam, const Graph& g,
                             GammaMode mode, int samples = 200,
                             std::uint64_t seed = 1);

// FamilyOracle over an explicit family. If `pliable` is set (caller verified
// via classify), min_cores checks core disjointness on every call.
class ExplicitFamilyOracle : public FamilyOracle {
 public:
  explicit ExplicitFamilyOracle(ExplicitFamily fam, bool pliable = false)
      : fam_(std::move(fam)), pliable_(pliable) {}

  int ground_set_size() const override { return fam_.ground_set_size(); }
  bool is_member(const VertexSet& s) const override {
    return fam_.contains(s);
  }
  std::vector<VertexSet> min_cores(const EdgeSet& i,
                                   const Graph& g) const override;

  const ExplicitFamily& family() const { return fam_; }

 private:
  ExplicitFamily fam_;
  bool pliable_;
};

// View of base^P for a fixed pre-covered edge set P: membership additionally
// requires no crossing edge in P, and min_cores(I) = base.min_cores(P ∪ I).
class ResidualOracle : public FamilyOracle {
 public:
  ResidualOracle(const FamilyOracle& base, EdgeSet pre, const Graph& g)
      : base_(base), pre_(pre), g_(g) {}

  int ground_set_size() const override { return base_.ground_set_size(); }
  bool is_member(const VertexSet& s) const override {
    return base_.is_member(s) && !covers(pre_, s, g_);
  }
  std::vector<VertexSet> min_cores(const EdgeSet& i,
                                   const Graph& g) const override {
    return base_.min_cores(pre_ | i, g);
  }

 private:
  const FamilyOracle& base_;
  EdgeSet pre_;
  const Graph& g_;
};

// Shared enumeration helper for implicitly given families: scans subsets in
// ascending popcount order (Gosper), keeping members uncovered by I that
// contain no previously found core. Requires n <= max_n.
std::vector<VertexSet> min_cores_by_enumeration(
    int n, const std::function<bool(const VertexSet&)>& member,
    const EdgeSet& i, const Graph& g, int max_n);

// Checks that sets are pairwise disjoint; used for core lists of families
// known to be pliable.
void require_pairwise_disjoint(const std::vector<VertexSet>& sets,
                               const char* context);

}  // namespace pdcover
