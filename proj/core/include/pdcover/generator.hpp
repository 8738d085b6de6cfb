#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "pdcover/applications.hpp"
#include "pdcover/family.hpp"
#include "pdcover/graph.hpp"

namespace pdcover {

// Deterministic source of randomness. mt19937_64 is fully specified by the
// standard, and all sampling goes through rejection (never through
// implementation-defined distributions), so identical seeds give identical
// instances on every platform.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), unbiased.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi], inclusive.
  int range(int lo, int hi);
  bool chance(int num, int den) {
    return below(static_cast<std::uint64_t>(den)) <
           static_cast<std::uint64_t>(num);
  }

 private:
  std::mt19937_64 eng_;
};

// Per-instance sub-seed derivation (splitmix64 finalizer), so instance i is
// reproducible independently of how many instances precede it.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

enum class FamilyKind { kPliable, kUncrossable };

struct ExplicitGenParams {
  int n_min = 4;
  int n_max = 8;
  int m_max = 14;
  int seed_members_min = 2;
  int seed_members_max = 5;
  int family_size_cap = 40;
  int max_cost_num = 9;   // costs drawn from {0..max_cost_num}/{1..max_cost_den}
  int max_cost_den = 3;
  int zero_cost_per_mille = 100;
};

struct ExplicitInstance {
  Graph g;
  ExplicitFamily fam;
};

// Closure repair: sample a few random member sets, then while some pair
// violates the target pair condition insert one of its derived sets, and give
// up when the family outgrows the cap. The graph gets random distinct pairs
// plus one crossing edge for any member the sampled edges miss, so generated
// instances are always feasible. Returns nothing when repair fails within the
// cap (caller retries with a different seed).
std::optional<ExplicitInstance> generate_explicit_instance(
    Rng& rng, const ExplicitGenParams& params, FamilyKind kind);

struct NmcGenParams {
  int n_min = 4;
  int n_max = 8;
  int base_edges_max = 10;
  int candidate_edges_max = 12;
  int k_max = 3;
  int max_cost_num = 9;
  int max_cost_den = 3;
};

std::optional<NearMinCutsInstance> generate_nmc_instance(
    Rng& rng, const NmcGenParams& params);

struct CapKGenParams {
  int n_min = 3;
  int n_max = 6;
  int m_max = 10;
  int cap_max = 3;
  int max_cost_num = 9;
  int max_cost_den = 3;
};

// k is drawn from [1, min capacitated cut of the full edge set], so the
// instance is feasible by construction. Returns nothing when the sampled
// graph is disconnected (min cut 0).
std::optional<CapKecssInstance> generate_capk_instance(
    Rng& rng, const CapKGenParams& params);

}  // namespace pdcover
