#include "pdcover/generator.hpp"

#include <algorithm>

#include "pdcover/errors.hpp"

namespace pdcover {

std::uint64_t Rng::below(std::uint64_t n) {
  PDCOVER_CHECK(n > 0, "below(0)");
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return x % n;
}

int Rng::range(int lo, int hi) {
  PDCOVER_CHECK(lo <= hi, "empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

Rational random_cost(Rng& rng, int max_num, int max_den, int zero_per_mille) {
  if (rng.chance(zero_per_mille, 1000)) return Rational(0);
  const int num = rng.range(1, max_num);
  const int den = rng.range(1, max_den);
  return Rational(num, den);
}

// All unordered vertex pairs in a deterministic shuffle.
std::vector<std::pair<int, int>> shuffled_pairs(Rng& rng, int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::size_t t = pairs.size(); t > 1; --t)
    std::swap(pairs[t - 1], pairs[rng.below(t)]);
  return pairs;
}

VertexSet random_proper_subset(Rng& rng, int n) {
  while (true) {
    const std::uint64_t bits = rng.next() & VertexSet::mask(n);
    if (bits != 0 && bits != VertexSet::mask(n)) return VertexSet(n, bits);
  }
}

// Closure repair toward the requested pair condition. Returns nothing if the
// family outgrows the cap before stabilizing.
std::optional<ExplicitFamily> repair_family(Rng& rng, int n,
                                            std::vector<VertexSet> seeds,
                                            FamilyKind kind, int cap) {
  ExplicitFamily fam(n);
  for (const auto& s : seeds) fam.add(s);

  while (true) {
    bool fixed_something = false;
    const auto members = fam.members();  // snapshot; additions restart the scan
    for (std::size_t x = 0; x < members.size() && !fixed_something; ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        const VertexSet& a = members[x];
        const VertexSet& b = members[y];
        const VertexSet derived[4] = {a & b, a | b, a.minus(b), b.minus(a)};
        auto ok = [&](const VertexSet& s) {
          return !s.empty() && !s.is_full() && fam.contains(s);
        };
        auto valid = [&](const VertexSet& s) {
          return !s.empty() && !s.is_full() && !fam.contains(s);
        };
        bool satisfied;
        if (kind == FamilyKind::kUncrossable) {
          satisfied = (ok(derived[0]) && ok(derived[1])) ||
                      (ok(derived[2]) && ok(derived[3]));
        } else {
          satisfied = int(ok(derived[0])) + int(ok(derived[1])) +
                          int(ok(derived[2])) + int(ok(derived[3])) >=
                      2;
        }
        if (satisfied) continue;

        std::vector<VertexSet> candidates;
        if (kind == FamilyKind::kUncrossable) {
          // Complete whichever clause can still be completed.
          const bool cap_cup_possible =
              (ok(derived[0]) || valid(derived[0])) &&
              (ok(derived[1]) || valid(derived[1]));
          const bool diff_possible = (ok(derived[2]) || valid(derived[2])) &&
                                     (ok(derived[3]) || valid(derived[3]));
          if (cap_cup_possible)
            for (int t : {0, 1})
              if (valid(derived[t])) candidates.push_back(derived[t]);
          if (candidates.empty() && diff_possible)
            for (int t : {2, 3})
              if (valid(derived[t])) candidates.push_back(derived[t]);
        } else {
          for (int t = 0; t < 4; ++t)
            if (valid(derived[t])) candidates.push_back(derived[t]);
        }
        if (candidates.empty()) return std::nullopt;
        fam.add(candidates[rng.below(candidates.size())]);
        if (fam.size() > cap) return std::nullopt;
        fixed_something = true;
        break;
      }
    }
    if (!fixed_something) return fam;
  }
}

}  // namespace

std::optional<ExplicitInstance> generate_explicit_instance(
    Rng& rng, const ExplicitGenParams& params, FamilyKind kind) {
  const int n = rng.range(params.n_min, params.n_max);

  std::vector<VertexSet> seeds;
  const int seed_count = rng.range(params.seed_members_min,
                                   params.seed_members_max);
  for (int t = 0; t < seed_count; ++t)
    seeds.push_back(random_proper_subset(rng, n));

  auto fam = repair_family(rng, n, std::move(seeds), kind,
                           params.family_size_cap);
  if (!fam || fam->size() == 0) return std::nullopt;

  // Random distinct pairs, then one extra crossing edge for any member the
  // sample misses so the instance is feasible.
  Graph g(n);
  const auto pairs = shuffled_pairs(rng, n);
  const int base_edges = std::min<int>(
      params.m_max, std::min<int>(static_cast<int>(pairs.size()),
                                  rng.range(n - 1, params.m_max)));
  for (int t = 0; t < base_edges; ++t)
    g.add_edge(pairs[t].first, pairs[t].second,
               random_cost(rng, params.max_cost_num, params.max_cost_den,
                           params.zero_cost_per_mille));

  for (const auto& s : fam->members()) {
    if (covers(g.all_edges(), s, g)) continue;
    if (g.edge_count() >= params.m_max) return std::nullopt;
    // Any edge with one end inside works; pick deterministically at random.
    const auto inside = s.elements();
    const auto outside = s.complement().elements();
    const int u = inside[rng.below(inside.size())];
    const int v = outside[rng.below(outside.size())];
    g.add_edge(u, v,
               random_cost(rng, params.max_cost_num, params.max_cost_den,
                           params.zero_cost_per_mille));
  }
  return ExplicitInstance{std::move(g), std::move(*fam)};
}

std::optional<NearMinCutsInstance> generate_nmc_instance(
    Rng& rng, const NmcGenParams& params) {
  const int n = rng.range(params.n_min, params.n_max);

  Graph base(n);
  {
    const auto pairs = shuffled_pairs(rng, n);
    const int m0 = std::min<int>(static_cast<int>(pairs.size()),
                                 rng.range(n - 1, params.base_edges_max));
    for (int t = 0; t < m0; ++t)
      base.add_edge(pairs[t].first, pairs[t].second, Rational(0));
  }
  const int k = rng.range(1, params.k_max);

  NearMinCutsOracle oracle(base, k);
  Graph candidates(n);
  {
    const auto pairs = shuffled_pairs(rng, n);
    const int mc = std::min<int>(static_cast<int>(pairs.size()),
                                 rng.range(1, params.candidate_edges_max));
    for (int t = 0; t < mc; ++t)
      candidates.add_edge(pairs[t].first, pairs[t].second,
                          random_cost(rng, params.max_cost_num,
                                      params.max_cost_den, 100));
  }
  // Feasibility: every deficient set needs a crossing candidate.
  const std::uint64_t full = VertexSet::mask(n);
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    const VertexSet s(n, bits);
    if (!oracle.is_member(s)) continue;
    if (covers(candidates.all_edges(), s, candidates)) continue;
    if (candidates.edge_count() >= params.candidate_edges_max)
      return std::nullopt;
    const auto inside = s.elements();
    const auto outside = s.complement().elements();
    candidates.add_edge(inside[rng.below(inside.size())],
                        outside[rng.below(outside.size())],
                        random_cost(rng, params.max_cost_num,
                                    params.max_cost_den, 100));
  }
  return NearMinCutsInstance(std::move(base), std::move(candidates), k);
}

std::optional<CapKecssInstance> generate_capk_instance(
    Rng& rng, const CapKGenParams& params) {
  const int n = rng.range(params.n_min, params.n_max);
  Graph g(n);
  const auto pairs = shuffled_pairs(rng, n);
  const int m = std::min<int>(static_cast<int>(pairs.size()),
                              rng.range(n, params.m_max));
  for (int t = 0; t < m; ++t)
    g.add_edge(pairs[t].first, pairs[t].second,
               random_cost(rng, params.max_cost_num, params.max_cost_den, 100),
               1 + static_cast<std::int64_t>(rng.below(params.cap_max)));

  const std::int64_t full_cut = min_capacitated_cut(g, g.all_edges());
  if (full_cut < 1) return std::nullopt;
  const int k =
      1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(full_cut)));
  return CapKecssInstance(std::move(g), k);
}

}  // namespace pdcover
