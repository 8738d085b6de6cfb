#include "pdcover/family.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "pdcover/errors.hpp"

namespace pdcover {

ExplicitFamily::ExplicitFamily(int n, const std::vector<VertexSet>& members)
    : n_(n) {
  for (const auto& s : members) add(s);
}

void ExplicitFamily::add(const VertexSet& s) {
  if (s.ground_size() != n_)
    throw InputDomainError("member over a different ground set");
  if (s.empty() || s.is_full())
    throw InputDomainError("the empty set and the full set cannot be members");
  if (index_.contains(s.bits())) return;
  index_.emplace(s.bits(), static_cast<int>(members_.size()));
  members_.push_back(s);
}

bool ExplicitFamily::contains(const VertexSet& s) const {
  return s.ground_size() == n_ && index_.contains(s.bits());
}

ExplicitFamily residual(const ExplicitFamily& fam, const EdgeSet& i,
                        const Graph& g) {
  if (fam.ground_set_size() != g.vertex_count())
    throw InputDomainError("family ground set does not match graph");
  ExplicitFamily out(fam.ground_set_size());
  for (const auto& s : fam.members())
    if (!covers(i, s, g)) out.add(s);
  return out;
}

std::vector<VertexSet> min_cores(const ExplicitFamily& fam, const EdgeSet& i,
                                 const Graph& g) {
  const ExplicitFamily res = residual(fam, i, g);
  std::vector<VertexSet> out;
  for (const auto& s : res.members()) {
    bool minimal = true;
    for (const auto& t : res.members()) {
      if (t.proper_subset_of(s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool crosses(const VertexSet& a, const VertexSet& b) {
  return !(a & b).empty() && !(a | b).is_full() && !a.minus(b).empty() &&
         !b.minus(a).empty();
}

bool overlaps(const VertexSet& a, const VertexSet& b) {
  return !(a & b).empty() && !a.minus(b).empty() && !b.minus(a).empty();
}

namespace {

// Membership with the empty set and the full set excluded by construction of
// ExplicitFamily, so a plain lookup suffices.
inline bool member(const ExplicitFamily& f, const VertexSet& s) {
  return f.contains(s);
}

}  // namespace

FamilyClass classify(const ExplicitFamily& fam) {
  FamilyClass c;
  c.uncrossable = true;
  c.semi_uncrossable = true;
  c.pliable = true;
  c.symmetric = true;

  for (const auto& s : fam.members())
    if (!member(fam, s.complement())) {
      c.symmetric = false;
      break;
    }

  const auto& ms = fam.members();
  for (std::size_t x = 0; x < ms.size(); ++x) {
    for (std::size_t y = x; y < ms.size(); ++y) {
      const VertexSet& a = ms[x];
      const VertexSet& b = ms[y];
      const bool cap = member(fam, a & b);
      const bool cup = member(fam, a | b);
      const bool ab = member(fam, a.minus(b));
      const bool ba = member(fam, b.minus(a));
      const int count = int(cap) + int(cup) + int(ab) + int(ba);
      if (count < 2) c.pliable = false;
      if (!((cap && cup) || (ab && ba))) c.uncrossable = false;
      if (!((cap && (cup || ab || ba)) || (ab && ba))) c.semi_uncrossable = false;
      if (!c.pliable && !c.uncrossable && !c.semi_uncrossable) break;
    }
  }
  // Semi-uncrossable families inherit the residual nesting property; plain
  // pliable families need check_gamma to earn the label.
  c.gamma_pliable = c.semi_uncrossable;
  PDCOVER_CHECK(!c.uncrossable || c.semi_uncrossable,
                "class containment: uncrossable implies semi-uncrossable");
  PDCOVER_CHECK(!c.semi_uncrossable || c.pliable,
                "class containment: semi-uncrossable implies pliable");
  return c;
}

std::string GammaCounterexample::to_string() const {
  std::string ids;
  for (int e : i.ids()) {
    if (!ids.empty()) ids += ",";
    ids += std::to_string(e);
  }
  return "I={" + ids + "} S1=" + s1.to_string() + " S2=" + s2.to_string() +
         " C=" + core.to_string();
}

namespace {

struct ResidualView {
  std::vector<int> alive;  // indices into fam.members()
};

// Checks the nested-pair condition for one residual family. Returns the first
// violation found, in deterministic order.
std::optional<GammaCounterexample> check_residual(
    const ExplicitFamily& fam, const std::vector<std::uint64_t>& cross_mask,
    const EdgeSet& i) {
  const auto& ms = fam.members();
  std::vector<int> alive;
  for (std::size_t t = 0; t < ms.size(); ++t)
    if ((cross_mask[t] & i.bits()) == 0) alive.push_back(static_cast<int>(t));
  if (alive.size() < 2) return std::nullopt;

  std::vector<int> cores;
  for (int s : alive) {
    bool minimal = true;
    for (int t : alive)
      if (t != s && ms[t].proper_subset_of(ms[s])) {
        minimal = false;
        break;
      }
    if (minimal) cores.push_back(s);
  }

  std::unordered_set<std::uint64_t> alive_bits;
  for (int s : alive) alive_bits.insert(ms[s].bits());

  for (int s1 : alive) {
    for (int s2 : alive) {
      if (s1 == s2 || !ms[s1].proper_subset_of(ms[s2])) continue;
      for (int c : cores) {
        if (!crosses(ms[c], ms[s1]) || !crosses(ms[c], ms[s2])) continue;
        const VertexSet rest = ms[s2].minus(ms[s1] | ms[c]);
        if (!rest.empty() && !alive_bits.contains(rest.bits()))
          return GammaCounterexample{i, ms[s1], ms[s2], ms[c]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

GammaCheckResult check_gamma(const ExplicitFamily& fam, const Graph& g,
                             GammaMode mode, int samples, std::uint64_t seed) {
  if (fam.ground_set_size() != g.vertex_count())
    throw InputDomainError("family ground set does not match graph");
  const int m = g.edge_count();
  if (mode == GammaMode::kExhaustive && m > 12)
    throw CapacityError(
        "exhaustive residual enumeration needs |E| <= 12 (got " +
        std::to_string(m) + "); use sampled mode");

  // Precompute each member's crossing-edge mask; residual membership under I
  // is then one AND.
  std::vector<std::uint64_t> cross_mask(fam.size(), 0);
  for (int t = 0; t < fam.size(); ++t)
    cross_mask[t] = delta(g.all_edges(), fam.members()[t], g).bits();

  GammaCheckResult result;
  std::unordered_set<std::uint64_t> seen_residuals;

  auto run_one = [&](const EdgeSet& i) -> bool {
    // Distinct edge sets often leave the same residual; skip repeats. The
    // alive-signature fits one word because families are desk-scale.
    std::uint64_t sig = 0;
    for (int t = 0; t < fam.size(); ++t)
      if ((cross_mask[t] & i.bits()) == 0 && t < 64)
        sig |= std::uint64_t{1} << t;
    if (fam.size() < 64 && !seen_residuals.insert(sig).second) return true;
    ++result.residuals_checked;
    auto cex = check_residual(fam, cross_mask, i);
    if (cex) {
      result.holds = false;
      result.counterexample = cex;
      return false;
    }
    return true;
  };

  result.holds = true;
  if (mode == GammaMode::kExhaustive) {
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t bits = 0; bits < limit; ++bits)
      if (!run_one(EdgeSet(bits))) return result;
  } else {
    std::mt19937_64 eng(seed);
    if (!run_one(EdgeSet(0))) return result;  // the family itself, always
    for (int t = 0; t < samples; ++t) {
      const std::uint64_t bits = eng() & VertexSet::mask(m);
      if (!run_one(EdgeSet(bits))) return result;
    }
  }
  return result;
}

std::vector<VertexSet> ExplicitFamilyOracle::min_cores(const EdgeSet& i,
                                                       const Graph& g) const {
  auto cores = pdcover::min_cores(fam_, i, g);
  if (pliable_) require_pairwise_disjoint(cores, "explicit family cores");
  return cores;
}

std::vector<VertexSet> min_cores_by_enumeration(
    int n, const std::function<bool(const VertexSet&)>& member,
    const EdgeSet& i, const Graph& g, int max_n) {
  if (n > max_n)
    throw CapacityError("enumeration oracle limited to " +
                        std::to_string(max_n) + " vertices (got " +
                        std::to_string(n) + ")");
  std::vector<VertexSet> cores;
  // Ascending popcount via Gosper's hack: any uncovered member strictly inside
  // S would have produced a core earlier, so containing no found core is
  // equivalent to minimality.
  for (int size = 1; size < n; ++size) {
    std::uint64_t bits = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (bits < limit) {
      const VertexSet s(n, bits);
      bool dominated = false;
      for (const auto& c : cores)
        if (c.subset_of(s)) {
          dominated = true;
          break;
        }
      if (!dominated && member(s) && !covers(i, s, g)) cores.push_back(s);
      // next mask with the same popcount
      const std::uint64_t c = bits & -bits;
      const std::uint64_t r = bits + c;
      if (r >= limit) break;
      bits = (((r ^ bits) >> 2) / c) | r;
    }
  }
  std::sort(cores.begin(), cores.end());
  return cores;
}

void require_pairwise_disjoint(const std::vector<VertexSet>& sets,
                               const char* context) {
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      PDCOVER_CHECK(!sets[a].intersects(sets[b]),
                    std::string(context) + ": cores " + sets[a].to_string() +
                        " and " + sets[b].to_string() + " intersect");
}

}  // namespace pdcover
