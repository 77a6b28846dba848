#include "ado/tz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ado/rng.hpp"

namespace ado {

namespace {
constexpr Dist kInf = std::numeric_limits<Dist>::max() / 4;

bool sorted_unique(const std::vector<Vertex>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

bool subset_of(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// d(u, S) over a sorted set; +inf on the empty set.
Dist dist_to_set(const MetricSpace& ms, Vertex u, const std::vector<Vertex>& s) {
  Dist best = kInf;
  for (Vertex w : s) best = std::min(best, ms.d(u, w));
  return best;
}
}  // namespace

void validate_chain(const MetricSpace& ms, const LevelChain& chain) {
  if (chain.k < 1) throw MetricError("chain needs k >= 1");
  if (static_cast<int>(chain.levels.size()) != chain.k + 1)
    throw MetricError("chain must have k+1 levels");
  if (static_cast<int>(chain.levels[0].size()) != ms.n())
    throw MetricError("A_0 must be V");
  if (!chain.levels[chain.k].empty()) throw MetricError("A_k must be empty");
  for (int i = 0; i <= chain.k; ++i) {
    const auto& lvl = chain.levels[i];
    if (!sorted_unique(lvl)) throw MetricError("levels must be sorted unique");
    for (Vertex v : lvl)
      if (v < 1 || v > ms.n()) throw MetricError("vertex id out of range");
    if (i > 0 && !subset_of(lvl, chain.levels[i - 1]))
      throw MetricError("A_" + std::to_string(i) + " not nested in A_" +
                        std::to_string(i - 1));
  }
}

LevelChain tz_sample_levels(const MetricSpace& ms, int k, std::uint64_t seed) {
  if (k < 1) throw MetricError("k must be >= 1");
  const int n = ms.n();
  LevelChain chain;
  chain.k = k;
  chain.levels.assign(k + 1, {});
  for (Vertex v = 1; v <= n; ++v) chain.levels[0].push_back(v);
  if (k == 1) return chain;

  const double p = std::pow(static_cast<double>(n), -1.0 / k);
  for (int attempt = 0; attempt <= 100; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    for (int i = 1; i <= k - 1; ++i) {
      chain.levels[i].clear();
      for (Vertex v : chain.levels[i - 1])
        if (rng.bernoulli(p)) chain.levels[i].push_back(v);
    }
    if (!chain.levels[k - 1].empty()) return chain;
    if (attempt == 100) {
      // Force one vertex of the deepest non-empty level into every empty
      // level; picking it there keeps the chain nested.
      int m = k - 1;
      while (chain.levels[m].empty()) --m;
      const auto& src = chain.levels[m];
      const Vertex forced =
          src[static_cast<std::size_t>(rng.next_int(0, src.size() - 1))];
      for (int i = m + 1; i <= k - 1; ++i) chain.levels[i].push_back(forced);
      return chain;
    }
  }
  return chain;  // unreachable
}

TzCost tz_cost(const MetricSpace& ms, const LevelChain& chain) {
  validate_chain(ms, chain);
  const int n = ms.n();
  const int k = chain.k;

  // Drop level of v: the i in [1,k] with v in A_{i-1} \ A_i.
  std::vector<int> drop(n + 1, 1);
  for (int i = 1; i <= k; ++i)
    for (Vertex v : chain.levels[i]) drop[v] = i + 1;

  TzCost cost;
  cost.per_level.assign(k, 0);
  std::vector<Dist> min_at(k + 1, 0);
  for (Vertex u = 1; u <= n; ++u) {
    for (int i = 1; i <= k; ++i) min_at[i] = dist_to_set(ms, u, chain.levels[i]);
    for (Vertex v = 1; v <= n; ++v) {
      const int i = drop[v];
      if (ms.d(u, v) < min_at[i]) ++cost.per_level[i - 1];
    }
  }
  for (auto c : cost.per_level) cost.total += c;
  return cost;
}

std::int64_t tz2_cost_closed_form(const MetricSpace& ms,
                                  const std::vector<Vertex>& a1) {
  if (a1.empty()) throw EmptySet("tz2 closed form needs a non-empty A_1");
  const int n = ms.n();
  std::int64_t total = static_cast<std::int64_t>(n) * a1.size();
  for (Vertex u = 1; u <= n; ++u) {
    int best = n;  // c(u,w) < n always
    for (Vertex w : a1) best = std::min(best, strict_closer_count(ms, u, w));
    total += best;
  }
  return total;
}

std::vector<TzOracle::BunchEntry> TzOracle::bunch_level(Vertex u, int i) const {
  std::vector<BunchEntry> out;
  for (const auto& e : bunches_[u])
    if (e.level == i) out.push_back(e);
  return out;
}

bool TzOracle::bunch_lookup(Vertex u, Vertex v, Dist* out) const {
  const auto& b = bunches_[u];
  auto it = std::lower_bound(
      b.begin(), b.end(), v,
      [](const BunchEntry& e, Vertex x) { return e.v < x; });
  if (it == b.end() || it->v != v) return false;
  *out = it->dist;
  return true;
}

TzOracle tz_build(const MetricSpace& ms, const LevelChain& chain) {
  validate_chain(ms, chain);
  const int n = ms.n();
  const int k = chain.k;
  for (int i = 1; i <= k - 1; ++i)
    if (chain.levels[i].empty()) throw EmptyLevel(i);

  TzOracle o;
  o.n_ = n;
  o.k_ = k;
  o.bunches_.assign(n + 1, {});
  o.pivots_.assign(n + 1, std::vector<std::pair<Vertex, Dist>>(
                              std::max(0, k - 1), {0, 0}));

  std::vector<int> drop(n + 1, 1);
  for (int i = 1; i <= k; ++i)
    for (Vertex v : chain.levels[i]) drop[v] = i + 1;

  std::vector<Dist> min_at(k + 1, 0);
  for (Vertex u = 1; u <= n; ++u) {
    for (int i = 1; i <= k; ++i) min_at[i] = dist_to_set(ms, u, chain.levels[i]);
    // Pivots: nearest vertex per level, ties to the lowest id. Levels are
    // sorted ascending, so the first strict improvement wins.
    for (int i = 1; i <= k - 1; ++i) {
      Vertex arg = 0;
      Dist best = kInf;
      for (Vertex w : chain.levels[i])
        if (ms.d(u, w) < best) {
          best = ms.d(u, w);
          arg = w;
        }
      o.pivots_[u][i - 1] = {arg, best};
    }
    for (Vertex v = 1; v <= n; ++v) {
      const int i = drop[v];
      if (ms.d(u, v) < min_at[i])
        o.bunches_[u].push_back({v, ms.d(u, v), i});
    }
    // already ascending in v by construction
    o.size_ += static_cast<std::int64_t>(o.bunches_[u].size());
  }
  return o;
}

Dist TzOracle::query(Vertex u, Vertex v) const {
  Vertex w = u;
  Dist d_uw = 0;
  int i = 0;
  Dist d_wv = 0;
  while (!bunch_lookup(v, w, &d_wv)) {
    ++i;
    if (i > k_ - 1)
      throw MetricError("bunch walk failed to terminate; oracle corrupt");
    std::swap(u, v);
    const auto [pw, pd] = pivots_[u][i - 1];
    w = pw;
    d_uw = pd;
  }
  return d_uw + d_wv;
}

Dist tz_query(const TzOracle& oracle, Vertex u, Vertex v) {
  return oracle.query(u, v);
}

LevelChain make_chain_k2(const MetricSpace& ms, std::vector<Vertex> a1) {
  std::sort(a1.begin(), a1.end());
  a1.erase(std::unique(a1.begin(), a1.end()), a1.end());
  LevelChain chain;
  chain.k = 2;
  chain.levels.assign(3, {});
  for (Vertex v = 1; v <= ms.n(); ++v) chain.levels[0].push_back(v);
  chain.levels[1] = std::move(a1);
  return chain;
}

}  // namespace ado
