#include "ado/brute.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace ado {

namespace {
constexpr Dist kInf = std::numeric_limits<Dist>::max() / 4;

std::vector<Vertex> mask_to_set(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (int v = 1; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}
}  // namespace

std::pair<LevelChain, std::int64_t> brute_tz(const MetricSpace& ms, int k) {
  const int n = ms.n();
  if (k == 2) {
    if (n > 16) throw TooLarge("brute_tz with k=2 needs n <= 16");
    // Connection-cost matrix once; cost(A1) = n|A1| + sum_u min_{w in A1} scc.
    std::vector<std::vector<int>> scc(n + 1, std::vector<int>(n + 1, 0));
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex w = 1; w <= n; ++w) scc[u][w] = strict_closer_count(ms, u, w);

    std::int64_t best_cost = static_cast<std::int64_t>(n) * n;  // A1 = {}
    std::vector<Vertex> best_a1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::int64_t cost =
          static_cast<std::int64_t>(n) * std::popcount(mask);
      for (Vertex u = 1; u <= n && cost <= best_cost; ++u) {
        int mn = n;
        for (int w = 1; w <= n; ++w)
          if (mask & (1u << (w - 1))) mn = std::min(mn, scc[u][w]);
        cost += mn;
      }
      if (cost < best_cost) {
        best_cost = cost;
        best_a1 = mask_to_set(mask);
      } else if (cost == best_cost) {
        auto cand = mask_to_set(mask);
        if (cand < best_a1) best_a1 = std::move(cand);
      }
    }
    LevelChain chain = make_chain_k2(ms, best_a1);
    return {chain, best_cost};
  }

  if (k == 3) {
    if (n > 12) throw TooLarge("brute_tz with k=3 needs n <= 12");
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
    std::uint32_t best_m1 = 0, best_m2 = 0;
    std::vector<Dist> d1(n + 1), d2(n + 1);

    for (std::uint32_t m1 = 0; m1 < (1u << n); ++m1) {
      for (std::uint32_t m2 = m1;; m2 = (m2 - 1) & m1) {
        std::int64_t cost = 0;
        for (Vertex u = 1; u <= n; ++u) {
          Dist a = kInf, b = kInf;
          for (Vertex v = 1; v <= n; ++v) {
            if (m1 & (1u << (v - 1))) a = std::min(a, ms.d(u, v));
            if (m2 & (1u << (v - 1))) b = std::min(b, ms.d(u, v));
          }
          d1[u] = a;
          d2[u] = b;
        }
        for (Vertex u = 1; u <= n; ++u) {
          for (Vertex v = 1; v <= n; ++v) {
            const bool in1 = m1 & (1u << (v - 1));
            const bool in2 = m2 & (1u << (v - 1));
            const Dist duv = ms.d(u, v);
            if (in2) {
              ++cost;  // level 3: d < inf
            } else if (in1) {
              if (duv < d2[u]) ++cost;
            } else {
              if (duv < d1[u]) ++cost;
            }
          }
        }
        auto better_tie = [&]() {
          auto c1 = mask_to_set(m1), b1 = mask_to_set(best_m1);
          if (c1 != b1) return c1 < b1;
          return mask_to_set(m2) < mask_to_set(best_m2);
        };
        if (cost < best_cost ||
            (cost == best_cost && better_tie())) {
          best_cost = cost;
          best_m1 = m1;
          best_m2 = m2;
        }
        if (m2 == 0) break;
      }
    }

    LevelChain chain;
    chain.k = 3;
    chain.levels.assign(4, {});
    for (Vertex v = 1; v <= n; ++v) chain.levels[0].push_back(v);
    chain.levels[1] = mask_to_set(best_m1);
    chain.levels[2] = mask_to_set(best_m2);
    return {chain, best_cost};
  }

  throw TooLarge("brute_tz supports k in {2,3}");
}

std::pair<std::vector<Vertex>, std::int64_t> brute_pr(const MetricSpace& ms) {
  const int n = ms.n();
  if (n > 16) throw TooLarge("brute_pr needs n <= 16");
  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
  std::vector<Vertex> best_a;
  std::vector<Dist> da(n + 1);

  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (Vertex u = 1; u <= n; ++u) {
      Dist d = kInf;
      for (Vertex w = 1; w <= n; ++w)
        if (mask & (1u << (w - 1))) d = std::min(d, ms.d(u, w));
      da[u] = d;
    }
    std::int64_t cost = static_cast<std::int64_t>(n) * std::popcount(mask);
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        if (ms.d(u, v) < da[u] + da[v] - 1) ++cost;
    if (cost < best_cost) {
      best_cost = cost;
      best_a = mask_to_set(mask);
    } else if (cost == best_cost) {
      auto cand = mask_to_set(mask);
      if (cand < best_a) best_a = std::move(cand);
    }
  }
  return {best_a, best_cost};
}

std::pair<std::vector<Vertex>, std::int64_t> brute_pr_normalized(
    const ReductionMap& rm) {
  const int m = rm.instance.n_sets();
  if (m > 12) throw TooLarge("brute_pr_normalized needs |S| <= 12");
  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
  std::vector<Vertex> best_a;

  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Vertex> a;
    for (int s = 1; s <= m; ++s)
      if (mask & (1u << (s - 1)))
        a.push_back(rm.vertices_of_group[rm.group_of_set(s)][0]);
    const std::int64_t cost = pr_cost(rm.metric, a);
    if (cost < best_cost || (cost == best_cost && a < best_a)) {
      best_cost = cost;
      best_a = std::move(a);
    }
  }
  return {best_a, best_cost};
}

OutlierOpt brute_outliers(const MetricSpace& ms, int f, OutlierProblem problem) {
  const int n = ms.n();
  if (n > 10) throw TooLarge("brute_outliers needs n <= 10");
  if (f < 0 || f > n) throw MetricError("outlier budget out of range");

  OutlierOpt best;
  best.cost = std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t fm = 0; fm < (1u << n); ++fm) {
    if (std::popcount(fm) > f) continue;
    const auto f_set = mask_to_set(fm);
    for (std::uint32_t am = 0; am < (1u << n); ++am) {
      const auto a = mask_to_set(am);
      const std::int64_t cost = problem == OutlierProblem::Tz2
                                    ? tz2_cost_outliers(ms, a, f_set, f)
                                    : pr_cost_outliers(ms, a, f_set, f);
      if (cost < best.cost ||
          (cost == best.cost &&
           (a < best.a || (a == best.a && f_set < best.f)))) {
        best.cost = cost;
        best.a = a;
        best.f = f_set;
      }
    }
  }
  return best;
}

int set_cover_opt(const SetCoverInstance& sc) {
  sc.validate();
  const int m = sc.n_sets();
  if (m > 20) throw TooLarge("set_cover_opt needs <= 20 sets");
  const std::uint32_t full = (1u << sc.n_elements) - 1;
  std::vector<std::uint32_t> cover_mask(m);
  for (int s = 0; s < m; ++s)
    for (int e : sc.sets[s]) cover_mask[s] |= 1u << (e - 1);

  int best = m + 1;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::uint32_t got = 0;
    for (int s = 0; s < m; ++s)
      if (mask & (1u << s)) got |= cover_mask[s];
    if (got == full) best = std::min(best, std::popcount(mask));
  }
  return best;
}

}  // namespace ado
