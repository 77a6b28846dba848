#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "ado/metric.hpp"
#include "ado/rng.hpp"
#include "ado/setcover.hpp"

namespace testutil {

// BFS distances on the n-cycle graph; independent oracle for gen_cycle.
inline std::vector<int> cycle_bfs(int n, int src) {
  std::vector<int> dist(n + 1, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    const int nb[2] = {u % n + 1, (u + n - 2) % n + 1};
    for (int v : nb)
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

// Random metric with size drawn from [lo, hi].
inline ado::MetricSpace random_metric(std::uint64_t seed, int lo, int hi,
                                      ado::Dist max_weight = 6) {
  ado::Rng rng(ado::derive_seed(seed, 7));
  const int n = static_cast<int>(rng.next_int(lo, hi));
  const double p = 0.25 + 0.5 * rng.next_double();
  return ado::gen_random_graph_metric(n, p, max_weight, ado::derive_seed(seed, 11));
}

// Random subset of 1..n (possibly empty).
inline std::vector<ado::Vertex> random_subset(int n, std::uint64_t seed,
                                              double p = 0.5) {
  ado::Rng rng(seed);
  std::vector<ado::Vertex> s;
  for (int v = 1; v <= n; ++v)
    if (rng.bernoulli(p)) s.push_back(v);
  return s;
}

inline std::vector<ado::Vertex> random_nonempty_subset(int n, std::uint64_t seed,
                                                       double p = 0.5) {
  auto s = random_subset(n, seed, p);
  if (s.empty()) {
    ado::Rng rng(ado::derive_seed(seed, 3));
    s.push_back(static_cast<int>(rng.next_int(1, n)));
  }
  return s;
}

// Random covering set-cover instance with |U| + |S| <= total_cap.
inline ado::SetCoverInstance random_setcover(std::uint64_t seed, int total_cap) {
  ado::Rng rng(seed);
  ado::SetCoverInstance sc;
  sc.n_elements = static_cast<int>(rng.next_int(1, total_cap - 1));
  const int n_sets = static_cast<int>(rng.next_int(1, total_cap - sc.n_elements));
  sc.sets.resize(n_sets);
  for (auto& s : sc.sets)
    for (int e = 1; e <= sc.n_elements; ++e)
      if (rng.bernoulli(0.5)) s.push_back(e);
  // patch uncovered elements into a random set
  for (int e = 1; e <= sc.n_elements; ++e) {
    bool covered = false;
    for (const auto& s : sc.sets) covered |= std::count(s.begin(), s.end(), e) > 0;
    if (!covered) {
      auto& s = sc.sets[rng.next_int(0, n_sets - 1)];
      s.push_back(e);
      std::sort(s.begin(), s.end());
    }
  }
  return sc;
}

}  // namespace testutil
