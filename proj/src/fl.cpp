#include "ado/fl.hpp"

#include <algorithm>
#include <limits>

namespace ado {

void NmflInstance::validate() const {
  if (n_facilities < 1 || n_clients < 1)
    throw MetricError("facility location instance must be non-empty");
  if (static_cast<int>(open_cost.size()) != n_facilities + 1)
    throw MetricError("open_cost size mismatch");
  if (static_cast<int>(conn_cost.size()) != n_clients + 1)
    throw MetricError("conn_cost size mismatch");
  for (int i = 1; i <= n_facilities; ++i)
    if (open_cost[i] < 0) throw MetricError("negative opening cost");
  for (int c = 1; c <= n_clients; ++c) {
    if (static_cast<int>(conn_cost[c].size()) != n_facilities + 1)
      throw MetricError("conn_cost row size mismatch");
    for (int i = 1; i <= n_facilities; ++i)
      if (conn_cost[c][i] < 0) throw MetricError("negative connection cost");
  }
}

std::int64_t nmfl_objective(const NmflInstance& inst,
                            const std::vector<int>& open) {
  std::int64_t total = 0;
  for (int i : open) total += inst.open_cost[i];
  for (int c = 1; c <= inst.n_clients; ++c) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int i : open) best = std::min(best, inst.conn_cost[c][i]);
    total += best;
  }
  return total;
}

FlSolution nmfl_greedy(const NmflInstance& inst) {
  inst.validate();
  const int nf = inst.n_facilities, nc = inst.n_clients;

  std::vector<char> is_open(nf + 1, 0);
  std::vector<char> assigned(nc + 1, 0);
  int remaining = nc;
  std::vector<std::pair<std::int64_t, int>> bucket;  // (conn cost, client)

  while (remaining > 0) {
    // Best star so far as an exact fraction num/den.
    std::int64_t best_num = 0, best_den = 0;
    int best_fac = 0, best_size = 0;
    std::vector<int> best_clients;

    for (int i = 1; i <= nf; ++i) {
      const std::int64_t residual = is_open[i] ? 0 : inst.open_cost[i];
      bucket.clear();
      for (int c = 1; c <= nc; ++c)
        if (!assigned[c]) bucket.emplace_back(inst.conn_cost[c][i], c);
      std::sort(bucket.begin(), bucket.end());
      std::int64_t prefix = 0;
      for (int s = 1; s <= static_cast<int>(bucket.size()); ++s) {
        prefix += bucket[s - 1].first;
        const std::int64_t num = residual + prefix;
        // num/s < best_num/best_den, with (facility, size) tie order.
        bool better;
        if (best_den == 0) {
          better = true;
        } else {
          const std::int64_t lhs = num * best_den, rhs = best_num * s;
          better = lhs < rhs;  // equal ratios keep the earlier (fac, s)
        }
        if (better) {
          best_num = num;
          best_den = s;
          best_fac = i;
          best_size = s;
          best_clients.assign(s, 0);
          for (int j = 0; j < s; ++j) best_clients[j] = bucket[j].second;
        }
      }
    }

    is_open[best_fac] = 1;
    for (int c : best_clients) assigned[c] = 1;
    remaining -= best_size;
  }

  FlSolution sol;
  for (int i = 1; i <= nf; ++i)
    if (is_open[i]) sol.open.push_back(i);
  sol.assign.assign(nc + 1, 0);
  for (int c = 1; c <= nc; ++c) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int i : sol.open)
      if (inst.conn_cost[c][i] < best) {
        best = inst.conn_cost[c][i];
        sol.assign[c] = i;
      }
  }
  sol.cost = nmfl_objective(inst, sol.open);
  return sol;
}

NmflInstance build_nmfl(const MetricSpace& ms) {
  const int n = ms.n();
  NmflInstance inst;
  inst.n_facilities = inst.n_clients = n;
  inst.open_cost.assign(n + 1, n);
  inst.conn_cost.assign(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex w = 1; w <= n; ++w)
      inst.conn_cost[u][w] = strict_closer_count(ms, u, w);
  return inst;
}

std::vector<Vertex> tz2_optimize_greedy(const MetricSpace& ms) {
  const FlSolution sol = nmfl_greedy(build_nmfl(ms));
  return sol.open;
}

}  // namespace ado
