#include "ado/metric.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ado/rng.hpp"

namespace ado {

void MetricSpace::build_index() {
  sorted_.assign(n_ + 1, {});
  for (Vertex u = 1; u <= n_; ++u) {
    auto& row = sorted_[u];
    row.reserve(n_);
    for (Vertex v = 1; v <= n_; ++v) row.emplace_back(d(u, v), v);
    std::sort(row.begin(), row.end());
  }
}

MetricSpace MetricSpace::from_valid(int n, std::vector<Dist> flat) {
  MetricSpace ms;
  ms.n_ = n;
  ms.dist_ = std::move(flat);
  ms.build_index();
  return ms;
}

int MetricSpace::count_within(Vertex u, Dist r) const {
  const auto& row = sorted_[u];
  auto it = std::upper_bound(row.begin(), row.end(),
                             std::make_pair(r, std::numeric_limits<Vertex>::max()));
  return static_cast<int>(it - row.begin());
}

int MetricSpace::count_strictly_closer(Vertex u, Dist t) const {
  const auto& row = sorted_[u];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(t, 0));
  return static_cast<int>(it - row.begin());
}

std::vector<Vertex> MetricSpace::ball(Vertex u, Dist r) const {
  std::vector<Vertex> out;
  if (r < 0) return out;
  const auto& row = sorted_[u];
  const int m = count_within(u, r);
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.push_back(row[i].second);
  std::sort(out.begin(), out.end());
  return out;
}

Dist MetricSpace::max_distance() const {
  Dist m = 0;
  for (Vertex u = 1; u <= n_; ++u) m = std::max(m, sorted_[u].back().first);
  return m;
}

MetricSpace validate_metric(const std::vector<std::vector<Dist>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  if (n < 2) throw SizeTooSmall("metric needs n >= 2, got " + std::to_string(n));
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n)
      throw MetricError("matrix is not square");

  for (Vertex u = 1; u <= n; ++u) {
    if (matrix[u - 1][u - 1] != 0) throw NonzeroDiagonalError(u);
    for (Vertex v = 1; v <= n; ++v) {
      const Dist duv = matrix[u - 1][v - 1];
      if (duv < 0) throw NegativeDistance(u, v);
      if (u != v && duv == 0) throw MetricError(
          "zero distance between distinct vertices (" + std::to_string(u) +
          "," + std::to_string(v) + ")");
      if (duv != matrix[v - 1][u - 1]) throw AsymmetricError(u, v);
    }
  }
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v)
      for (Vertex w = 1; w <= n; ++w)
        if (matrix[u - 1][w - 1] > matrix[u - 1][v - 1] + matrix[v - 1][w - 1])
          throw TriangleViolation(u, v, w);

  std::vector<Dist> flat(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v)
      flat[static_cast<std::size_t>(u) * (n + 1) + v] = matrix[u - 1][v - 1];
  return MetricSpace::from_valid(n, std::move(flat));
}

std::vector<Vertex> ball_closed(const MetricSpace& ms, Vertex u, Dist r) {
  return ms.ball(u, r);
}

int strict_closer_count(const MetricSpace& ms, Vertex u, Vertex w) {
  return ms.count_strictly_closer(u, ms.d(u, w));
}

MetricSpace gen_cycle(int n) {
  if (n < 3) throw SizeTooSmall("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Dist> flat(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v) {
      const Dist gap = std::abs(u - v);
      flat[static_cast<std::size_t>(u) * (n + 1) + v] = std::min<Dist>(gap, n - gap);
    }
  return MetricSpace::from_valid(n, std::move(flat));
}

MetricSpace gen_uniform(int n) {
  if (n < 2) throw SizeTooSmall("uniform metric needs n >= 2");
  std::vector<Dist> flat(static_cast<std::size_t>(n + 1) * (n + 1), 1);
  for (Vertex u = 0; u <= n; ++u)
    flat[static_cast<std::size_t>(u) * (n + 1) + u] = 0;
  return MetricSpace::from_valid(n, std::move(flat));
}

namespace {

bool connected(int n, const std::vector<std::vector<Dist>>& w) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (!seen[v] && w[u][v] > 0) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n;
}

}  // namespace

MetricSpace gen_random_graph_metric(int n, double edge_prob, Dist max_weight,
                                    std::uint64_t seed) {
  if (n < 2) throw SizeTooSmall("random metric needs n >= 2");
  if (edge_prob <= 0.0 || edge_prob > 1.0)
    throw MetricError("edge_prob must be in (0,1]");
  if (max_weight < 1) throw MetricError("max_weight must be >= 1");

  std::vector<std::vector<Dist>> w(n, std::vector<Dist>(n, 0));
  for (int attempt = 0;; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    for (auto& row : w) std::fill(row.begin(), row.end(), 0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.bernoulli(edge_prob)) {
          const Dist wt = rng.next_int(1, max_weight);
          w[u][v] = w[v][u] = wt;
        }
    if (connected(n, w)) break;
    if (attempt >= 100) {
      // Hamiltonian path fallback guarantees connectivity.
      for (int u = 0; u + 1 < n; ++u)
        if (w[u][u + 1] == 0) {
          const Dist wt = rng.next_int(1, max_weight);
          w[u][u + 1] = w[u + 1][u] = wt;
        }
      break;
    }
  }

  // Floyd-Warshall closure.
  const Dist inf = std::numeric_limits<Dist>::max() / 4;
  std::vector<std::vector<Dist>> sp(n, std::vector<Dist>(n, inf));
  for (int u = 0; u < n; ++u) sp[u][u] = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (w[u][v] > 0) sp[u][v] = w[u][v];
  for (int k = 0; k < n; ++k)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        sp[u][v] = std::min(sp[u][v], sp[u][k] + sp[k][v]);

  std::vector<Dist> flat(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      flat[static_cast<std::size_t>(u + 1) * (n + 1) + (v + 1)] = sp[u][v];
  return MetricSpace::from_valid(n, std::move(flat));
}

}  // namespace ado
