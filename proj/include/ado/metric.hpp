#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ado {

using Vertex = int;            // dense ids 1..n
using Dist = std::int64_t;     // distances are non-negative integers

struct MetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AsymmetricError : MetricError {
  Vertex u, v;
  AsymmetricError(Vertex u_, Vertex v_)
      : MetricError("asymmetric entries at (" + std::to_string(u_) + "," +
                    std::to_string(v_) + ")"),
        u(u_), v(v_) {}
};
struct NonzeroDiagonalError : MetricError {
  Vertex u;
  explicit NonzeroDiagonalError(Vertex u_)
      : MetricError("nonzero diagonal at " + std::to_string(u_)), u(u_) {}
};
struct NegativeDistance : MetricError {
  Vertex u, v;
  NegativeDistance(Vertex u_, Vertex v_)
      : MetricError("negative distance at (" + std::to_string(u_) + "," +
                    std::to_string(v_) + ")"),
        u(u_), v(v_) {}
};
struct TriangleViolation : MetricError {
  Vertex u, v, w;
  TriangleViolation(Vertex u_, Vertex v_, Vertex w_)
      : MetricError("triangle inequality violated at (" + std::to_string(u_) +
                    "," + std::to_string(v_) + "," + std::to_string(w_) + ")"),
        u(u_), v(v_), w(w_) {}
};
struct SizeTooSmall : MetricError {
  using MetricError::MetricError;
};

// Immutable finite metric space with integer distances. A per-vertex
// distance-sorted index is built once at construction so that ball queries
// and closer-than counts are O(log n).
class MetricSpace {
 public:
  MetricSpace() = default;  // empty placeholder; n() == 0

  int n() const { return n_; }

  Dist d(Vertex u, Vertex v) const { return dist_[idx(u, v)]; }

  // |{v in V : d(u,v) <= r}|
  int count_within(Vertex u, Dist r) const;
  // |{v in V : d(u,v) < t}|
  int count_strictly_closer(Vertex u, Dist t) const;

  // Vertices of B(u,r) in ascending id order. r < 0 yields the empty set.
  std::vector<Vertex> ball(Vertex u, Dist r) const;

  // (distance, vertex) pairs sorted by (distance, id); entry 0 is (0, u).
  const std::vector<std::pair<Dist, Vertex>>& sorted_row(Vertex u) const {
    return sorted_[u];
  }

  Dist max_distance() const;

  // Construction bypassing validation; callers must supply a valid metric.
  static MetricSpace from_valid(int n, std::vector<Dist> flat);

 private:
  void build_index();
  std::size_t idx(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * (n_ + 1) + v;
  }

  int n_ = 0;
  std::vector<Dist> dist_;  // (n+1)x(n+1), row 0 unused
  std::vector<std::vector<std::pair<Dist, Vertex>>> sorted_;
};

// Checks symmetry, zero diagonal, positivity off the diagonal and the
// triangle inequality; throws the corresponding MetricError subclass.
MetricSpace validate_metric(const std::vector<std::vector<Dist>>& matrix);

// B(u,r) = {w : d(u,w) <= r}. B_u(v) is ball_closed(ms, u, ms.d(u,v)).
std::vector<Vertex> ball_closed(const MetricSpace& ms, Vertex u, Dist r);

// c(u,w) = |{v : d(u,v) < d(u,w)}|; ties are excluded.
int strict_closer_count(const MetricSpace& ms, Vertex u, Vertex w);

// Shortest-path metric of the n-cycle: d(u,v) = min(|u-v|, n-|u-v|).
MetricSpace gen_cycle(int n);

// All-ones off-diagonal metric; handy degenerate case.
MetricSpace gen_uniform(int n);

// Erdos-Renyi graph with uniform integer weights in [1, max_weight],
// resampled until connected (after 100 rejections a Hamiltonian path is
// added), then closed under all-pairs shortest paths.
MetricSpace gen_random_graph_metric(int n, double edge_prob, Dist max_weight,
                                    std::uint64_t seed);

}  // namespace ado
