#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ado/metric.hpp"
#include "ado/setcover.hpp"

namespace ado {

struct EmptyLandmarkSet : MetricError {
  using MetricError::MetricError;
};
struct InternalInvariantViolation : MetricError {
  using MetricError::MetricError;
};

// Landmark oracle with (2,1) stretch: full distance rows for the landmark
// set A, nearest-landmark pivots, and exact distances for the pair set
// R = {{u,v} : d(u,v) < d(u,A) + d(v,A) - 1}.
class PrOracle {
 public:
  int n() const { return n_; }
  const std::vector<Vertex>& landmarks() const { return a_; }
  Vertex nearest(Vertex u) const { return nearest_[u]; }
  Dist dist_to_landmarks(Vertex u) const { return dist_a_[u]; }
  std::int64_t exact_pair_count() const {
    return static_cast<std::int64_t>(exact_.size());
  }
  std::int64_t cost() const {
    return static_cast<std::int64_t>(n_) * a_.size() + exact_pair_count();
  }
  bool exact_pair(Vertex u, Vertex v, Dist* out) const;

  Dist query(Vertex u, Vertex v) const;

  friend PrOracle pr_build(const MetricSpace& ms, const std::vector<Vertex>& a);

 private:
  int n_ = 0;
  std::vector<Vertex> a_;            // sorted landmark ids
  std::vector<int> a_pos_;           // vertex -> index into a_, or -1
  std::vector<Vertex> nearest_;      // a(u), ties to lowest id
  std::vector<Dist> dist_a_;         // d(u, A)
  std::vector<std::vector<Dist>> rows_;  // rows_[i][v] = d(a_[i], v)
  std::unordered_map<std::uint64_t, Dist> exact_;
};

PrOracle pr_build(const MetricSpace& ms, const std::vector<Vertex>& a);

// n|A| + |R|; A may be empty (every pair is then exact).
std::int64_t pr_cost(const MetricSpace& ms, const std::vector<Vertex>& a);

Dist pr_query(const PrOracle& oracle, Vertex u, Vertex v);

// Outlier variants. Outliers cannot serve as landmarks: A is replaced by
// A \ F and both cost sums run over V \ F; f is the outlier budget being
// evaluated, not |F|.
std::int64_t pr_cost_outliers(const MetricSpace& ms, const std::vector<Vertex>& a,
                              const std::vector<Vertex>& f_set, int f);
std::int64_t tz2_cost_outliers(const MetricSpace& ms, const std::vector<Vertex>& a,
                               const std::vector<Vertex>& f_set, int f);

// Normalizes a landmark set over a set-cover reduction into one that touches
// only set groups, asserting at every step that pr_cost does not increase,
// and returns the covering sets {s : G_S(s) meets the normalized A}.
std::vector<int> extract_cover(const ReductionMap& rm,
                               const std::vector<Vertex>& a);

}  // namespace ado
