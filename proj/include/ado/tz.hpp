#pragma once

#include <cstdint>
#include <vector>

#include "ado/metric.hpp"

namespace ado {

struct EmptyLevel : MetricError {
  int level;
  explicit EmptyLevel(int i)
      : MetricError("level A_" + std::to_string(i) + " is empty"), level(i) {}
};
struct EmptySet : MetricError {
  using MetricError::MetricError;
};

// Nested level sets A_0 = V down to A_k = empty.
struct LevelChain {
  int k = 0;
  std::vector<std::vector<Vertex>> levels;  // size k+1, each sorted ascending

  const std::vector<Vertex>& level(int i) const { return levels[i]; }
};

// Throws unless levels has size k+1, A_0 = V, A_k = {}, each level is sorted
// unique and nested in the previous one.
void validate_chain(const MetricSpace& ms, const LevelChain& chain);

// Samples A_i from A_{i-1} element-wise with probability n^(-1/k). If
// A_{k-1} comes out empty the whole chain is resampled with a derived seed
// (up to 100 attempts); afterwards one vertex of the deepest non-empty level
// is forced into every empty level so the chain stays nested.
LevelChain tz_sample_levels(const MetricSpace& ms, int k, std::uint64_t seed);

struct TzCost {
  std::int64_t total = 0;
  std::vector<std::int64_t> per_level;  // per_level[i-1] = cost in level i
};

// Oracle size by level: per_level[i-1] = sum_u |R_iu|. Empty intermediate
// levels are allowed (min over the empty set is +infinity).
TzCost tz_cost(const MetricSpace& ms, const LevelChain& chain);

// k=2 cost in facility-location form: n|A1| + sum_u min_{w in A1} c(u,w).
std::int64_t tz2_cost_closed_form(const MetricSpace& ms,
                                  const std::vector<Vertex>& a1);

// Bunches plus pivots; immutable once built, queries never touch the metric.
class TzOracle {
 public:
  struct BunchEntry {
    Vertex v;
    Dist dist;
    int level;  // the i with v in R_iu
  };

  int k() const { return k_; }
  std::int64_t size() const { return size_; }  // sum_u sum_i |R_iu|

  const std::vector<BunchEntry>& bunch(Vertex u) const { return bunches_[u]; }
  std::vector<BunchEntry> bunch_level(Vertex u, int i) const;
  // Pivot of u at level i (1 <= i <= k-1) and its distance.
  std::pair<Vertex, Dist> pivot(Vertex u, int i) const {
    return pivots_[u][i - 1];
  }

  // Standard bunch walk; stretch 2k-1.
  Dist query(Vertex u, Vertex v) const;

  friend TzOracle tz_build(const MetricSpace& ms, const LevelChain& chain);

 private:
  bool bunch_lookup(Vertex u, Vertex v, Dist* out) const;

  int n_ = 0;
  int k_ = 0;
  std::int64_t size_ = 0;
  std::vector<std::vector<BunchEntry>> bunches_;              // by vertex id
  std::vector<std::vector<std::pair<Vertex, Dist>>> pivots_;  // [u][i-1]
};

// Requires every A_i with i <= k-1 to be non-empty (EmptyLevel otherwise).
TzOracle tz_build(const MetricSpace& ms, const LevelChain& chain);

Dist tz_query(const TzOracle& oracle, Vertex u, Vertex v);

// Convenience: chain with A_1 given explicitly (k = 2).
LevelChain make_chain_k2(const MetricSpace& ms, std::vector<Vertex> a1);

}  // namespace ado
