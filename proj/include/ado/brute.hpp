#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ado/metric.hpp"
#include "ado/pr.hpp"
#include "ado/setcover.hpp"
#include "ado/tz.hpp"

namespace ado {

struct TooLarge : MetricError {
  using MetricError::MetricError;
};

// Exhaustive optima; ground truth for every approximation and relaxation
// claim. Ties resolve to the lexicographically smallest solution (id lists
// compared level by level).

// k = 2 enumerates all 2^n subsets (n <= 16); k = 3 all 3^n nested pairs
// (n <= 12).
std::pair<LevelChain, std::int64_t> brute_tz(const MetricSpace& ms, int k);

std::pair<std::vector<Vertex>, std::int64_t> brute_pr(const MetricSpace& ms);

// Minimum over landmark sets touching only set groups, one representative
// per group; equals the global optimum on reduction instances by the
// normalization argument (asserted in tests via extract_cover).
std::pair<std::vector<Vertex>, std::int64_t> brute_pr_normalized(
    const ReductionMap& rm);

enum class OutlierProblem { Tz2, Pr };

struct OutlierOpt {
  std::vector<Vertex> a;
  std::vector<Vertex> f;
  std::int64_t cost = 0;
};

// Enumerates all A subsets and all F with |F| <= f (n <= 10).
OutlierOpt brute_outliers(const MetricSpace& ms, int f, OutlierProblem problem);

// Exhaustive set cover optimum (n_sets <= 20).
int set_cover_opt(const SetCoverInstance& sc);

}  // namespace ado
