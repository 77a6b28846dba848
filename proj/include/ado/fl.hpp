#pragma once

#include <cstdint>
#include <vector>

#include "ado/metric.hpp"

namespace ado {

// Non-metric facility location: facilities and clients are ids 1..F / 1..D.
struct NmflInstance {
  int n_facilities = 0;
  int n_clients = 0;
  std::vector<std::int64_t> open_cost;               // [facility]
  std::vector<std::vector<std::int64_t>> conn_cost;  // [client][facility]

  void validate() const;
};

struct FlSolution {
  std::vector<int> open;    // sorted facility ids
  std::vector<int> assign;  // client -> cheapest open facility (ties: lowest id)
  std::int64_t cost = 0;    // sum of opening costs + best-assignment costs
};

// Objective of an open set under best assignment.
std::int64_t nmfl_objective(const NmflInstance& inst,
                            const std::vector<int>& open);

// Star greedy with residual opening costs: each round picks the (facility,
// client-prefix) star with the smallest (residual open + connection)/size
// ratio, ties to lower facility id then smaller star. H(|D|)-approximate.
FlSolution nmfl_greedy(const NmflInstance& inst);

// F = D = V, opening cost n everywhere, connection cost c(u,w) =
// strict_closer_count(u,w): the TZ_2 cost in facility-location form.
NmflInstance build_nmfl(const MetricSpace& ms);

// Landmark set for the stretch-3 oracle via the reduction above.
std::vector<Vertex> tz2_optimize_greedy(const MetricSpace& ms);

}  // namespace ado
