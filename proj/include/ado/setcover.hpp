#pragma once

#include <string>
#include <vector>

#include "ado/metric.hpp"

namespace ado {

struct EmptyInstance : MetricError {
  using MetricError::MetricError;
};

// Elements are ids 1..n_elements; sets are lists of element ids.
struct SetCoverInstance {
  int n_elements = 0;
  std::vector<std::vector<int>> sets;

  int n_sets() const { return static_cast<int>(sets.size()); }
  // Throws EmptyInstance / MetricError if an element is uncovered or out of
  // range, or the set list is empty.
  void validate() const;
};

// Hardness-reduction metric for set cover. Every element e and every set S
// gets a group of 3n vertices (n = |U|+|S|). Distances: 1 inside a group, 1
// between any two set groups, 1 between G_e and G_S when e is in S, and 2
// otherwise.
struct ReductionMap {
  SetCoverInstance instance;
  MetricSpace metric;
  std::vector<int> group_of_vertex;            // vertex id -> group id (1-based)
  std::vector<std::vector<Vertex>> vertices_of_group;  // group id -> vertices

  int n_groups() const { return instance.n_elements + instance.n_sets(); }
  int group_size() const { return 3 * n_groups(); }
  // Group ids: elements occupy 1..n_elements, then sets.
  int group_of_element(int e) const { return e; }
  int group_of_set(int s) const { return instance.n_elements + s; }
  bool is_set_group(int g) const { return g > instance.n_elements; }
  int set_of_group(int g) const { return g - instance.n_elements; }
};

ReductionMap gen_setcover_reduction(const SetCoverInstance& sc);

// Text format: first line "<n_elements> <n_sets>", then one line per set
// listing its element ids.
SetCoverInstance parse_setcover(const std::string& text);
std::string format_setcover(const SetCoverInstance& sc);

}  // namespace ado
