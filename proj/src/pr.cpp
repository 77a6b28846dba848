#include "ado/pr.hpp"

#include <algorithm>
#include <limits>

namespace ado {

namespace {
constexpr Dist kInf = std::numeric_limits<Dist>::max() / 4;

std::uint64_t pair_key(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) * (n + 1) + v;
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// d(u, A) per vertex over a sorted landmark list; kInf when A is empty.
std::vector<Dist> dists_to_set(const MetricSpace& ms,
                               const std::vector<Vertex>& a) {
  std::vector<Dist> d(ms.n() + 1, kInf);
  for (Vertex u = 1; u <= ms.n(); ++u)
    for (Vertex w : a) d[u] = std::min(d[u], ms.d(u, w));
  return d;
}
}  // namespace

PrOracle pr_build(const MetricSpace& ms, const std::vector<Vertex>& a) {
  if (a.empty()) throw EmptyLandmarkSet("PR oracle needs a non-empty A");
  const int n = ms.n();

  PrOracle o;
  o.n_ = n;
  o.a_ = sorted_unique(a);
  o.a_pos_.assign(n + 1, -1);
  o.nearest_.assign(n + 1, 0);
  o.dist_a_.assign(n + 1, kInf);
  for (std::size_t i = 0; i < o.a_.size(); ++i) o.a_pos_[o.a_[i]] = static_cast<int>(i);

  for (Vertex u = 1; u <= n; ++u)
    for (Vertex w : o.a_)  // ascending ids, strict < keeps the lowest on ties
      if (ms.d(u, w) < o.dist_a_[u]) {
        o.dist_a_[u] = ms.d(u, w);
        o.nearest_[u] = w;
      }

  o.rows_.assign(o.a_.size(), std::vector<Dist>(n + 1, 0));
  for (std::size_t i = 0; i < o.a_.size(); ++i)
    for (Vertex v = 1; v <= n; ++v) o.rows_[i][v] = ms.d(o.a_[i], v);

  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (ms.d(u, v) < o.dist_a_[u] + o.dist_a_[v] - 1)
        o.exact_.emplace(pair_key(n, u, v), ms.d(u, v));
  return o;
}

bool PrOracle::exact_pair(Vertex u, Vertex v, Dist* out) const {
  auto it = exact_.find(pair_key(n_, u, v));
  if (it == exact_.end()) return false;
  *out = it->second;
  return true;
}

Dist PrOracle::query(Vertex u, Vertex v) const {
  if (u == v) return 0;
  Dist exact;
  if (exact_pair(u, v, &exact)) return exact;
  const Vertex au = nearest_[u], av = nearest_[v];
  const Dist via_u = dist_a_[u] + rows_[a_pos_[au]][v];
  const Dist via_v = dist_a_[v] + rows_[a_pos_[av]][u];
  return std::min(via_u, via_v);
}

Dist pr_query(const PrOracle& oracle, Vertex u, Vertex v) {
  return oracle.query(u, v);
}

std::int64_t pr_cost(const MetricSpace& ms, const std::vector<Vertex>& a) {
  const int n = ms.n();
  const auto a_sorted = sorted_unique(a);
  const auto da = dists_to_set(ms, a_sorted);
  std::int64_t pairs = 0;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (ms.d(u, v) < da[u] + da[v] - 1) ++pairs;
  return static_cast<std::int64_t>(n) * a_sorted.size() + pairs;
}

namespace {
// Shared implementation: survivors = V \ F, landmarks = A \ F.
struct OutlierView {
  std::vector<Vertex> landmarks;
  std::vector<char> removed;
};

OutlierView outlier_view(int n, const std::vector<Vertex>& a,
                         const std::vector<Vertex>& f_set) {
  OutlierView view;
  view.removed.assign(n + 1, 0);
  for (Vertex v : f_set) view.removed[v] = 1;
  for (Vertex v : sorted_unique(a))
    if (!view.removed[v]) view.landmarks.push_back(v);
  return view;
}
}  // namespace

std::int64_t pr_cost_outliers(const MetricSpace& ms, const std::vector<Vertex>& a,
                              const std::vector<Vertex>& f_set, int f) {
  const int n = ms.n();
  const auto view = outlier_view(n, a, f_set);
  const auto da = dists_to_set(ms, view.landmarks);
  std::int64_t pairs = 0;
  for (Vertex u = 1; u <= n; ++u) {
    if (view.removed[u]) continue;
    for (Vertex v = u + 1; v <= n; ++v) {
      if (view.removed[v]) continue;
      if (ms.d(u, v) < da[u] + da[v] - 1) ++pairs;
    }
  }
  return static_cast<std::int64_t>(n - f) * view.landmarks.size() + pairs;
}

std::int64_t tz2_cost_outliers(const MetricSpace& ms, const std::vector<Vertex>& a,
                               const std::vector<Vertex>& f_set, int f) {
  const int n = ms.n();
  const auto view = outlier_view(n, a, f_set);
  const auto da = dists_to_set(ms, view.landmarks);
  std::int64_t bunch_total = 0;
  for (Vertex u = 1; u <= n; ++u) {
    if (view.removed[u]) continue;
    for (Vertex v = 1; v <= n; ++v) {
      if (view.removed[v]) continue;
      if (ms.d(u, v) < da[u]) ++bunch_total;
    }
  }
  return static_cast<std::int64_t>(n - f) * view.landmarks.size() + bunch_total;
}

std::vector<int> extract_cover(const ReductionMap& rm,
                               const std::vector<Vertex>& a_in) {
  const auto& ms = rm.metric;
  const int groups = rm.n_groups();
  std::vector<Vertex> a = sorted_unique(a_in);
  std::int64_t cost = pr_cost(ms, a);

  auto group_adjacent = [&](int ga, int gb) {
    if (ga == gb) return true;
    return ms.d(rm.vertices_of_group[ga][0], rm.vertices_of_group[gb][0]) == 1;
  };
  auto covered = [&](int g) {
    for (Vertex w : a)
      if (group_adjacent(g, rm.group_of_vertex[w])) return true;
    return false;
  };
  auto apply = [&](std::vector<Vertex> next, const char* step) {
    next = sorted_unique(std::move(next));
    const std::int64_t next_cost = pr_cost(ms, next);
    if (next_cost > cost)
      throw InternalInvariantViolation(
          std::string("extract_cover: cost increased during ") + step);
    a = std::move(next);
    cost = next_cost;
  };

  // Step 1: cover every group. Adding a vertex of an uncovered group clears
  // more exact pairs than the n|A| term gains.
  for (int g = 1; g <= groups; ++g) {
    if (covered(g)) continue;
    auto next = a;
    next.push_back(rm.vertices_of_group[g][0]);
    apply(std::move(next), "group covering");
  }

  // Step 2: move element-group vertices into a set group containing that
  // element; coverage is preserved, so the exact-pair set stays empty.
  for (;;) {
    Vertex moved = 0;
    int elem = 0;
    for (Vertex v : a) {
      const int g = rm.group_of_vertex[v];
      if (!rm.is_set_group(g)) {
        moved = v;
        elem = g;  // element groups are ids 1..n_elements
        break;
      }
    }
    if (moved == 0) break;
    int chosen_set = 0;
    for (int s = 1; s <= rm.instance.n_sets() && chosen_set == 0; ++s)
      for (int e : rm.instance.sets[s - 1])
        if (e == elem) {
          chosen_set = s;
          break;
        }
    if (chosen_set == 0)
      throw InternalInvariantViolation("extract_cover: uncovered element");
    std::vector<Vertex> next;
    for (Vertex v : a)
      if (v != moved) next.push_back(v);
    next.push_back(rm.vertices_of_group[rm.group_of_set(chosen_set)][0]);
    apply(std::move(next), "element-to-set swap");
  }

  std::vector<int> cover;
  for (int s = 1; s <= rm.instance.n_sets(); ++s) {
    const int g = rm.group_of_set(s);
    for (Vertex v : a)
      if (rm.group_of_vertex[v] == g) {
        cover.push_back(s);
        break;
      }
  }

  // The normalized set must cover every element group.
  std::vector<char> hit(rm.instance.n_elements + 1, 0);
  for (int s : cover)
    for (int e : rm.instance.sets[s - 1]) hit[e] = 1;
  for (int e = 1; e <= rm.instance.n_elements; ++e)
    if (!hit[e])
      throw InternalInvariantViolation("extract_cover: output is not a cover");
  return cover;
}

}  // namespace ado
