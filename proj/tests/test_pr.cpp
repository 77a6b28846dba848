#include "doctest.h"

#include <algorithm>

#include "ado/brute.hpp"
#include "ado/pr.hpp"
#include "test_util.hpp"

using namespace ado;

TEST_CASE("pr_build produces empty exact-pair sets where expected") {
  const MetricSpace uni = gen_uniform(3);
  CHECK(pr_build(uni, {1}).exact_pair_count() == 0);
  CHECK(pr_build(uni, {1, 2, 3}).exact_pair_count() == 0);

  SetCoverInstance sc;
  sc.n_elements = 2;
  sc.sets = {{1, 2}};
  const ReductionMap rm = gen_setcover_reduction(sc);
  const Vertex s1 = rm.vertices_of_group[rm.group_of_set(1)][0];
  CHECK(pr_build(rm.metric, {s1}).exact_pair_count() == 0);

  CHECK_THROWS_AS(pr_build(uni, {}), EmptyLandmarkSet);
}

TEST_CASE("pr_cost worked examples") {
  const MetricSpace uni = gen_uniform(3);
  CHECK(pr_cost(uni, {1}) == 3);
  CHECK(pr_cost(uni, {}) == 3);  // C(3,2) pairs, no landmarks

  SetCoverInstance sc;
  sc.n_elements = 2;
  sc.sets = {{1, 2}};
  const ReductionMap rm = gen_setcover_reduction(sc);
  const Vertex s1 = rm.vertices_of_group[rm.group_of_set(1)][0];
  CHECK(pr_cost(rm.metric, {s1}) == 27);  // t|V| with t = 1
}

TEST_CASE("pr_query worked examples") {
  const MetricSpace uni = gen_uniform(3);
  const PrOracle o = pr_build(uni, {1});
  CHECK(pr_query(o, 2, 3) == 2);
  CHECK(pr_query(o, 1, 3) == 1);  // u in A is exact
  CHECK(pr_query(o, 3, 3) == 0);
}

TEST_CASE("pr_query returns stored distances for exact pairs") {
  const MetricSpace ms = testutil::random_metric(17, 6, 12);
  const auto a = testutil::random_nonempty_subset(ms.n(), 3, 0.25);
  const PrOracle o = pr_build(ms, a);
  int checked = 0;
  for (Vertex u = 1; u <= ms.n(); ++u)
    for (Vertex v = u + 1; v <= ms.n(); ++v) {
      Dist stored;
      if (o.exact_pair(u, v, &stored)) {
        CHECK(stored == ms.d(u, v));
        CHECK(pr_query(o, u, v) == ms.d(u, v));
        ++checked;
      }
    }
  (void)checked;
}

TEST_CASE("pr stretch bound d <= q <= 2d+1 on random instances") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const MetricSpace ms = testutil::random_metric(seed, 4, 24);
    const auto a = testutil::random_nonempty_subset(
        ms.n(), derive_seed(seed, 55), 0.3);
    const PrOracle o = pr_build(ms, a);
    for (Vertex u = 1; u <= ms.n(); ++u)
      for (Vertex v = 1; v <= ms.n(); ++v) {
        const Dist est = pr_query(o, u, v);
        REQUIRE(est >= ms.d(u, v));
        REQUIRE(est <= 2 * ms.d(u, v) + 1);
      }
  }
}

TEST_CASE("pr_cost_outliers worked examples") {
  const MetricSpace uni4 = gen_uniform(4);
  CHECK(pr_cost_outliers(uni4, {1}, {4}, 1) == 3);
  // F = emptyset reduces to pr_cost
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const MetricSpace ms = testutil::random_metric(seed, 4, 10);
    const auto a = testutil::random_subset(ms.n(), seed);
    CHECK(pr_cost_outliers(ms, a, {}, 0) == pr_cost(ms, a));
  }
  // F = V \ A leaves only landmark survivors: (n-f)|A|
  const MetricSpace ms = testutil::random_metric(9, 5, 9);
  std::vector<Vertex> a{1, 2};
  std::vector<Vertex> f_set;
  for (Vertex v = 3; v <= ms.n(); ++v) f_set.push_back(v);
  const int f = static_cast<int>(f_set.size());
  CHECK(pr_cost_outliers(ms, a, f_set, f) ==
        static_cast<std::int64_t>(ms.n() - f) * 2);
}

TEST_CASE("tz2_cost_outliers worked examples") {
  const MetricSpace uni4 = gen_uniform(4);
  CHECK(tz2_cost_outliers(uni4, {1}, {4}, 1) == 5);
  // A = F: survivors see an empty landmark set, every survivor pair counts
  CHECK(tz2_cost_outliers(uni4, {1}, {1}, 1) == 9);  // (n-f)^2
  // F = emptyset matches the closed form
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const MetricSpace ms = testutil::random_metric(seed, 4, 10);
    const auto a = testutil::random_nonempty_subset(ms.n(), seed);
    CHECK(tz2_cost_outliers(ms, a, {}, 0) == tz2_cost_closed_form(ms, a));
  }
}

TEST_CASE("extract_cover keeps an already-normalized optimal cover") {
  SetCoverInstance sc;
  sc.n_elements = 3;
  sc.sets = {{1, 2}, {3}, {1}};
  const ReductionMap rm = gen_setcover_reduction(sc);
  const std::vector<Vertex> a{rm.vertices_of_group[rm.group_of_set(1)][0],
                              rm.vertices_of_group[rm.group_of_set(2)][0]};
  CHECK(extract_cover(rm, a) == std::vector<int>{1, 2});
}

TEST_CASE("extract_cover from the empty set yields a cover") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const SetCoverInstance sc = testutil::random_setcover(seed, 7);
    const ReductionMap rm = gen_setcover_reduction(sc);
    const auto cover = extract_cover(rm, {});
    CHECK(!cover.empty());
    CHECK(static_cast<int>(cover.size()) <= sc.n_sets());
    std::vector<char> hit(sc.n_elements + 1, 0);
    for (int s : cover)
      for (int e : sc.sets[s - 1]) hit[e] = 1;
    for (int e = 1; e <= sc.n_elements; ++e) REQUIRE(hit[e] == 1);
  }
}

TEST_CASE("extract_cover replaces element-group vertices") {
  SetCoverInstance sc;
  sc.n_elements = 2;
  sc.sets = {{1}, {2}, {1, 2}};
  const ReductionMap rm = gen_setcover_reduction(sc);
  const Vertex in_e2 = rm.vertices_of_group[rm.group_of_element(2)][4];
  const auto cover = extract_cover(rm, {in_e2});
  bool contains_set_with_e2 = false;
  for (int s : cover)
    contains_set_with_e2 |=
        std::count(sc.sets[s - 1].begin(), sc.sets[s - 1].end(), 2) > 0;
  CHECK(contains_set_with_e2);
}

TEST_CASE("extract_cover size bound against the landmark cost") {
  for (std::uint64_t seed = 20; seed < 28; ++seed) {
    const SetCoverInstance sc = testutil::random_setcover(seed, 7);
    const ReductionMap rm = gen_setcover_reduction(sc);
    const auto start = testutil::random_subset(rm.metric.n(), seed, 0.02);
    const std::int64_t start_cost = pr_cost(rm.metric, start);
    const auto cover = extract_cover(rm, start);
    CHECK(static_cast<std::int64_t>(cover.size()) *
              static_cast<std::int64_t>(rm.metric.n()) <=
          start_cost);
  }
}
