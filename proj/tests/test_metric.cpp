#include "doctest.h"

#include <set>

#include "ado/io.hpp"
#include "ado/metric.hpp"
#include "ado/setcover.hpp"
#include "test_util.hpp"

using namespace ado;

namespace {
std::vector<std::vector<Dist>> uniform_matrix(int n) {
  std::vector<std::vector<Dist>> m(n, std::vector<Dist>(n, 1));
  for (int i = 0; i < n; ++i) m[i][i] = 0;
  return m;
}
}  // namespace

TEST_CASE("validate_metric accepts the uniform metric") {
  const MetricSpace ms = validate_metric(uniform_matrix(3));
  CHECK(ms.n() == 3);
  CHECK(ms.d(1, 2) == 1);
  CHECK(ms.d(2, 2) == 0);
}

TEST_CASE("validate_metric reports the violating triple") {
  auto m = uniform_matrix(3);
  m[0][2] = m[2][0] = 5;  // d(1,3)=5 > d(1,2)+d(2,3)=2
  CHECK_THROWS_AS(validate_metric(m), TriangleViolation);
  try {
    validate_metric(m);
  } catch (const TriangleViolation& e) {
    CHECK(e.u == 1);
    CHECK(e.v == 2);
    CHECK(e.w == 3);
  }
}

TEST_CASE("validate_metric rejects asymmetry, bad diagonals, negatives") {
  auto m = uniform_matrix(3);
  m[0][1] = 2;
  m[1][0] = 3;
  CHECK_THROWS_AS(validate_metric(m), AsymmetricError);

  auto d = uniform_matrix(3);
  d[1][1] = 4;
  CHECK_THROWS_AS(validate_metric(d), NonzeroDiagonalError);

  auto neg = uniform_matrix(3);
  neg[0][2] = neg[2][0] = -1;
  CHECK_THROWS_AS(validate_metric(neg), NegativeDistance);

  CHECK_THROWS_AS(validate_metric(uniform_matrix(1)), SizeTooSmall);
}

TEST_CASE("ball queries") {
  const MetricSpace cyc = gen_cycle(6);
  CHECK(ball_closed(cyc, 1, 3) == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
  CHECK(ball_closed(cyc, 1, 1) == std::vector<Vertex>{1, 2, 6});
  CHECK(ball_closed(cyc, 1, 0) == std::vector<Vertex>{1});
  CHECK(ball_closed(cyc, 1, -1).empty());

  const MetricSpace uni = gen_uniform(3);
  CHECK(ball_closed(uni, 2, 1) == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("strict_closer_count") {
  const MetricSpace uni = gen_uniform(3);
  CHECK(strict_closer_count(uni, 2, 2) == 0);
  CHECK(strict_closer_count(uni, 2, 1) == 1);  // only v=2 is strictly closer

  const MetricSpace cyc = gen_cycle(6);
  CHECK(strict_closer_count(cyc, 1, 4) == 5);  // everything except 4
  CHECK(strict_closer_count(cyc, 1, 1) == 0);
}

TEST_CASE("partition property: closer + ties + farther = n") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MetricSpace ms = testutil::random_metric(seed, 4, 12);
    for (Vertex u = 1; u <= ms.n(); ++u)
      for (Vertex w = 1; w <= ms.n(); ++w) {
        int ties = 0, farther = 0;
        for (Vertex v = 1; v <= ms.n(); ++v) {
          if (ms.d(u, v) == ms.d(u, w)) ++ties;
          if (ms.d(u, v) > ms.d(u, w)) ++farther;
        }
        CHECK(strict_closer_count(ms, u, w) + ties + farther == ms.n());
      }
  }
}

TEST_CASE("B_u(v) contains both endpoints") {
  const MetricSpace ms = testutil::random_metric(42, 4, 10);
  for (Vertex u = 1; u <= ms.n(); ++u)
    for (Vertex v = 1; v <= ms.n(); ++v) {
      const auto b = ball_closed(ms, u, ms.d(u, v));
      CHECK(std::count(b.begin(), b.end(), u) == 1);
      CHECK(std::count(b.begin(), b.end(), v) == 1);
    }
}

TEST_CASE("gen_cycle matches the quoted examples") {
  const MetricSpace c6 = gen_cycle(6);
  CHECK(c6.d(1, 6) == 1);
  CHECK(c6.d(1, 4) == 3);
  const MetricSpace c5 = gen_cycle(5);
  CHECK(c5.d(2, 5) == 2);
  CHECK_THROWS_AS(gen_cycle(2), SizeTooSmall);
}

TEST_CASE("gen_cycle equals BFS distances up to n=256") {
  for (int n : {3, 4, 5, 6, 7, 8, 16, 37, 100, 256}) {
    const MetricSpace c = gen_cycle(n);
    for (Vertex u = 1; u <= n; ++u) {
      const auto bfs = testutil::cycle_bfs(n, u);
      for (Vertex v = 1; v <= n; ++v) REQUIRE(c.d(u, v) == bfs[v]);
    }
  }
}

TEST_CASE("gen_random_graph_metric") {
  const MetricSpace a = gen_random_graph_metric(12, 0.4, 5, 9001);
  const MetricSpace b = gen_random_graph_metric(12, 0.4, 5, 9001);
  for (Vertex u = 1; u <= 12; ++u)
    for (Vertex v = 1; v <= 12; ++v) REQUIRE(a.d(u, v) == b.d(u, v));

  // edge_prob=1, max_weight=1 is the uniform metric
  const MetricSpace uni = gen_random_graph_metric(5, 1.0, 1, 3);
  for (Vertex u = 1; u <= 5; ++u)
    for (Vertex v = 1; v <= 5; ++v) CHECK(uni.d(u, v) == (u == v ? 0 : 1));

  // outputs re-validate as metrics
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const MetricSpace ms = gen_random_graph_metric(10, 0.3, 7, seed);
    std::vector<std::vector<Dist>> m(ms.n(), std::vector<Dist>(ms.n()));
    for (Vertex u = 1; u <= ms.n(); ++u)
      for (Vertex v = 1; v <= ms.n(); ++v) m[u - 1][v - 1] = ms.d(u, v);
    CHECK_NOTHROW(validate_metric(m));
  }
}

TEST_CASE("setcover reduction: sizes and distances") {
  SetCoverInstance sc;
  sc.n_elements = 2;
  sc.sets = {{1, 2}};
  const ReductionMap rm = gen_setcover_reduction(sc);
  CHECK(rm.metric.n() == 27);  // n = 3 groups of 9
  CHECK(rm.group_size() == 9);

  const Vertex e1 = rm.vertices_of_group[rm.group_of_element(1)][0];
  const Vertex e2 = rm.vertices_of_group[rm.group_of_element(2)][0];
  const Vertex s1 = rm.vertices_of_group[rm.group_of_set(1)][0];
  CHECK(rm.metric.d(e1, e2) == 2);  // distinct element groups
  CHECK(rm.metric.d(e1, s1) == 1);  // e1 in S1
  const Vertex e1b = rm.vertices_of_group[rm.group_of_element(1)][1];
  CHECK(rm.metric.d(e1, e1b) == 1);  // same group
}

TEST_CASE("setcover reduction: cross-set distances and e not in S") {
  SetCoverInstance sc;
  sc.n_elements = 2;
  sc.sets = {{1}, {2}};
  const ReductionMap rm = gen_setcover_reduction(sc);
  CHECK(rm.metric.n() == 48);
  const Vertex e1 = rm.vertices_of_group[rm.group_of_element(1)][0];
  const Vertex s1 = rm.vertices_of_group[rm.group_of_set(1)][0];
  const Vertex s2 = rm.vertices_of_group[rm.group_of_set(2)][0];
  CHECK(rm.metric.d(e1, s2) == 2);  // e1 not in S2
  CHECK(rm.metric.d(s1, s2) == 1);  // set groups are mutually adjacent
}

TEST_CASE("setcover reduction validates and has diameter 2, min distance 1") {
  const SetCoverInstance sc = testutil::random_setcover(5, 6);
  const ReductionMap rm = gen_setcover_reduction(sc);
  const int nv = rm.metric.n();
  std::vector<std::vector<Dist>> m(nv, std::vector<Dist>(nv));
  Dist mx = 0, mn = 100;
  for (Vertex u = 1; u <= nv; ++u)
    for (Vertex v = 1; v <= nv; ++v) {
      m[u - 1][v - 1] = rm.metric.d(u, v);
      if (u != v) {
        mx = std::max(mx, rm.metric.d(u, v));
        mn = std::min(mn, rm.metric.d(u, v));
      }
    }
  CHECK_NOTHROW(validate_metric(m));
  CHECK(mx <= 2);
  CHECK(mn == 1);

  SetCoverInstance bad;
  bad.n_elements = 0;
  CHECK_THROWS_AS(gen_setcover_reduction(bad), EmptyInstance);
}

TEST_CASE("instance file round trip and parse errors") {
  const MetricSpace ms = testutil::random_metric(5, 4, 9);
  const std::string text = format_instance(ms);
  const MetricSpace back = parse_instance(text);
  REQUIRE(back.n() == ms.n());
  for (Vertex u = 1; u <= ms.n(); ++u)
    for (Vertex v = 1; v <= ms.n(); ++v) CHECK(back.d(u, v) == ms.d(u, v));

  CHECK_THROWS_AS(parse_instance("3\n0 1 1\n1 0 1\n"), MetricError);
  CHECK_THROWS_AS(parse_instance("2\n0 5\n4 0\n"), AsymmetricError);
}
