#include "doctest.h"

#include <cmath>

#include "ado/io.hpp"
#include "ado/tz.hpp"
#include "test_util.hpp"

using namespace ado;

TEST_CASE("tz_sample_levels basics") {
  const MetricSpace ms = gen_uniform(8);
  const LevelChain c1 = tz_sample_levels(ms, 1, 7);
  CHECK(c1.k == 1);
  CHECK(c1.levels[0].size() == 8);
  CHECK(c1.levels[1].empty());

  const LevelChain a = tz_sample_levels(ms, 3, 123);
  const LevelChain b = tz_sample_levels(ms, 3, 123);
  CHECK(a.levels == b.levels);
  CHECK_NOTHROW(validate_chain(ms, a));
  CHECK_FALSE(a.levels[2].empty());  // resample/force keeps A_{k-1} non-empty
}

TEST_CASE("tz_sample_levels hits the n^(-1/k) rate on average") {
  const MetricSpace ms = gen_uniform(100);
  double total = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    total += static_cast<double>(tz_sample_levels(ms, 2, seed).levels[1].size());
  const double mean = total / 1000.0;
  CHECK(mean > 9.0);
  CHECK(mean < 11.0);
}

TEST_CASE("tz_build bunches on the uniform metric") {
  const MetricSpace ms = gen_uniform(3);
  const TzOracle o = tz_build(ms, make_chain_k2(ms, {1}));
  const auto b2 = o.bunch(2);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0].v == 1);
  CHECK(b2[0].dist == 1);
  CHECK(b2[0].level == 2);
  CHECK(b2[1].v == 2);
  CHECK(b2[1].dist == 0);
  CHECK(b2[1].level == 1);
  CHECK(o.pivot(2, 1) == std::pair<Vertex, Dist>{1, 1});
}

TEST_CASE("tz_build with A1 = V has empty level-1 bunches") {
  const MetricSpace ms = gen_uniform(4);
  std::vector<Vertex> all{1, 2, 3, 4};
  const TzOracle o = tz_build(ms, make_chain_k2(ms, all));
  for (Vertex u = 1; u <= 4; ++u) CHECK(o.bunch_level(u, 1).empty());
  CHECK(o.size() == 16);  // level 2 stores everything
}

TEST_CASE("tz_build on the 6-cycle") {
  const MetricSpace ms = gen_cycle(6);
  const TzOracle o = tz_build(ms, make_chain_k2(ms, {1, 4}));
  CHECK(o.bunch(2).size() == 3);
  const auto l1 = o.bunch_level(2, 1);
  REQUIRE(l1.size() == 1);
  CHECK(l1[0].v == 2);
  CHECK(o.bunch_level(2, 2).size() == 2);
}

TEST_CASE("tz_build rejects empty levels") {
  const MetricSpace ms = gen_uniform(4);
  LevelChain chain;
  chain.k = 3;
  chain.levels = {{1, 2, 3, 4}, {1, 2}, {}, {}};
  CHECK_THROWS_AS(tz_build(ms, chain), EmptyLevel);
}

TEST_CASE("tz_cost worked examples") {
  const MetricSpace ms = gen_uniform(3);
  const TzCost c = tz_cost(ms, make_chain_k2(ms, {1}));
  CHECK(c.total == 5);
  CHECK(c.per_level == std::vector<std::int64_t>{2, 3});

  const TzCost empty = tz_cost(ms, make_chain_k2(ms, {}));
  CHECK(empty.total == 9);  // min over the empty set is infinite
  const TzCost full = tz_cost(ms, make_chain_k2(ms, {1, 2, 3}));
  CHECK(full.total == 9);
}

TEST_CASE("tz2_cost_closed_form worked examples") {
  const MetricSpace uni = gen_uniform(3);
  CHECK(tz2_cost_closed_form(uni, {1}) == 5);
  CHECK(tz2_cost_closed_form(uni, {1, 2, 3}) == 9);
  const MetricSpace cyc = gen_cycle(6);
  CHECK(tz2_cost_closed_form(cyc, {1, 4}) == 16);
  CHECK_THROWS_AS(tz2_cost_closed_form(uni, {}), EmptySet);
}

TEST_CASE("cost identity: tz_cost(k=2) equals the closed form") {
  // exhaustive over subsets on small metrics, sampled on larger ones
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const MetricSpace ms = testutil::random_metric(seed, 3, 9);
    const int n = ms.n();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vertex> a1;
      for (Vertex v = 1; v <= n; ++v)
        if (mask & (1u << (v - 1))) a1.push_back(v);
      REQUIRE(tz_cost(ms, make_chain_k2(ms, a1)).total ==
              tz2_cost_closed_form(ms, a1));
    }
  }
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const MetricSpace ms = testutil::random_metric(seed, 10, 40);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a1 =
          testutil::random_nonempty_subset(ms.n(), derive_seed(seed, trial));
      REQUIRE(tz_cost(ms, make_chain_k2(ms, a1)).total ==
              tz2_cost_closed_form(ms, a1));
    }
  }
}

TEST_CASE("tz_query worked examples") {
  const MetricSpace ms = gen_uniform(3);
  const TzOracle o = tz_build(ms, make_chain_k2(ms, {1}));
  CHECK(tz_query(o, 2, 3) == 2);  // via pivot 1
  CHECK(tz_query(o, 2, 2) == 0);
  CHECK(tz_query(o, 1, 3) == 1);  // 1 is in the bunch support of 3
}

TEST_CASE("tz stretch bound holds on random metrics and chains") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const MetricSpace ms = testutil::random_metric(seed, 4, 24);
    for (int k : {2, 3}) {
      const LevelChain chain = tz_sample_levels(ms, k, derive_seed(seed, k));
      const TzOracle o = tz_build(ms, chain);
      for (Vertex u = 1; u <= ms.n(); ++u)
        for (Vertex v = 1; v <= ms.n(); ++v) {
          const Dist est = tz_query(o, u, v);
          REQUIRE(est >= ms.d(u, v));
          REQUIRE(est <= (2 * k - 1) * ms.d(u, v));
        }
    }
  }
}

TEST_CASE("tz oracle size stays within the n^(1+1/k) envelope") {
  for (int n : {64, 256}) {
    const MetricSpace ms = gen_random_graph_metric(n, 0.2, 4, 88);
    for (int k : {2, 3}) {
      double mean = 0;
      for (std::uint64_t seed = 0; seed < 100; ++seed)
        mean += static_cast<double>(
            tz_cost(ms, tz_sample_levels(ms, k, seed)).total);
      mean /= 100.0;
      const double bound =
          8.0 * k * std::pow(static_cast<double>(n), 1.0 + 1.0 / k);
      CHECK(mean <= bound);
    }
  }
}

TEST_CASE("chain file round trip") {
  const MetricSpace ms = gen_uniform(6);
  const LevelChain chain = tz_sample_levels(ms, 3, 42);
  const std::string text = format_chain(chain);
  const LevelChain back = parse_chain(text, ms);
  CHECK(back.levels == chain.levels);
}
