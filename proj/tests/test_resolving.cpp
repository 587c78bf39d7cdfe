#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>

#include "crslab/families.hpp"
#include "crslab/resolving.hpp"

using namespace crslab;

namespace {

std::vector<std::vector<int>> naive_distances(const Graph& g) {
  const auto n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v)
        if (g.adjacent(u, v) && d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

// Definitional check over all proper subsets, no pruning.
std::set<std::vector<std::size_t>> oracle_crs(const Graph& g) {
  const auto n = g.order();
  const auto d = naive_distances(g);
  std::set<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<std::size_t> w, rest;
    for (std::size_t v = 0; v < n; ++v) (mask >> v & 1 ? w : rest).push_back(v);
    int m = 0;
    for (auto a : w)
      for (auto u : rest) m = std::max(m, d[a][u]);
    std::set<std::vector<int>> vecs;
    for (auto u : rest) {
      std::vector<int> x;
      for (auto a : w) x.push_back(d[a][u]);
      vecs.insert(x);
    }
    if (vecs.size() == rest.size() && std::pow(double(m), double(w.size())) == double(rest.size()))
      out.insert(w);
  }
  return out;
}

Graph random_connected(std::mt19937_64& rng, std::size_t n, int percent) {
  while (true) {
    std::vector<IndexEdge> edges;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(a, b);
    auto g = plain_graph(n, edges);
    if (is_connected(g)) return g;
  }
}

std::vector<VertexLabel> ids(std::initializer_list<std::uint32_t> xs) {
  std::vector<VertexLabel> out;
  for (auto x : xs) out.push_back(PlainVertex{x});
  return out;
}

}  // namespace

TEST(CheckCrs, PathEndpoint) {
  auto g = path_graph(5);
  auto out = check_crs(g, std::span<const VertexLabel>(ids({0})));
  ASSERT_TRUE(succeeded(out));
  const auto& c = std::get<CrsCertificate>(out);
  EXPECT_EQ(c.m, 4);
  EXPECT_EQ(c.table.size(), 4u);
  EXPECT_EQ(c.table.front().first, VertexLabel(PlainVertex{1}));
  EXPECT_EQ(c.table.back().second, LatticeVector({4}));
}

TEST(CheckCrs, FailureReasons) {
  auto p = path_graph(5);
  auto mid = check_crs(p, std::span<const VertexLabel>(ids({2})));
  ASSERT_FALSE(succeeded(mid));
  EXPECT_EQ(std::get<CrsFailure>(mid).reason, CrsFailureReason::cardinality_mismatch);

  // C_4 from one vertex: three others, m = 2 would need 2 vertices.
  auto c4 = cycle_graph(4);
  auto f = check_crs(c4, std::span<const VertexLabel>(ids({0})));
  ASSERT_FALSE(succeeded(f));

  // C_5 from two adjacent vertices: 3 others is not a square.
  auto c5 = cycle_graph(5);
  auto g = check_crs(c5, std::span<const VertexLabel>(ids({0, 1})));
  ASSERT_FALSE(succeeded(g));
  EXPECT_EQ(std::get<CrsFailure>(g).reason, CrsFailureReason::cardinality_mismatch);

  // Four vertices at m = 2 from {0, 1}, but 2,3 both see (1,1) and 4,5 both (2,2).
  auto twins = plain_graph(6, std::vector<IndexEdge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}});
  auto h = check_crs(twins, std::span<const VertexLabel>(ids({0, 1})));
  ASSERT_FALSE(succeeded(h));
  EXPECT_EQ(std::get<CrsFailure>(h).reason, CrsFailureReason::not_injective);
}

TEST(CheckCrs, InvalidW) {
  auto g = path_graph(3);
  EXPECT_THROW(check_crs(g, std::span<const VertexLabel>(ids({}))), error);
  EXPECT_THROW(check_crs(g, std::span<const VertexLabel>(ids({0, 1, 2}))), error);
  EXPECT_THROW(check_crs(g, std::span<const VertexLabel>(ids({9}))), error);
  EXPECT_THROW(resolve_vector(g, ids({0}), PlainVertex{0}), error);
  EXPECT_EQ(truncation_radius(g, ids({0})), 2);
}

TEST(FindAllCrs, MatchesUnprunedOracleOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    auto g = random_connected(rng, n, 20 + static_cast<int>(rng() % 60));
    auto expected = oracle_crs(g);
    for (bool prune : {true, false}) {
      CrsSearchOptions opt;
      opt.prune = prune;
      std::set<std::vector<std::size_t>> got;
      for (auto& c : find_all_crs(g, opt)) {
        std::vector<std::size_t> w;
        for (auto& v : c.w_order) w.push_back(g.index_of(v));
        EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
        got.insert(w);
      }
      EXPECT_EQ(got, expected) << "n=" << n << " prune=" << prune;
    }
  }
}

TEST(FindAllCrs, OrderCapAndConnectivity) {
  CrsSearchOptions opt;
  opt.order_cap = 4;
  EXPECT_THROW(find_all_crs(path_graph(5), opt), error);
  try {
    find_all_crs(path_graph(5), opt);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::order_cap_exceeded);
  }
  EXPECT_THROW(find_all_crs(plain_graph(3, std::vector<IndexEdge>{{0, 1}})), error);
}

TEST(CoordinateOrders, AllPermutations) {
  auto cg = compose(complete_base(2), u_graph(2)).materialize();
  std::vector<VertexLabel> w{BaseVertex{1}, BaseVertex{2}};
  auto cert = std::get<CrsCertificate>(check_crs(cg, std::span<const VertexLabel>(w)));
  auto all = all_coordinate_orders(cert);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0], cert);
  std::vector<VertexLabel> swapped{BaseVertex{2}, BaseVertex{1}};
  EXPECT_EQ(all[1], std::get<CrsCertificate>(check_crs(cg, std::span<const VertexLabel>(swapped))));
}

TEST(Classify, StructuralClasses) {
  EXPECT_EQ(is_completeness_resolvable(path_graph(6)).verdict, CrgClass::path);
  auto star = is_completeness_resolvable(star_graph(4));
  EXPECT_EQ(star.verdict, CrgClass::universal_vertex);
  EXPECT_EQ(star.k, 4);
  ASSERT_TRUE(star.witness);
  EXPECT_EQ(star.witness->m, 1);
  EXPECT_EQ(is_completeness_resolvable(cycle_graph(4)).verdict, CrgClass::not_completeness_resolvable);
  EXPECT_EQ(is_completeness_resolvable(cycle_graph(5)).verdict, CrgClass::not_completeness_resolvable);
}

TEST(Classify, CompositesLandInTheirFamily) {
  auto u = compose(complete_base(2), u_graph(2)).materialize();
  auto vu = is_completeness_resolvable(u);
  EXPECT_EQ(vu.verdict, CrgClass::family_b);
  EXPECT_EQ(vu.k, 2);
  auto t = compose(null_base(2), t_graph(2)).materialize();
  auto vt = is_completeness_resolvable(t);
  EXPECT_EQ(vt.verdict, CrgClass::family_c);
  EXPECT_EQ(vt.k, 2);
  ASSERT_TRUE(vt.witness);
  EXPECT_EQ(vt.witness->m, 3);
}

TEST(MetricDimension, KnownValues) {
  EXPECT_EQ(metric_dimension(path_graph(6)).dimension, 1u);
  EXPECT_EQ(metric_dimension(cycle_graph(7)).dimension, 2u);
  EXPECT_EQ(metric_dimension(complete_graph(5)).dimension, 4u);
  EXPECT_EQ(metric_dimension(star_graph(4)).dimension, 3u);
  // Petersen graph.
  std::vector<IndexEdge> pe;
  for (std::size_t i = 0; i < 5; ++i) {
    pe.emplace_back(i, (i + 1) % 5);
    pe.emplace_back(i, i + 5);
    pe.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  EXPECT_EQ(metric_dimension(plain_graph(10, pe)).dimension, 3u);
}

TEST(Perfectness, StarAndComplete) {
  EXPECT_FALSE(perfectness(star_graph(3)).perfect());
  EXPECT_TRUE(perfectness(complete_graph(5)).perfect());
  EXPECT_TRUE(perfectness(path_graph(5)).perfect());
  EXPECT_FALSE(is_perfectness_resolvable(cycle_graph(6)));
}
