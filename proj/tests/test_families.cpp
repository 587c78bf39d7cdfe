#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "crslab/families.hpp"
#include "crslab/resolving.hpp"

using namespace crslab;

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Graph as_graph(const NamedGraph& g) {
  if (auto* c = std::get_if<CompositeGraph>(&g)) return c->materialize();
  return std::get<Graph>(g);
}

// W = [k] in canonical order is a CRS with the given radius.
bool crs_on_base(const CompositeGraph& c, int m) {
  const auto g = c.materialize();
  if (!is_connected(g)) return false;
  auto out = check_crs(g, std::span<const VertexLabel>(base_labels(c.k())));
  auto* cert = std::get_if<CrsCertificate>(&out);
  return cert && cert->m == m;
}

Graph random_spanning_subgraph(const Graph& g, std::mt19937_64& rng, int percent) {
  std::vector<IndexEdge> keep;
  for (auto e : g.edge_indices())
    if (static_cast<int>(rng() % 100) < percent) keep.push_back(e);
  return Graph::from_index_edges({g.vertices().begin(), g.vertices().end()}, keep);
}

}  // namespace

TEST(Lattice, OrderAndShape) {
  EXPECT_EQ(lattice_order(3, 3), 27u);
  EXPECT_THROW(lattice_order(30, 3), error);
  EXPECT_EQ(lattice_shape(empty_lattice(3, 2)), std::make_pair(std::size_t{3}, 2));
  EXPECT_FALSE(lattice_shape(path_graph(4)).has_value());
  EXPECT_EQ(complete_lattice(2, 2).size(), 6u);
  EXPECT_TRUE(is_base_graph(complete_base(3), 3));
  EXPECT_EQ(complete_base(3).size(), 3u);
}

TEST(Slice, Cardinalities) {
  for (std::size_t k = 2; k <= 4; ++k) {
    auto x = Slice::on_all_positions(k, 3, {2, 3});
    EXPECT_EQ(x.cardinality(), static_cast<std::size_t>(ipow(2, int(k))));
    EXPECT_EQ(x.members().size(), x.cardinality());
    std::size_t z = 0;
    for (auto& v : lattice_vertices(k, 3)) z += in_z_set(v);
    EXPECT_EQ(z, static_cast<std::size_t>(ipow(3, int(k)) - ipow(2, int(k) + 1) + 1));
    for (int i = 1; i <= int(k); ++i) EXPECT_EQ(s_set(k, i).size(), static_cast<std::size_t>(ipow(2, int(k) - 1)));
  }
  auto s = Slice::of(3, 3, {1, 3}, {2});
  EXPECT_EQ(s.cardinality(), 3u);
  EXPECT_TRUE(s.contains(LatticeVector({2, 1, 2})));
  EXPECT_FALSE(s.contains(LatticeVector({2, 1, 3})));
}

TEST(Composite, EdgeCountsMatchMaterialization) {
  std::vector<CompositeGraph> cs = {compose(complete_base(2), u_graph(2)), compose(null_base(2), gamma_lattice(2)),
                                 compose(null_base(2), t_graph(2)), compose(complete_base(3), p2_box(3)),
                                 compose(null_base(3), q_canonical(3))};
  std::vector<std::size_t> expected{6, 26, 11, 3 + 12 + 3 * 4};
  for (std::size_t n = 0; n < cs.size(); ++n) {
    EXPECT_EQ(cs[n].edge_count(), cs[n].materialize().size());
    if (n < expected.size()) EXPECT_EQ(cs[n].edge_count(), expected[n]);
  }
  EXPECT_THROW(compose(null_base(3), u_graph(2), 2, 2), error);
}

TEST(Composite, SplitRoundTrip) {
  auto c = compose(complete_base(3), v_graph(3));
  EXPECT_EQ(as_composite(c.materialize()), c);
  auto g = c.materialize();
  auto bad = g.with_edge(0, g.order() - 1, !g.adjacent(0, g.order() - 1));
  EXPECT_THROW(as_composite(bad), error);
}

TEST(Composite, ClosedNeighborhood) {
  auto c = compose(null_base(3), r_graph(3));
  EXPECT_EQ(c.closed_neighborhood(2), std::vector<int>({2}));
  auto d = compose(complete_base(3), r_graph(3));
  EXPECT_EQ(d.closed_neighborhood(2), std::vector<int>({1, 2, 3}));
  EXPECT_THROW(d.closed_neighborhood(4), error);
}

TEST(Families, SizeIdentities) {
  for (int k = 2; k <= 4; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    EXPECT_EQ(gamma_lattice(uk).size(), static_cast<std::size_t>((ipow(7, k) - ipow(3, k)) / 2));
    EXPECT_EQ(t_graph(uk).size(), static_cast<std::size_t>((ipow(3, k) + 1) / 2));
    EXPECT_EQ(u_graph(uk).size(), 1u);
    EXPECT_EQ(v_graph(uk).size(), uk);
    EXPECT_EQ(r_graph(uk).size(), static_cast<std::size_t>(ipow(2, k - 1)));
    EXPECT_EQ(p2_box(uk).size(), static_cast<std::size_t>(k * ipow(2, k - 1)));
    EXPECT_EQ(q_canonical(uk).size(), static_cast<std::size_t>(k * (ipow(3, k - 1) + ipow(2, k - 1))));
  }
}

TEST(Families, GammaIsScaffoldUnion) {
  for (std::size_t k = 2; k <= 3; ++k) {
    Graph u = empty_lattice(k, 3);
    for (int i = 1; i <= int(k); ++i)
      u = graph_union(graph_union(u, scaffold(k, i, ScaffoldKind::C)), scaffold(k, i, ScaffoldKind::D));
    EXPECT_EQ(u, gamma_lattice(k));
  }
}

TEST(Families, ExampleT2Edges) {
  auto t = t_graph(2);
  std::vector<std::pair<LatticeVector, LatticeVector>> expected{
      {{2, 2}, {1, 1}}, {{2, 3}, {1, 2}}, {{3, 2}, {2, 1}}, {{3, 3}, {2, 2}}, {{1, 2}, {2, 1}}};
  EXPECT_EQ(t.size(), expected.size());
  for (auto& [a, b] : expected) EXPECT_TRUE(t.has_edge(a, b)) << a.str() << b.str();
}

TEST(Families, SmallExamplesByHand) {
  EXPECT_TRUE(u_graph(3).has_edge(LatticeVector({1, 1, 1}), LatticeVector({2, 2, 2})));
  EXPECT_TRUE(v_graph(2).has_edge(LatticeVector({1, 2}), LatticeVector({2, 2})));
  EXPECT_TRUE(v_graph(2).has_edge(LatticeVector({2, 1}), LatticeVector({2, 2})));
  EXPECT_TRUE(r_graph(2).has_edge(LatticeVector({1, 2}), LatticeVector({2, 1})));
  EXPECT_TRUE(r_graph(2).has_edge(LatticeVector({1, 1}), LatticeVector({2, 2})));
  auto p3 = cartesian_power(path_on_ids(3), 2);
  EXPECT_EQ(p3.order(), 9u);
  EXPECT_EQ(p3.size(), 12u);
  // Removed from the square of P_3: (2,1)-(3,1) and (1,2)-(1,3).
  auto q = q_canonical(2);
  EXPECT_FALSE(q.has_edge(LatticeVector({2, 1}), LatticeVector({3, 1})));
  EXPECT_FALSE(q.has_edge(LatticeVector({1, 2}), LatticeVector({1, 3})));
  EXPECT_TRUE(q.has_edge(LatticeVector({2, 2}), LatticeVector({3, 2})));
  EXPECT_EQ(q.size(), 10u);
}

TEST(Families, NamedLookup) {
  EXPECT_EQ(parse_family("Qcanon"), Family::Qcanon);
  EXPECT_FALSE(parse_family("Nope").has_value());
  EXPECT_THROW(example_graph("Nope", 2), error);
  EXPECT_THROW(example_graph(Family::T, 1), error);
  auto maxc = std::get<CompositeGraph>(example_graph(Family::MaxC, 2));
  EXPECT_EQ(maxc.lattice(), gamma_lattice(2));
  auto maxb = std::get<CompositeGraph>(example_graph(Family::MaxB, 2));
  EXPECT_EQ(maxb.edge_count(), 11u);
  EXPECT_EQ(as_graph(example_graph(Family::R, 3)), r_graph(3));
}

TEST(MemberB, NamedExamples) {
  EXPECT_TRUE(member_B(complete_base(2), u_graph(2)).member);
  EXPECT_FALSE(member_B(null_base(2), u_graph(2)).member);
  EXPECT_TRUE(member_B(complete_base(2), v_graph(2)).member);
  EXPECT_TRUE(member_B(null_base(2), r_graph(2)).member);
  EXPECT_TRUE(member_B(null_base(3), p2_box(3)).member);
  auto rep = member_B(null_base(2), empty_lattice(2, 2));
  EXPECT_FALSE(rep.member);
  ASSERT_EQ(rep.checks.size(), 2u);
  EXPECT_EQ(rep.checks[0].name, 'L');
  EXPECT_TRUE(rep.checks[0].uncovered.has_value());
  EXPECT_THROW(member_B(null_base(2), t_graph(2)), error);
}

TEST(MemberB, AgreesWithCrsOnBaseRandomK3) {
  std::mt19937_64 rng(5);
  auto full = complete_lattice(3, 2);
  for (int trial = 0; trial < 400; ++trial) {
    auto base = random_spanning_subgraph(complete_base(3), rng, 50);
    auto lat = random_spanning_subgraph(full, rng, 15 + static_cast<int>(rng() % 50));
    auto c = compose(base, lat);
    EXPECT_EQ(member_B(c).member, crs_on_base(c, 2));
  }
}

TEST(MemberC, NamedExamples) {
  for (std::size_t k = 2; k <= 3; ++k) {
    EXPECT_TRUE(member_C(t_graph(k)).member);
    EXPECT_TRUE(member_C(gamma_lattice(k)).member);
    EXPECT_TRUE(member_C(q_canonical(k)).member);
    EXPECT_FALSE(member_C(empty_lattice(k, 3)).member);
  }
  auto out = t_graph(2).with_edge(0, 8, true);  // (1,1)-(3,3)
  auto rep = member_C(out);
  EXPECT_FALSE(rep.member);
  ASSERT_TRUE(rep.outside_edge.has_value());
  EXPECT_FALSE(member_C(compose(complete_base(2), t_graph(2))).member);
  EXPECT_TRUE(member_C(compose(complete_base(2), t_graph(2))).base_edge.has_value());
}

TEST(MemberC, AgreesWithCrsOnBaseRandomK3) {
  std::mt19937_64 rng(9);
  auto g3 = gamma_lattice(3);
  auto t3 = t_graph(3);
  for (int trial = 0; trial < 300; ++trial) {
    // Mix sparse subgraphs with supersets of a known member.
    auto lat = random_spanning_subgraph(g3, rng, 5 + static_cast<int>(rng() % 40));
    if (trial % 2) lat = graph_union(lat, t3);
    auto c = compose(null_base(3), lat);
    EXPECT_EQ(member_C(c).member, crs_on_base(c, 3));
  }
}

TEST(Relabel, RecoversCompositeFromShuffledCopy) {
  std::mt19937_64 rng(1);
  for (auto c : {compose(null_base(2), t_graph(2)), compose(complete_base(3), v_graph(3)),
                 compose(null_base(3), q_canonical(3))}) {
    auto g = c.materialize();
    std::vector<std::size_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<IndexEdge> e;
    for (auto [a, b] : g.edge_indices()) e.emplace_back(perm[a], perm[b]);
    auto shuffled = plain_graph(g.order(), e);
    std::vector<VertexLabel> w;
    for (std::size_t i = 0; i < c.k(); ++i) w.push_back(PlainVertex{static_cast<std::uint32_t>(perm[i])});
    auto cert = std::get<CrsCertificate>(check_crs(shuffled, std::span<const VertexLabel>(w)));
    EXPECT_EQ(canonical_relabel(shuffled, cert), c);
  }
}

TEST(Relabel, RejectsStaleCertificate) {
  auto c = compose(null_base(2), t_graph(2)).materialize();
  auto w = base_labels(2);
  auto cert = std::get<CrsCertificate>(check_crs(c, std::span<const VertexLabel>(w)));
  cert.table.front().second = cert.table.back().second;
  EXPECT_THROW(canonical_relabel(c, cert), error);
}
