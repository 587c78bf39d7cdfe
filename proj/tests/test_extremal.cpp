#include <gtest/gtest.h>

#include <set>

#include "crslab/extremal.hpp"

using namespace crslab;

namespace {

Graph subgraph_of(const Graph& g, std::uint32_t mask) {
  std::vector<IndexEdge> keep;
  auto e = g.edge_indices();
  for (std::size_t b = 0; b < e.size(); ++b)
    if (mask >> b & 1u) keep.push_back(e[b]);
  return Graph::from_index_edges({g.vertices().begin(), g.vertices().end()}, keep);
}

// Minimal in the spanning-subgraph order: a member none of whose proper
// spanning subgraphs (any number of deletions) is a member.
bool minimal_by_definition_B(const Graph& base, const Graph& lattice) {
  if (!member_B(base, lattice).member) return false;
  const auto full = (std::uint32_t{1} << lattice.size()) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask)
    if (member_B(base, subgraph_of(lattice, mask)).member) return false;
  return true;
}

std::set<std::vector<IndexEdge>> edge_sets(const std::vector<Graph>& gs) {
  std::set<std::vector<IndexEdge>> out;
  for (auto& g : gs) out.insert(g.edge_indices());
  return out;
}

std::vector<Graph> all_lattices_k2_m2() {
  auto full = complete_lattice(2, 2);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < 64; ++mask) out.push_back(subgraph_of(full, mask));
  return out;
}

}  // namespace

TEST(CoverIndexSets, U2OnCompleteBase) {
  auto sets = cover_index_sets(complete_base(2), u_graph(2));
  const auto top = LatticeVector({2, 2}).rank(2);
  EXPECT_EQ(sets.J(top), 0b11u);
  EXPECT_EQ(sets.J(0), 0u);
  EXPECT_EQ(sets.I(top), 0b11u);
  EXPECT_EQ(sets.I(top, 0), 0b11u);
  EXPECT_EQ(sets.I(0, 0), 0u);
  EXPECT_EQ(sets.I_tilde(top, 0), 0b11u);
  EXPECT_EQ(members_of(0b101u), std::vector<int>({1, 3}));
}

TEST(H1Minimal, MatchesDefinitionExhaustivelyAtK2) {
  for (const auto& base : {null_base(2), complete_base(2)})
    for (const auto& lat : all_lattices_k2_m2()) {
      auto rep = is_h1_minimal(base, lat);
      EXPECT_EQ(rep.member, member_B(base, lat).member);
      EXPECT_EQ(rep.minimal, minimal_by_definition_B(base, lat));
      if (rep.member && !rep.minimal) EXPECT_TRUE(rep.removable_edge.has_value());
    }
}

TEST(H1Minimal, NamedExamples) {
  EXPECT_TRUE(is_h1_minimal(complete_base(2), u_graph(2)).minimal);
  EXPECT_TRUE(is_h1_minimal(complete_base(3), v_graph(3)).minimal);
  EXPECT_TRUE(is_h1_minimal(null_base(3), r_graph(3)).minimal);
  EXPECT_TRUE(is_h1_minimal(null_base(3), p2_box(3)).minimal);
  auto rep = is_h1_minimal(complete_base(2), v_graph(2).with_edge(0, 3, true));
  EXPECT_TRUE(rep.member);
  EXPECT_FALSE(rep.minimal);
}

TEST(CompositeMinimal, BaseEdgesCanBeRedundant) {
  // U_2 needs the base edge; R_2 does not.
  auto u = is_composite_minimal_B(complete_base(2), u_graph(2));
  EXPECT_TRUE(u.minimal);
  auto r = is_composite_minimal_B(complete_base(2), r_graph(2));
  EXPECT_TRUE(r.member);
  EXPECT_FALSE(r.minimal);
  EXPECT_TRUE(r.removable_base_edge.has_value() || r.removable_lattice_edge.has_value());
}

TEST(EnumerateMinimalB, MatchesDefinitionAtK2) {
  for (const auto& base : {null_base(2), complete_base(2)}) {
    std::vector<Graph> expected;
    for (const auto& lat : all_lattices_k2_m2())
      if (minimal_by_definition_B(base, lat)) expected.push_back(lat);
    auto got = enumerate_minimal_B(base);
    EXPECT_EQ(edge_sets(got), edge_sets(expected));
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), canonical_less));
  }
}

TEST(EnumerateMinimalB, GroundCap) {
  EXPECT_THROW(enumerate_minimal_B(null_base(3)), error);
}

TEST(EnumerateMinimalC, JobsDoNotChangeOutput) {
  auto one = enumerate_minimal_C(2, {1, 24});
  auto three = enumerate_minimal_C(2, {3, 24});
  ASSERT_EQ(one.size(), three.size());
  for (std::size_t n = 0; n < one.size(); ++n) EXPECT_EQ(one[n], three[n]);
  for (auto& g : one) {
    EXPECT_TRUE(member_C(g).member);
    EXPECT_TRUE(is_k_minimal(g).minimal);
  }
  EXPECT_THROW(enumerate_minimal_C(3), error);
}

TEST(KMinimal, NamedExamples) {
  EXPECT_TRUE(is_k_minimal(t_graph(2)).minimal);
  EXPECT_TRUE(is_k_minimal(t_graph(3)).minimal);
  EXPECT_TRUE(is_k_minimal(q_canonical(3)).minimal);
  auto g = is_k_minimal(gamma_lattice(2));
  EXPECT_TRUE(g.member);
  EXPECT_FALSE(g.minimal);
  EXPECT_TRUE(g.removable_edge.has_value());
  EXPECT_FALSE(is_k_minimal(empty_lattice(2, 3)).member);
}

TEST(Bounds, BFormulas) {
  auto b = bounds_B(complete_base(2));
  EXPECT_EQ(b.lower, 1);
  EXPECT_EQ(b.upper, 2);
  b = bounds_B(null_base(2));
  EXPECT_EQ(b.lower, 2);
  EXPECT_EQ(b.upper, 4);
  b = bounds_B(null_base(3));
  EXPECT_EQ(b.lower, 4);
  EXPECT_EQ(b.upper, 12);
  b = composite_size_bounds_B(null_base(2));
  EXPECT_EQ(b.lower, 6);
  EXPECT_EQ(b.upper, 8);
  b = composite_size_bounds_B(complete_base(2));
  EXPECT_EQ(b.lower, 6);
  EXPECT_EQ(b.upper, 7);
}

TEST(Bounds, CFormulas) {
  const std::vector<std::pair<long long, long long>> expected{{5, 10}, {14, 39}, {41, 140}};
  for (int k = 2; k <= 4; ++k) {
    auto b = bounds_C(k);
    EXPECT_EQ(b.lower, expected[k - 2].first);
    EXPECT_EQ(b.upper, expected[k - 2].second);
  }
  auto c = composite_size_bounds_C(2);
  EXPECT_EQ(c.lower, 11);
  EXPECT_EQ(c.upper, 16);
}

TEST(Bounds, MinimalGraphsStayWithinBounds) {
  for (const auto& base : {null_base(2), complete_base(2)}) {
    auto b = bounds_B(base);
    for (auto& g : enumerate_minimal_B(base)) {
      EXPECT_GE(static_cast<long long>(g.size()), b.lower);
      EXPECT_LE(static_cast<long long>(g.size()), b.upper);
    }
  }
}

TEST(Tightness, AgreesWithEdgeCount) {
  for (const auto& base : {null_base(2), complete_base(2)})
    for (auto& g : enumerate_minimal_B(base)) {
      auto r = tightness_B(base, g);
      EXPECT_TRUE(r.consistent()) << r.violation;
    }
  auto u = tightness_B(complete_base(2), u_graph(2));
  EXPECT_TRUE(u.lower_tight);
  EXPECT_FALSE(u.upper_tight);
  EXPECT_FALSE(u.cond_a);
  auto p = tightness_B(null_base(2), p2_box(2));
  EXPECT_TRUE(p.upper_tight);
  EXPECT_EQ(p.actual, 4);
  EXPECT_THROW(tightness_B(null_base(2), complete_lattice(2, 2)), error);
}

TEST(Epsilon, HandComputedSets) {
  auto e = epsilon(2, 1, LatticeVector({2, 2}));
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].second, LatticeVector({1, 2}));
  EXPECT_EQ(e[1].second, LatticeVector({1, 3}));
  e = epsilon(2, 1, LatticeVector({2, 1}));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].second, LatticeVector({1, 1}));
  e = epsilon(2, 2, LatticeVector({3, 3}));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].second, LatticeVector({3, 2}));
  e = epsilon(3, 2, LatticeVector({1, 2, 3}));
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].second, LatticeVector({1, 1, 2}));
  EXPECT_THROW(epsilon(2, 1, LatticeVector({1, 2})), error);
  EXPECT_THROW(epsilon(2, 1, LatticeVector({3, 1})), error);
}

TEST(Epsilon, SetsArePairwiseDisjoint) {
  for (std::size_t k = 2; k <= 3; ++k) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::size_t total = 0;
    for (auto& site : epsilon_sites(k))
      for (auto& [x, y] : site.choices) {
        ++total;
        seen.emplace(std::min(x.rank(3), y.rank(3)), std::max(x.rank(3), y.rank(3)));
      }
    EXPECT_EQ(seen.size(), total);
  }
}

TEST(QFamily, SizeAndMembers) {
  EXPECT_EQ(q_family_size(2), 4u);
  EXPECT_EQ(q_family_size(3), std::uint64_t{1} << 24);
  auto q = enumerate_Q(2);
  ASSERT_EQ(q.size(), 4u);
  EXPECT_EQ(edge_sets(q).size(), 4u);
  bool has_canonical = false;
  for (auto& g : q) {
    EXPECT_EQ(g.size(), 10u);
    EXPECT_TRUE(is_k_minimal(g).minimal);
    has_canonical = has_canonical || g == q_canonical(2);
  }
  EXPECT_TRUE(has_canonical);
  EXPECT_THROW(enumerate_Q(3), error);
}

TEST(QFamily, StreamingStopsEarly) {
  std::size_t seen = 0;
  const auto labels = lattice_labels(3, 3);
  for_each_Q(3, [&](std::span<const IndexEdge> e) {
    auto g = Graph::from_index_edges(labels, e);
    EXPECT_EQ(g.size(), 39u);
    EXPECT_TRUE(is_k_minimal(g).minimal);
    return ++seen < 50;
  });
  EXPECT_EQ(seen, 50u);
}

TEST(CriticalEdges, SingleEdgeIsCritical) {
  auto c = critical_edges_B(complete_base(2), u_graph(2));
  ASSERT_EQ(c.primary.size(), 2u);
  EXPECT_EQ(c.primary[0].size(), 1u);
  EXPECT_EQ(c.primary[1].size(), 1u);
  auto t = critical_edges_C(t_graph(2));
  EXPECT_EQ(t.primary.size(), 2u);
  EXPECT_EQ(t.secondary.size(), 2u);
  EXPECT_THROW(critical_edges_C(empty_lattice(2, 3)), error);
}
