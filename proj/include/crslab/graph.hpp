#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crslab/error.hpp"
#include "crslab/labels.hpp"

namespace crslab {

inline constexpr std::size_t kMaxGraphOrder = 8192;

using Edge = std::pair<VertexLabel, VertexLabel>;
using IndexEdge = std::pair<std::size_t, std::size_t>;

// Finite simple graph of order >= 2. Vertices are kept sorted in the
// canonical label order; vertex i's neighbourhood is row(i), a bit set over
// vertex indices.
class Graph {
 public:
  Graph(std::vector<VertexLabel> vertices, std::span<const Edge> edges = {}) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw error(errc::invalid_graph, "duplicate vertex label");
    init(std::move(vertices));
    for (const auto& [a, b] : edges) {
      auto i = find(a);
      auto j = find(b);
      if (!i || !j)
        throw error(errc::invalid_graph, "edge endpoint is not a vertex: " + to_string(i ? b : a));
      add_checked(*i, *j);
    }
  }

  /// Build from labels already sorted and unique plus edges given by index.
  static Graph from_index_edges(std::vector<VertexLabel> sorted_vertices,
                                std::span<const IndexEdge> edges) {
    if (!std::is_sorted(sorted_vertices.begin(), sorted_vertices.end()) ||
        std::adjacent_find(sorted_vertices.begin(), sorted_vertices.end()) != sorted_vertices.end())
      throw error(errc::invalid_graph, "vertex labels must be sorted and unique");
    Graph g;
    g.init(std::move(sorted_vertices));
    for (const auto& [i, j] : edges) {
      if (i >= g.order() || j >= g.order())
        throw error(errc::invalid_graph, "edge index out of range");
      g.add_checked(i, j);
    }
    return g;
  }

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  std::size_t words() const noexcept { return words_; }

  std::span<const VertexLabel> vertices() const noexcept { return vertices_; }
  const VertexLabel& label(std::size_t i) const { return vertices_[i]; }

  std::optional<std::size_t> find(const VertexLabel& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::size_t index_of(const VertexLabel& v) const {
    if (auto i = find(v)) return *i;
    throw error(errc::unknown_vertex, to_string(v));
  }

  bool adjacent(std::size_t i, std::size_t j) const noexcept {
    return (adj_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  bool has_edge(const VertexLabel& a, const VertexLabel& b) const {
    auto i = find(a);
    auto j = find(b);
    return i && j && adjacent(*i, *j);
  }

  std::span<const std::uint64_t> row(std::size_t i) const noexcept {
    return {adj_.data() + i * words_, words_};
  }

  std::size_t degree(std::size_t i) const noexcept {
    std::size_t d = 0;
    for (auto w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  /// Edges as index pairs (i < j), lexicographically sorted.
  std::vector<IndexEdge> edge_indices() const {
    std::vector<IndexEdge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = i + 1; j < order(); ++j)
        if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }

  /// Edges as label pairs with first < second, in canonical order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (auto [i, j] : edge_indices()) out.emplace_back(vertices_[i], vertices_[j]);
    return out;
  }

  Graph with_edge(std::size_t i, std::size_t j, bool present) const {
    Graph g = *this;
    if (g.adjacent(i, j) != present) {
      g.flip(i, j);
      g.flip(j, i);
      g.edge_count_ += present ? 1 : std::size_t(-1);
    }
    return g;
  }

  bool same_vertices(const Graph& other) const { return vertices_ == other.vertices_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.adj_ == b.adj_;
  }

 private:
  Graph() = default;

  void init(std::vector<VertexLabel> sorted) {
    if (sorted.size() < 2) throw error(errc::invalid_graph, "a graph needs at least two vertices");
    if (sorted.size() > kMaxGraphOrder)
      throw error(errc::size_overflow, "order " + std::to_string(sorted.size()) + " exceeds " +
                                           std::to_string(kMaxGraphOrder));
    vertices_ = std::move(sorted);
    words_ = (vertices_.size() + 63) / 64;
    adj_.assign(vertices_.size() * words_, 0);
    edge_count_ = 0;
  }

  void flip(std::size_t i, std::size_t j) noexcept {
    adj_[i * words_ + j / 64] ^= std::uint64_t{1} << (j % 64);
  }

  void add_checked(std::size_t i, std::size_t j) {
    if (i == j) throw error(errc::invalid_graph, "loop at " + to_string(vertices_[i]));
    if (adjacent(i, j))
      throw error(errc::invalid_graph,
                  "repeated edge " + to_string(vertices_[i]) + "-" + to_string(vertices_[j]));
    flip(i, j);
    flip(j, i);
    ++edge_count_;
  }

  std::vector<VertexLabel> vertices_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::size_t edge_count_ = 0;
};

inline std::size_t degree(const Graph& g, const VertexLabel& v) { return g.degree(g.index_of(v)); }

/// G1 <= G2: same vertex set and E(G1) a subset of E(G2).
inline bool is_spanning_subgraph(const Graph& g1, const Graph& g2) {
  if (!g1.same_vertices(g2)) return false;
  for (std::size_t i = 0; i < g1.order(); ++i) {
    auto a = g1.row(i);
    auto b = g2.row(i);
    for (std::size_t w = 0; w < a.size(); ++w)
      if (a[w] & ~b[w]) return false;
  }
  return true;
}

inline Graph graph_union(const Graph& g1, const Graph& g2) {
  if (!g1.same_vertices(g2)) throw error(errc::vertex_set_mismatch, "union needs equal vertex sets");
  std::vector<IndexEdge> edges = g1.edge_indices();
  for (auto e : g2.edge_indices())
    if (!g1.adjacent(e.first, e.second)) edges.push_back(e);
  return Graph::from_index_edges({g1.vertices().begin(), g1.vertices().end()}, edges);
}

// Plain-vertex generators, ids 0..n-1.

inline std::vector<VertexLabel> plain_vertices(std::size_t n) {
  std::vector<VertexLabel> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(PlainVertex{static_cast<std::uint32_t>(i)});
  return out;
}

inline Graph plain_graph(std::size_t n, std::span<const IndexEdge> edges) {
  return Graph::from_index_edges(plain_vertices(n), edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<IndexEdge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return plain_graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<IndexEdge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return plain_graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<IndexEdge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return plain_graph(n, e);
}

/// Star with centre 0 and the given number of leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<IndexEdge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return plain_graph(leaves + 1, e);
}

/// Cycle on 1..rim plus hub 0 joined to every rim vertex.
inline Graph wheel_graph(std::size_t rim) {
  std::vector<IndexEdge> e;
  for (std::size_t i = 1; i <= rim; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i == rim ? 1 : i + 1);
  }
  for (auto& [a, b] : e)
    if (a > b) std::swap(a, b);
  return plain_graph(rim + 1, e);
}

}  // namespace crslab
