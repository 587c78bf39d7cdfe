#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "crslab/combinatorics.hpp"
#include "crslab/distance.hpp"
#include "crslab/error.hpp"
#include "crslab/graph.hpp"
#include "crslab/resolving.hpp"

namespace crslab {

// ---------------------------------------------------------------------------
// Vertex sets [k] and [m]^k
// ---------------------------------------------------------------------------

inline constexpr std::size_t kMaxLatticeOrder = std::size_t{1} << 24;

inline std::size_t lattice_order(std::size_t k, int m) {
  if (k < 1 || m < 1) throw error(errc::index_out_of_range, "need k >= 1 and m >= 1");
  if (k > kMaxLatticeDim) throw error(errc::size_overflow, "k exceeds the maximum lattice dimension");
  auto n = checked_pow(static_cast<std::uint64_t>(m), k);
  if (!n || *n > kMaxLatticeOrder)
    throw error(errc::size_overflow, std::to_string(m) + "^" + std::to_string(k) + " is too large");
  return static_cast<std::size_t>(*n);
}

/// All of [m]^k in lexicographic order; position equals LatticeVector::rank.
inline std::vector<LatticeVector> lattice_vertices(std::size_t k, int m) {
  const auto n = lattice_order(k, m);
  std::vector<LatticeVector> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) out.push_back(LatticeVector::unrank(r, k, m));
  return out;
}

inline std::vector<VertexLabel> lattice_labels(std::size_t k, int m) {
  std::vector<VertexLabel> out;
  for (auto& x : lattice_vertices(k, m)) out.emplace_back(x);
  return out;
}

inline std::vector<VertexLabel> base_labels(std::size_t k) {
  std::vector<VertexLabel> out;
  for (std::size_t i = 1; i <= k; ++i) out.emplace_back(BaseVertex{static_cast<int>(i)});
  return out;
}

inline Graph null_base(std::size_t k) { return Graph(base_labels(k)); }

inline Graph complete_base(std::size_t k) {
  std::vector<IndexEdge> e;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph::from_index_edges(base_labels(k), e);
}

/// Graph on [m]^k from edges given as vector pairs.
inline Graph lattice_graph(std::size_t k, int m,
                           std::span<const std::pair<LatticeVector, LatticeVector>> edges) {
  std::vector<IndexEdge> e;
  e.reserve(edges.size());
  for (const auto& [x, y] : edges) {
    if (x.dim() != k || y.dim() != k || !x.in_box(m) || !y.in_box(m))
      throw error(errc::wrong_vertex_set, x.str() + "-" + y.str() + " is not an edge on [m]^k");
    e.emplace_back(x.rank(m), y.rank(m));
  }
  return Graph::from_index_edges(lattice_labels(k, m), e);
}

inline Graph empty_lattice(std::size_t k, int m) { return Graph(lattice_labels(k, m)); }

inline Graph complete_lattice(std::size_t k, int m) {
  const auto n = lattice_order(k, m);
  std::vector<IndexEdge> e;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph::from_index_edges(lattice_labels(k, m), e);
}

/// k and m of a graph whose vertex set is exactly [m]^k, else nullopt.
inline std::optional<std::pair<std::size_t, int>> lattice_shape(const Graph& g) {
  auto vs = g.vertices();
  if (!is_lattice(vs.front()) || !is_lattice(vs.back())) return std::nullopt;
  const auto& first = std::get<LatticeVector>(vs.front());
  const auto& last = std::get<LatticeVector>(vs.back());
  const std::size_t k = first.dim();
  const int m = last.max_component();
  if (k == 0 || m < 1) return std::nullopt;
  auto n = checked_pow(static_cast<std::uint64_t>(m), k);
  if (!n || *n != vs.size()) return std::nullopt;
  for (std::size_t r = 0; r < vs.size(); ++r) {
    const auto* x = std::get_if<LatticeVector>(&vs[r]);
    if (!x || x->dim() != k || !x->in_box(m) || x->rank(m) != r) return std::nullopt;
  }
  return std::pair{k, m};
}

inline bool is_base_graph(const Graph& g, std::size_t k) {
  auto vs = g.vertices();
  if (vs.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto* b = std::get_if<BaseVertex>(&vs[i]);
    if (!b || b->index != static_cast<int>(i + 1)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Slices [m]^k_I(J)
// ---------------------------------------------------------------------------

/// [m]^k_I(J) = { x in [m]^k : x_(i) in J for all i in I }. Positions and
/// values are bit masks: bit i-1 for position i, bit j-1 for value j.
struct Slice {
  std::size_t k = 0;
  int m = 0;
  std::uint32_t positions = 0;
  std::uint32_t values = 0;

  static Slice of(std::size_t k, int m, std::initializer_list<int> positions,
                  std::initializer_list<int> values) {
    Slice s{k, m, 0, 0};
    for (int i : positions) s.positions |= std::uint32_t{1} << (i - 1);
    for (int j : values) s.values |= std::uint32_t{1} << (j - 1);
    return s;
  }

  static Slice on_all_positions(std::size_t k, int m, std::initializer_list<int> values) {
    Slice s = of(k, m, {}, values);
    s.positions = (k >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << k) - 1);
    return s;
  }

  bool contains(const LatticeVector& x) const noexcept {
    for (std::size_t p = 0; p < k; ++p)
      if (((positions >> p) & 1u) && !((values >> (x[p] - 1)) & 1u)) return false;
    return true;
  }

  std::size_t cardinality() const {
    const auto fixed = static_cast<std::size_t>(std::popcount(positions));
    const auto allowed = static_cast<std::uint64_t>(std::popcount(values));
    return static_cast<std::size_t>(*checked_pow(allowed, fixed) *
                                    *checked_pow(static_cast<std::uint64_t>(m), k - fixed));
  }

  std::vector<LatticeVector> members() const {
    std::vector<LatticeVector> out;
    for (auto& x : lattice_vertices(k, m))
      if (contains(x)) out.push_back(x);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Scaffolds B^k_i, C^k_i, D^k_i and the sets S^k_i, X, Y, Z
// ---------------------------------------------------------------------------

enum class ScaffoldKind { B, C, D };

namespace detail {

inline void check_index(std::size_t k, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > k)
    throw error(errc::index_out_of_range, "index " + std::to_string(i) + " not in [" + std::to_string(k) + "]");
}

inline bool close_off(const LatticeVector& x, const LatticeVector& y, int i) {
  for (std::size_t p = 0; p < x.dim(); ++p)
    if (static_cast<int>(p) != i - 1 && std::abs(x[p] - y[p]) > 1) return false;
  return true;
}

}  // namespace detail

inline bool in_scaffold(ScaffoldKind kind, const LatticeVector& x, const LatticeVector& y, int i) {
  const int a = std::min(x.coord(i), y.coord(i));
  const int b = std::max(x.coord(i), y.coord(i));
  switch (kind) {
    case ScaffoldKind::B: return a == 1 && b == 2;
    case ScaffoldKind::C: return a == 1 && b == 2 && detail::close_off(x, y, i);
    case ScaffoldKind::D: return a == 2 && b == 3 && detail::close_off(x, y, i);
  }
  return false;
}

/// B^k_i on [2]^k, or C^k_i / D^k_i on [3]^k, as spanning graphs.
inline Graph scaffold(std::size_t k, int i, ScaffoldKind kind) {
  detail::check_index(k, i);
  const int m = kind == ScaffoldKind::B ? 2 : 3;
  const auto xs = lattice_vertices(k, m);
  std::vector<IndexEdge> e;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      if (in_scaffold(kind, xs[a], xs[b], i)) e.emplace_back(a, b);
  return Graph::from_index_edges(lattice_labels(k, m), e);
}

/// S^k_i = [3]^k_[k]({2,3}) intersected with [3]^k_i(3).
inline std::vector<LatticeVector> s_set(std::size_t k, int i) {
  detail::check_index(k, i);
  std::vector<LatticeVector> out;
  for (auto& x : lattice_vertices(k, 3))
    if (x.coord(i) == 3 && Slice::on_all_positions(k, 3, {2, 3}).contains(x)) out.push_back(x);
  return out;
}

inline bool in_x_set(const LatticeVector& x) {
  for (std::size_t p = 0; p < x.dim(); ++p)
    if (x[p] == 1) return false;
  return true;
}

inline bool in_y_set(const LatticeVector& x) {
  for (std::size_t p = 0; p < x.dim(); ++p)
    if (x[p] == 2) return false;
  return true;
}

inline bool in_z_set(const LatticeVector& x) { return !in_x_set(x) && !in_y_set(x); }

/// True iff every vertex of s is an endpoint of some edge.
template <class V>
bool is_edge_covering(std::span<const std::pair<V, V>> edges, std::span<const V> s) {
  return std::all_of(s.begin(), s.end(), [&](const V& v) {
    return std::any_of(edges.begin(), edges.end(),
                       [&](const auto& e) { return e.first == v || e.second == v; });
  });
}

// ---------------------------------------------------------------------------
// Composition H1 o H2
// ---------------------------------------------------------------------------

/// H1 o H2 on [k] + [m]^k. Cross edges {i, x} with x_(i) = 1 are implied.
class CompositeGraph {
 public:
  CompositeGraph(Graph base, Graph lattice, std::size_t k, int m)
      : base_(std::move(base)), lattice_(std::move(lattice)), k_(k), m_(m) {
    if (!is_base_graph(base_, k))
      throw error(errc::wrong_vertex_set, "base graph must have vertex set [" + std::to_string(k) + "]");
    auto shape = lattice_shape(lattice_);
    if (!shape || shape->first != k || shape->second != m)
      throw error(errc::wrong_vertex_set, "lattice graph must have vertex set [" + std::to_string(m) +
                                              "]^" + std::to_string(k));
  }

  std::size_t k() const noexcept { return k_; }
  int m() const noexcept { return m_; }
  const Graph& base() const noexcept { return base_; }
  const Graph& lattice() const noexcept { return lattice_; }

  std::size_t cross_edge_count() const {
    return k_ * static_cast<std::size_t>(*checked_pow(static_cast<std::uint64_t>(m_), k_ - 1));
  }

  std::size_t edge_count() const { return base_.size() + lattice_.size() + cross_edge_count(); }

  /// H1(i): i together with its neighbours in the base graph.
  std::vector<int> closed_neighborhood(int i) const {
    detail::check_index(k_, i);
    std::vector<int> out;
    for (std::size_t j = 0; j < k_; ++j)
      if (static_cast<int>(j) == i - 1 || base_.adjacent(static_cast<std::size_t>(i - 1), j))
        out.push_back(static_cast<int>(j + 1));
    return out;
  }

  /// Index of a vertex in materialize(): base i -> i-1, lattice x -> k + rank(x).
  std::size_t materialized_index(const VertexLabel& v) const {
    if (auto* b = std::get_if<BaseVertex>(&v)) return static_cast<std::size_t>(b->index - 1);
    return k_ + std::get<LatticeVector>(v).rank(m_);
  }

  Graph materialize() const {
    std::vector<VertexLabel> vs(base_.vertices().begin(), base_.vertices().end());
    vs.insert(vs.end(), lattice_.vertices().begin(), lattice_.vertices().end());
    std::vector<IndexEdge> e = base_.edge_indices();
    for (auto [a, b] : lattice_.edge_indices()) e.emplace_back(k_ + a, k_ + b);
    for (std::size_t r = 0; r < lattice_.order(); ++r) {
      const auto& x = std::get<LatticeVector>(lattice_.label(r));
      for (std::size_t p = 0; p < k_; ++p)
        if (x[p] == 1) e.emplace_back(p, k_ + r);
    }
    return Graph::from_index_edges(std::move(vs), e);
  }

  friend bool operator==(const CompositeGraph&, const CompositeGraph&) = default;

 private:
  Graph base_;
  Graph lattice_;
  std::size_t k_;
  int m_;
};

inline CompositeGraph compose(const Graph& base, const Graph& lattice, std::size_t k, int m) {
  return CompositeGraph(base, lattice, k, m);
}

inline CompositeGraph compose(const Graph& base, const Graph& lattice) {
  auto shape = lattice_shape(lattice);
  if (!shape) throw error(errc::wrong_vertex_set, "lattice graph must have vertex set [m]^k");
  return CompositeGraph(base, lattice, shape->first, shape->second);
}

/// Splits a labeled graph on [k] + [m]^k back into its two factors, checking
/// that the base-lattice edges are exactly the implied cross edges.
inline CompositeGraph as_composite(const Graph& g) {
  std::vector<VertexLabel> base, lattice;
  for (const auto& v : g.vertices()) {
    if (is_base(v))
      base.push_back(v);
    else if (is_lattice(v))
      lattice.push_back(v);
    else
      throw error(errc::wrong_vertex_set, "plain vertex in a composite graph");
  }
  if (base.size() < 2 || lattice.size() < 2)
    throw error(errc::wrong_vertex_set, "composite needs base and lattice vertices");
  const std::size_t k = base.size();
  std::vector<IndexEdge> be, le;
  for (auto [a, b] : g.edge_indices()) {
    if (a < k && b < k)
      be.emplace_back(a, b);
    else if (a >= k && b >= k)
      le.emplace_back(a - k, b - k);
  }
  Graph lat = Graph::from_index_edges(lattice, le);
  auto shape = lattice_shape(lat);
  if (!shape || shape->first != k) throw error(errc::wrong_vertex_set, "lattice part is not [m]^k");
  CompositeGraph out(Graph::from_index_edges(base, be), std::move(lat), k, shape->second);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < out.lattice().order(); ++r) {
      const bool rule = std::get<LatticeVector>(out.lattice().label(r))[i] == 1;
      if (g.adjacent(i, k + r) != rule)
        throw error(errc::wrong_vertex_set, "cross edges do not follow the composition rule");
    }
  return out;
}

// ---------------------------------------------------------------------------
// Membership in B_k and C_k
// ---------------------------------------------------------------------------

using LatticeEdge = std::pair<LatticeVector, LatticeVector>;

/// One covering requirement: `name`_i (L, M or N) must cover `target`.
struct CoverCheck {
  int i = 0;
  char name = 'L';
  std::string target;
  std::vector<LatticeEdge> edges;
  std::optional<LatticeVector> uncovered;
};

struct MembershipReport {
  bool member = false;
  std::vector<CoverCheck> checks;
  // Family C only: a lattice edge outside every C^k_i and D^k_i.
  std::optional<LatticeEdge> outside_edge;
  // Family C only: the base graph must be null.
  std::optional<std::pair<int, int>> base_edge;
};

namespace detail {

inline std::vector<LatticeEdge> lattice_edges(const Graph& lattice) {
  std::vector<LatticeEdge> out;
  for (auto [a, b] : lattice.edge_indices())
    out.emplace_back(std::get<LatticeVector>(lattice.label(a)), std::get<LatticeVector>(lattice.label(b)));
  return out;
}

inline std::optional<LatticeVector> first_uncovered(const std::vector<LatticeEdge>& edges,
                                                    const std::vector<LatticeVector>& targets) {
  std::vector<LatticeVector> covered;
  for (auto& [x, y] : edges) {
    covered.push_back(x);
    covered.push_back(y);
  }
  std::sort(covered.begin(), covered.end());
  for (auto& t : targets)
    if (!std::binary_search(covered.begin(), covered.end(), t)) return t;
  return std::nullopt;
}

inline std::size_t require_lattice(const Graph& lattice, int m) {
  auto shape = lattice_shape(lattice);
  if (!shape || shape->second != m || shape->first < 2)
    throw error(errc::wrong_vertex_set, "lattice graph must have vertex set [" + std::to_string(m) + "]^k, k >= 2");
  return shape->first;
}

}  // namespace detail

/// [2]^k_{H1(i)}(2): vectors equal to 2 on the closed neighbourhood of i.
inline std::vector<LatticeVector> neighborhood_slice(const Graph& base, int i) {
  const std::size_t k = base.order();
  Slice s{k, 2, 0, 0b10};
  s.positions |= std::uint32_t{1} << (i - 1);
  for (std::size_t j = 0; j < k; ++j)
    if (base.adjacent(static_cast<std::size_t>(i - 1), j)) s.positions |= std::uint32_t{1} << j;
  return s.members();
}

/// H1 o H2 is in B_k iff each L_i = E(H2) n E(B^k_i) covers [2]^k_{H1(i)}(2).
inline MembershipReport member_B(const Graph& base, const Graph& lattice) {
  const std::size_t k = detail::require_lattice(lattice, 2);
  if (!is_base_graph(base, k)) throw error(errc::wrong_vertex_set, "base graph must have vertex set [k]");
  const auto edges = detail::lattice_edges(lattice);
  MembershipReport report;
  report.member = true;
  for (int i = 1; i <= static_cast<int>(k); ++i) {
    CoverCheck c{i, 'L', "[2]^k_{H1(" + std::to_string(i) + ")}(2)", {}, std::nullopt};
    for (auto& e : edges)
      if (in_scaffold(ScaffoldKind::B, e.first, e.second, i)) c.edges.push_back(e);
    c.uncovered = detail::first_uncovered(c.edges, neighborhood_slice(base, i));
    report.member = report.member && !c.uncovered;
    report.checks.push_back(std::move(c));
  }
  return report;
}

inline MembershipReport member_B(const CompositeGraph& g) {
  if (g.m() != 2) throw error(errc::wrong_vertex_set, "family B composites have m = 2");
  return member_B(g.base(), g.lattice());
}

/// K_[k] o H2 is in C_k iff (i) every edge lies in some C^k_i or D^k_i,
/// (ii) M_i covers [3]^k_i(2), (iii) N_i covers S^k_i, for every i.
inline MembershipReport member_C(const Graph& lattice) {
  const std::size_t k = detail::require_lattice(lattice, 3);
  const auto edges = detail::lattice_edges(lattice);
  MembershipReport report;
  report.member = true;
  for (auto& e : edges) {
    bool inside = false;
    for (int i = 1; i <= static_cast<int>(k) && !inside; ++i)
      inside = in_scaffold(ScaffoldKind::C, e.first, e.second, i) ||
               in_scaffold(ScaffoldKind::D, e.first, e.second, i);
    if (!inside) {
      report.member = false;
      report.outside_edge = e;
      break;
    }
  }
  for (int i = 1; i <= static_cast<int>(k); ++i) {
    CoverCheck mc{i, 'M', "[3]^k_" + std::to_string(i) + "(2)", {}, std::nullopt};
    CoverCheck nc{i, 'N', "S^k_" + std::to_string(i), {}, std::nullopt};
    for (auto& e : edges) {
      if (in_scaffold(ScaffoldKind::C, e.first, e.second, i)) mc.edges.push_back(e);
      if (in_scaffold(ScaffoldKind::D, e.first, e.second, i)) nc.edges.push_back(e);
    }
    mc.uncovered = detail::first_uncovered(mc.edges, Slice::of(k, 3, {i}, {2}).members());
    nc.uncovered = detail::first_uncovered(nc.edges, s_set(k, i));
    report.member = report.member && !mc.uncovered && !nc.uncovered;
    report.checks.push_back(std::move(mc));
    report.checks.push_back(std::move(nc));
  }
  return report;
}

inline MembershipReport member_C(const CompositeGraph& g) {
  if (g.m() != 3) throw error(errc::wrong_vertex_set, "family C composites have m = 3");
  auto report = member_C(g.lattice());
  if (auto e = g.base().edge_indices(); !e.empty()) {
    report.member = false;
    report.base_edge = std::pair{static_cast<int>(e[0].first + 1), static_cast<int>(e[0].second + 1)};
  }
  return report;
}

// ---------------------------------------------------------------------------
// Gamma_k, Cartesian powers and the named examples
// ---------------------------------------------------------------------------

/// Gamma_k: x ~ y iff x != y and |x_(i) - y_(i)| <= 1 for every i. Built
/// from the rule and from the union of all C^k_i, D^k_i; the two must agree.
inline Graph gamma_lattice(std::size_t k) {
  if (k < 2) throw error(errc::index_out_of_range, "Gamma_k needs k >= 2");
  const auto xs = lattice_vertices(k, 3);
  std::vector<IndexEdge> direct, from_scaffolds;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b) {
      if (detail::close_off(xs[a], xs[b], 0)) direct.emplace_back(a, b);
      for (int i = 1; i <= static_cast<int>(k); ++i)
        if (in_scaffold(ScaffoldKind::C, xs[a], xs[b], i) || in_scaffold(ScaffoldKind::D, xs[a], xs[b], i)) {
          from_scaffolds.emplace_back(a, b);
          break;
        }
    }
  auto g = Graph::from_index_edges(lattice_labels(k, 3), direct);
  if (g != Graph::from_index_edges(lattice_labels(k, 3), from_scaffolds))
    throw std::logic_error("Gamma_k rule and scaffold union disagree");
  return g;
}

/// Path on vertex ids 1..n, the factor used for P_n^{box s}.
inline Graph path_on_ids(std::size_t n) {
  std::vector<VertexLabel> vs;
  std::vector<IndexEdge> e;
  for (std::size_t i = 1; i <= n; ++i) vs.emplace_back(PlainVertex{static_cast<std::uint32_t>(i)});
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_index_edges(std::move(vs), e);
}

/// G^{box s}: tuples of vertex ids of g, adjacent iff they differ in exactly
/// one coordinate and that coordinate pair is an edge of g.
inline Graph cartesian_power(const Graph& g, std::size_t s) {
  std::vector<int> ids;
  for (const auto& v : g.vertices()) {
    const auto* p = std::get_if<PlainVertex>(&v);
    if (!p || p->id < 1 || p->id > 255)
      throw error(errc::invalid_graph, "cartesian_power needs plain vertex ids in 1..255");
    ids.push_back(static_cast<int>(p->id));
  }
  if (s < 1) throw error(errc::index_out_of_range, "power must be positive");
  if (s > kMaxLatticeDim) throw error(errc::size_overflow, "power exceeds the maximum lattice dimension");
  const std::size_t n = g.order();
  auto total = checked_pow(n, s);
  if (!total || *total > kMaxGraphOrder) throw error(errc::size_overflow, "Cartesian power is too large");

  // Tuples of positions in g, listed so that labels come out sorted.
  std::vector<VertexLabel> vs;
  std::vector<std::vector<std::size_t>> tuples;
  for (std::size_t r = 0; r < *total; ++r) {
    std::vector<std::size_t> t(s);
    std::size_t q = r;
    for (std::size_t p = s; p-- > 0;) {
      t[p] = q % n;
      q /= n;
    }
    LatticeVector x(s);
    for (std::size_t p = 0; p < s; ++p) x.set(p, ids[t[p]]);
    vs.emplace_back(x);
    tuples.push_back(std::move(t));
  }
  std::vector<IndexEdge> e;
  for (std::size_t a = 0; a < tuples.size(); ++a)
    for (std::size_t b = a + 1; b < tuples.size(); ++b) {
      std::size_t diff = 0, where = 0;
      for (std::size_t p = 0; p < s; ++p)
        if (tuples[a][p] != tuples[b][p]) ++diff, where = p;
      if (diff == 1 && g.adjacent(tuples[a][where], tuples[b][where])) e.emplace_back(a, b);
    }
  return Graph::from_index_edges(std::move(vs), e);
}

enum class Family { U, V, R, P2box, T, Qcanon, Gamma, MaxB, MaxC };

inline std::optional<Family> parse_family(std::string_view name) {
  if (name == "U") return Family::U;
  if (name == "V") return Family::V;
  if (name == "R") return Family::R;
  if (name == "P2box") return Family::P2box;
  if (name == "T") return Family::T;
  if (name == "Qcanon") return Family::Qcanon;
  if (name == "Gamma") return Family::Gamma;
  if (name == "MaxB") return Family::MaxB;
  if (name == "MaxC") return Family::MaxC;
  return std::nullopt;
}

namespace detail {

inline Graph lattice_by_rule(std::size_t k, int m, auto&& adjacent) {
  const auto xs = lattice_vertices(k, m);
  std::vector<IndexEdge> e;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      if (adjacent(xs[a], xs[b]) || adjacent(xs[b], xs[a])) e.emplace_back(a, b);
  return Graph::from_index_edges(lattice_labels(k, m), e);
}

}  // namespace detail

inline Graph u_graph(std::size_t k) {
  const LatticeVector ones(k, 1), twos(k, 2);
  return detail::lattice_by_rule(k, 2, [&](auto& x, auto& y) { return x == ones && y == twos; });
}

inline Graph v_graph(std::size_t k) {
  const LatticeVector twos(k, 2);
  return detail::lattice_by_rule(k, 2, [&](const LatticeVector& x, const LatticeVector& y) {
    int ones = 0;
    for (std::size_t p = 0; p < k; ++p) ones += x[p] == 1;
    return y == twos && ones == 1;
  });
}

inline Graph r_graph(std::size_t k) {
  return detail::lattice_by_rule(k, 2, [&](const LatticeVector& x, const LatticeVector& y) {
    for (std::size_t p = 0; p < k; ++p)
      if (x[p] == y[p]) return false;
    return true;
  });
}

inline Graph p2_box(std::size_t k) { return cartesian_power(path_on_ids(2), k); }

/// T_k = E_X + E_Z: each x in X joined to x - (1,...,1), and a matching on Z
/// pairing x with the vector that swaps 1 and 2 in every coordinate.
inline Graph t_graph(std::size_t k) {
  return detail::lattice_by_rule(k, 3, [&](const LatticeVector& x, const LatticeVector& y) {
    bool ex = in_x_set(x), ez = in_z_set(x) && in_z_set(y);
    for (std::size_t p = 0; p < k; ++p) {
      ex = ex && x[p] - y[p] == 1;
      const bool both3 = x[p] == 3 && y[p] == 3;
      const bool swap12 = std::min(x[p], y[p]) == 1 && std::max(x[p], y[p]) == 2;
      ez = ez && (both3 || swap12);
    }
    return ex || ez;
  });
}

/// P_3^{box k} without the edges {x, x'} having (x_(i), x'_(i)) = (2, 3) and
/// x_(j) = x'_(j) = 1 for some i, j.
inline Graph q_canonical(std::size_t k) {
  const Graph p3box = cartesian_power(path_on_ids(3), k);
  auto deleted = [&](const LatticeVector& x, const LatticeVector& y) {
    bool up = false, low = false;
    for (std::size_t p = 0; p < k; ++p) {
      up = up || (x[p] == 2 && y[p] == 3);
      low = low || (x[p] == 1 && y[p] == 1);
    }
    return up && low;
  };
  std::vector<IndexEdge> keep;
  for (auto [a, b] : p3box.edge_indices()) {
    const auto& x = std::get<LatticeVector>(p3box.label(a));
    const auto& y = std::get<LatticeVector>(p3box.label(b));
    if (!deleted(x, y) && !deleted(y, x)) keep.emplace_back(a, b);
  }
  return Graph::from_index_edges({p3box.vertices().begin(), p3box.vertices().end()}, keep);
}

using NamedGraph = std::variant<Graph, CompositeGraph>;

inline NamedGraph example_graph(Family f, std::size_t k) {
  if (k < 2) throw error(errc::index_out_of_range, "named examples need k >= 2");
  switch (f) {
    case Family::U: return u_graph(k);
    case Family::V: return v_graph(k);
    case Family::R: return r_graph(k);
    case Family::P2box: return p2_box(k);
    case Family::T: return t_graph(k);
    case Family::Qcanon: return q_canonical(k);
    case Family::Gamma: return gamma_lattice(k);
    case Family::MaxB: return compose(complete_base(k), complete_lattice(k, 2), k, 2);
    case Family::MaxC: return compose(null_base(k), gamma_lattice(k), k, 3);
  }
  throw error(errc::unknown_name, "unknown family");
}

inline NamedGraph example_graph(std::string_view name, std::size_t k) {
  auto f = parse_family(name);
  if (!f) throw error(errc::unknown_name, std::string(name));
  return example_graph(*f, k);
}

// ---------------------------------------------------------------------------
// Relabeling a certified graph onto [k] + [m]^k
// ---------------------------------------------------------------------------

/// Moves g onto the canonical vertex set through u -> i for u = w_i and
/// u -> Psi_W(u) otherwise. The cross edges of the result are implied by the
/// composition rule; they are checked against g's W-to-rest edges.
inline CompositeGraph canonical_relabel(const Graph& g, const CrsCertificate& cert) {
  if (cert.m != 2 && cert.m != 3)
    throw error(errc::invalid_certificate, "relabeling needs m(W) in {2, 3}");
  const std::size_t k = cert.k();
  if (k < 2) throw error(errc::invalid_certificate, "relabeling needs |W| >= 2");
  auto recheck = check_crs(g, std::span<const VertexLabel>(cert.w_order));
  const auto* fresh = std::get_if<CrsCertificate>(&recheck);
  if (!fresh || *fresh != cert) throw error(errc::invalid_certificate, "certificate does not match the graph");

  const auto w = detail::indices_of(g, cert.w_order);
  std::vector<std::size_t> where(g.order(), 0);  // vertex index -> lattice rank
  for (const auto& [u, x] : cert.table) where[g.index_of(u)] = x.rank(cert.m);

  std::vector<IndexEdge> be, le;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (g.adjacent(w[a], w[b])) be.emplace_back(a, b);
  std::vector<char> in_w(g.order(), 0);
  for (auto i : w) in_w[i] = 1;
  for (auto [a, b] : g.edge_indices()) {
    if (in_w[a] || in_w[b]) continue;
    auto ra = where[a], rb = where[b];
    le.emplace_back(std::min(ra, rb), std::max(ra, rb));
  }
  for (std::size_t p = 0; p < k; ++p)
    for (const auto& [u, x] : cert.table)
      if (g.adjacent(w[p], g.index_of(u)) != (x[p] == 1))
        throw error(errc::cross_edge_mismatch, to_string(u) + " vs " + to_string(cert.w_order[p]));
  return CompositeGraph(Graph::from_index_edges(base_labels(k), be),
                        Graph::from_index_edges(lattice_labels(k, cert.m), le), k, cert.m);
}

}  // namespace crslab
