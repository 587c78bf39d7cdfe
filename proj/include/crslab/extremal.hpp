#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "crslab/error.hpp"
#include "crslab/families.hpp"
#include "crslab/graph.hpp"
#include "crslab/parallel.hpp"

namespace crslab {

/// Subset of [k] as a bit mask, bit i-1 standing for i.
using IndexSet = std::uint32_t;

inline std::vector<int> members_of(IndexSet s) {
  std::vector<int> out;
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s) + 1);
  return out;
}

// ---------------------------------------------------------------------------
// J_x, I_x(e), I_x and the exclusive sets I~_x(e)
// ---------------------------------------------------------------------------

/// Index sets for a fixed pair (H1 on [k], H2 on [2]^k). Vertices are
/// addressed by lattice rank, edges by their position in edges().
class CoverIndexSets {
 public:
  CoverIndexSets(const Graph& base, const Graph& lattice)
      : k_(detail::require_lattice(lattice, 2)) {
    for (const auto& v : lattice.vertices()) vecs_.push_back(std::get<LatticeVector>(v));
    if (!is_base_graph(base, k_)) throw error(errc::wrong_vertex_set, "base graph must have vertex set [k]");
    const std::size_t n = lattice.order();
    j_.assign(n, 0);
    for (int i = 1; i <= static_cast<int>(k_); ++i)
      for (auto& x : neighborhood_slice(base, i)) j_[x.rank(2)] |= IndexSet{1} << (i - 1);

    edges_ = lattice.edge_indices();
    at_first_.resize(edges_.size());
    at_second_.resize(edges_.size());
    i_.assign(n, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& x = vec(edges_[e].first);
      const auto& y = vec(edges_[e].second);
      IndexSet in_l = 0;  // i with e in L_i
      for (std::size_t p = 0; p < k_; ++p)
        if (x[p] != y[p]) in_l |= IndexSet{1} << p;
      at_first_[e] = in_l & j_[edges_[e].first];
      at_second_[e] = in_l & j_[edges_[e].second];
      i_[edges_[e].first] |= at_first_[e];
      i_[edges_[e].second] |= at_second_[e];
    }
  }

  std::size_t k() const noexcept { return k_; }
  std::size_t vertex_count() const noexcept { return j_.size(); }
  const std::vector<IndexEdge>& edges() const noexcept { return edges_; }
  const LatticeVector& vec(std::size_t rank) const { return vecs_[rank]; }

  IndexSet J(std::size_t x) const { return j_[x]; }
  IndexSet I(std::size_t x) const { return i_[x]; }

  IndexSet I(std::size_t x, std::size_t e) const {
    if (edges_[e].first == x) return at_first_[e];
    if (edges_[e].second == x) return at_second_[e];
    return 0;
  }

  IndexSet I_tilde(std::size_t x, std::size_t e) const {
    IndexSet others = 0;
    for (std::size_t f = 0; f < edges_.size(); ++f)
      if (f != e) others |= I(x, f);
    return I(x) & ~others;
  }

 private:
  std::size_t k_;
  std::vector<LatticeVector> vecs_;
  std::vector<IndexSet> j_, i_;
  std::vector<IndexEdge> edges_;
  std::vector<IndexSet> at_first_, at_second_;
};

inline CoverIndexSets cover_index_sets(const Graph& base, const Graph& lattice) {
  return CoverIndexSets(base, lattice);
}

// ---------------------------------------------------------------------------
// Minimality
// ---------------------------------------------------------------------------

/// Why one edge cannot be deleted: a vertex that only this edge covers for
/// the listed indices (B side), or the covering that deletion breaks (C side).
struct EdgeJustification {
  LatticeEdge edge;
  std::optional<LatticeVector> witness;
  std::vector<int> indices;
  char cover = 'L';
};

struct MinimalityReport {
  bool minimal = false;
  bool member = false;
  // B side: a vertex with I_x != J_x.
  std::optional<LatticeVector> unmatched_vertex;
  std::vector<EdgeJustification> edges;
  std::optional<LatticeEdge> removable_edge;
};

/// H2 is H1-minimal iff I_x = J_x for every x and every edge has some x
/// with I~_x(e) nonempty.
inline MinimalityReport is_h1_minimal(const Graph& base, const Graph& lattice) {
  const CoverIndexSets sets(base, lattice);
  MinimalityReport report;
  report.member = true;
  for (std::size_t x = 0; x < sets.vertex_count(); ++x)
    if (sets.I(x) != sets.J(x)) {
      report.member = false;
      report.unmatched_vertex = sets.vec(x);
      break;
    }
  report.minimal = report.member;
  for (std::size_t e = 0; e < sets.edges().size(); ++e) {
    const auto [a, b] = sets.edges()[e];
    EdgeJustification just{{sets.vec(a), sets.vec(b)}, std::nullopt, {}, 'L'};
    for (auto x : {a, b})
      if (auto t = sets.I_tilde(x, e)) {
        just.witness = sets.vec(x);
        just.indices = members_of(t);
        break;
      }
    if (!just.witness && report.minimal) {
      report.minimal = false;
      report.removable_edge = just.edge;
    }
    report.edges.push_back(std::move(just));
  }
  return report;
}

/// Whether H1 o H2 is minimal in B_k itself: no base or lattice edge can be
/// deleted. Membership is closed upward, so single deletions decide it.
struct CompositeMinimality {
  bool minimal = false;
  bool member = false;
  std::optional<std::pair<int, int>> removable_base_edge;
  std::optional<LatticeEdge> removable_lattice_edge;
};

inline CompositeMinimality is_composite_minimal_B(const Graph& base, const Graph& lattice) {
  CompositeMinimality out;
  out.member = member_B(base, lattice).member;
  if (!out.member) return out;
  for (auto [a, b] : base.edge_indices())
    if (member_B(base.with_edge(a, b, false), lattice).member) {
      out.removable_base_edge = std::pair{static_cast<int>(a + 1), static_cast<int>(b + 1)};
      return out;
    }
  for (auto [a, b] : lattice.edge_indices())
    if (member_B(base, lattice.with_edge(a, b, false)).member) {
      out.removable_lattice_edge = LatticeEdge{std::get<LatticeVector>(lattice.label(a)),
                                               std::get<LatticeVector>(lattice.label(b))};
      return out;
    }
  out.minimal = true;
  return out;
}

/// H2 is k-minimal iff (null base) o H2 is in C_k and no single edge deletion keeps it there.
inline MinimalityReport is_k_minimal(const Graph& lattice) {
  MinimalityReport report;
  report.member = member_C(lattice).member;
  report.minimal = report.member;
  if (!report.member) return report;
  for (auto [a, b] : lattice.edge_indices()) {
    EdgeJustification just{{std::get<LatticeVector>(lattice.label(a)), std::get<LatticeVector>(lattice.label(b))},
                           std::nullopt, {}, 'M'};
    const auto after = member_C(lattice.with_edge(a, b, false));
    for (const auto& c : after.checks)
      if (c.uncovered) {
        just.witness = c.uncovered;
        just.indices = {c.i};
        just.cover = c.name;
        break;
      }
    if (after.member && report.minimal) {
      report.minimal = false;
      report.removable_edge = just.edge;
    }
    report.edges.push_back(std::move(just));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Edge-count bounds
// ---------------------------------------------------------------------------

struct SizeBounds {
  long long lower = 0;
  long long upper = 0;
  friend bool operator==(const SizeBounds&, const SizeBounds&) = default;
};

namespace detail {

inline std::vector<int> base_degrees(const Graph& base) {
  std::vector<int> d;
  for (std::size_t i = 0; i < base.order(); ++i) d.push_back(static_cast<int>(base.degree(i)));
  return d;
}

inline long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline void require_base(const Graph& base) {
  for (const auto& v : base.vertices())
    if (!is_base(v)) throw error(errc::wrong_vertex_set, "base graph must have vertex set [k]");
  if (!is_base_graph(base, base.order())) throw error(errc::wrong_vertex_set, "base graph must have vertex set [k]");
}

}  // namespace detail

/// Lattice-size bounds for an H1-minimal graph:
/// 2^(k - min d_i - 1) <= |E(H2)| <= sum 2^(k - d_i - 1).
inline SizeBounds bounds_B(const Graph& base) {
  detail::require_base(base);
  const int k = static_cast<int>(base.order());
  const auto d = detail::base_degrees(base);
  SizeBounds b;
  b.lower = detail::pow_ll(2, k - *std::min_element(d.begin(), d.end()) - 1);
  for (int di : d) b.upper += detail::pow_ll(2, k - di - 1);
  return b;
}

/// (3^k + 1)/2 <= |E(H2)| <= k (3^(k-1) + 2^(k-1)) for k-minimal H2.
inline SizeBounds bounds_C(int k) {
  if (k < 2) throw error(errc::index_out_of_range, "bounds_C needs k >= 2");
  return {(detail::pow_ll(3, k) + 1) / 2, k * (detail::pow_ll(3, k - 1) + detail::pow_ll(2, k - 1))};
}

/// Whole-composite sizes of a minimal graph in B_k with base H1.
inline SizeBounds composite_size_bounds_B(const Graph& base) {
  detail::require_base(base);
  const int k = static_cast<int>(base.order());
  const auto d = detail::base_degrees(base);
  long long sum_d = 0, sum_upper = 0;
  for (int di : d) {
    sum_d += di;
    sum_upper += detail::pow_ll(2, k - di) + di;
  }
  const long long cross = k * detail::pow_ll(2, k - 1);
  return {cross + sum_d / 2 + detail::pow_ll(2, k - *std::min_element(d.begin(), d.end()) - 1),
          cross + sum_upper / 2};
}

/// Whole-composite sizes of a minimal graph in C_k.
inline SizeBounds composite_size_bounds_C(int k) {
  if (k < 2) throw error(errc::index_out_of_range, "composite_size_bounds_C needs k >= 2");
  return {((2LL * k + 3) * detail::pow_ll(3, k - 1) + 1) / 2,
          2LL * k * (detail::pow_ll(3, k - 1) + detail::pow_ll(2, k - 2))};
}

// ---------------------------------------------------------------------------
// Tightness of the B-side bounds
// ---------------------------------------------------------------------------

struct BoundsReport {
  long long lower = 0;
  long long upper = 0;
  long long actual = 0;
  // Verdicts from the structural criteria, not from the counts.
  bool lower_tight = false;
  bool upper_tight = false;
  // A minimum-degree i with L_i = E(H2), when one exists.
  std::optional<int> lower_witness;
  bool cond_a = true;  // |I_x(e)| <= 1
  bool cond_b = true;  // I_x(e) or I_y(e) empty for x != y
  bool cond_c = true;  // I_x(e) and I_x(f) disjoint for e != f
  std::string violation;

  /// Structural verdicts agree with comparing `actual` against the bounds.
  bool consistent() const noexcept {
    return lower_tight == (actual == lower) && upper_tight == (actual == upper);
  }
};

inline BoundsReport tightness_B(const Graph& base, const Graph& lattice) {
  if (!is_h1_minimal(base, lattice).minimal) throw error(errc::not_minimal, "lattice is not H1-minimal");
  const CoverIndexSets sets(base, lattice);
  const auto b = bounds_B(base);
  BoundsReport r;
  r.lower = b.lower;
  r.upper = b.upper;
  r.actual = static_cast<long long>(lattice.size());

  const auto d = detail::base_degrees(base);
  const int min_d = *std::min_element(d.begin(), d.end());
  for (int i = 1; i <= static_cast<int>(sets.k()) && !r.lower_witness; ++i) {
    if (d[i - 1] != min_d) continue;
    bool all_in_l = true;
    for (auto [a, c] : sets.edges())
      all_in_l = all_in_l && sets.vec(a).coord(i) != sets.vec(c).coord(i);
    if (all_in_l) r.lower_witness = i;
  }
  r.lower_tight = r.lower_witness.has_value();

  const auto& edges = sets.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [x, y] = edges[e];
    for (auto v : {x, y})
      if (std::popcount(sets.I(v, e)) > 1 && r.cond_a) {
        r.cond_a = false;
        r.violation = "(a) |I_x(e)| > 1 at x=" + sets.vec(v).str();
      }
    // I_z(e) is empty unless z is an endpoint of e, so (b) concerns the two endpoints.
    if (sets.I(x, e) && sets.I(y, e) && r.cond_b) {
      r.cond_b = false;
      if (r.violation.empty()) r.violation = "(b) both endpoints of an edge have nonempty I";
    }
    for (std::size_t f = e + 1; f < edges.size(); ++f)
      for (auto v : {x, y})
        if ((sets.I(v, e) & sets.I(v, f)) && r.cond_c) {
          r.cond_c = false;
          if (r.violation.empty()) r.violation = "(c) two edges share an index at x=" + sets.vec(v).str();
        }
  }
  r.upper_tight = r.cond_a && r.cond_b && r.cond_c;
  return r;
}

// ---------------------------------------------------------------------------
// epsilon_i(x) and Q_k
// ---------------------------------------------------------------------------

inline bool epsilon_eligible(int i, const LatticeVector& x) {
  const bool in_s = x.coord(i) == 3 && in_x_set(x);
  return x.coord(i) == 2 || in_s;
}

/// epsilon_i(x): edges {x, x'} with x'_(i) = x_(i) - 1 and, off position i,
/// x' copying x (x in S^k_i), x' in {2,3} over 2 and 3 over 3 (x in X), or
/// x' = 1 over 1 and in {2,3} over {2,3} (x outside X). Edges come out as
/// (x, x') with x' ascending.
inline std::vector<LatticeEdge> epsilon(std::size_t k, int i, const LatticeVector& x) {
  detail::check_index(k, i);
  if (x.dim() != k || !x.in_box(3)) throw error(errc::wrong_vertex_set, x.str() + " is not in [3]^k");
  if (!epsilon_eligible(i, x))
    throw error(errc::vertex_not_eligible, x.str() + " is in neither [3]^k_i(2) nor S^k_i");

  // Allowed values for each coordinate of x', as bit masks over {1,2,3}.
  std::vector<unsigned> allowed(k);
  for (std::size_t p = 0; p < k; ++p) {
    const int v = x[p];
    if (static_cast<int>(p) == i - 1)
      allowed[p] = 1u << (v - 2);
    else if (x.coord(i) == 3)
      allowed[p] = 1u << (v - 1);
    else if (in_x_set(x))
      allowed[p] = v == 2 ? 0b110u : 0b100u;
    else
      allowed[p] = v == 1 ? 0b001u : 0b110u;
  }
  std::vector<LatticeEdge> out;
  for (auto& y : lattice_vertices(k, 3)) {
    bool ok = true;
    for (std::size_t p = 0; p < k && ok; ++p) ok = (allowed[p] >> (y[p] - 1)) & 1u;
    if (ok) out.emplace_back(x, y);
  }
  return out;
}

/// The pairs (i, x) with x in [3]^k_i(2) or S^k_i, in lexicographic order.
struct EpsilonSite {
  int i;
  LatticeVector x;
  std::vector<LatticeEdge> choices;
};

inline std::vector<EpsilonSite> epsilon_sites(std::size_t k) {
  std::vector<EpsilonSite> out;
  const auto xs = lattice_vertices(k, 3);
  for (int i = 1; i <= static_cast<int>(k); ++i)
    for (auto& x : xs)
      if (epsilon_eligible(i, x)) out.push_back({i, x, epsilon(k, i, x)});
  return out;
}

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

inline std::uint64_t q_family_size(std::size_t k) {
  std::uint64_t total = 1;
  for (auto& s : epsilon_sites(k)) {
    if (total > (std::uint64_t{1} << 62) / std::max<std::size_t>(1, s.choices.size()))
      return std::numeric_limits<std::uint64_t>::max();
    total *= s.choices.size();
  }
  return total;
}

/// Visits every member of Q_k as its edge list (one edge per epsilon site,
/// rank pairs on [3]^k), choices in lexicographic (i, x, edge) order. The
/// visitor returns false to stop.
template <class Visitor>
void for_each_Q(std::size_t k, Visitor&& visit) {
  if (k < 2) throw error(errc::index_out_of_range, "Q_k needs k >= 2");
  const auto sites = epsilon_sites(k);
  std::vector<std::vector<IndexEdge>> choices(sites.size());
  for (std::size_t s = 0; s < sites.size(); ++s)
    for (const auto& [x, y] : sites[s].choices)
      choices[s].emplace_back(std::min(x.rank(3), y.rank(3)), std::max(x.rank(3), y.rank(3)));
  std::vector<std::size_t> digit(sites.size(), 0);
  std::vector<IndexEdge> e(sites.size());
  for (std::size_t s = 0; s < sites.size(); ++s) e[s] = choices[s][0];
  while (true) {
    if (!visit(std::span<const IndexEdge>(e))) return;
    std::size_t s = sites.size();
    while (s-- > 0) {
      if (++digit[s] < choices[s].size()) {
        e[s] = choices[s][digit[s]];
        break;
      }
      digit[s] = 0;
      e[s] = choices[s][0];
    }
    if (s == static_cast<std::size_t>(-1)) return;
  }
}

/// Q_k materialized; refuses when |Q_k| exceeds cap.
inline std::vector<Graph> enumerate_Q(std::size_t k, std::uint64_t cap = kDefaultEnumerationCap) {
  if (k < 2) throw error(errc::index_out_of_range, "Q_k needs k >= 2");
  const auto total = q_family_size(k);
  if (total > cap)
    throw error(errc::enumeration_cap_exceeded, "|Q_k| = " + std::to_string(total) + " exceeds the cap");
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(total));
  const auto labels = lattice_labels(k, 3);
  for_each_Q(k, [&](std::span<const IndexEdge> e) {
    out.push_back(Graph::from_index_edges(labels, e));
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Critical edges
// ---------------------------------------------------------------------------

enum class FamilyKind { B, C };

/// Per index i: E'_i (family B) in `primary`, or M'_i in `primary` and N'_i
/// in `secondary` (family C). An edge is critical when removing it from its
/// covering set leaves a target vertex uncovered.
struct CriticalEdgeSets {
  FamilyKind kind = FamilyKind::B;
  std::vector<std::vector<LatticeEdge>> primary;
  std::vector<std::vector<LatticeEdge>> secondary;
};

namespace detail {

inline std::vector<LatticeEdge> critical_within(const std::vector<LatticeEdge>& cover,
                                                const std::vector<LatticeVector>& targets) {
  std::vector<LatticeEdge> out;
  for (std::size_t e = 0; e < cover.size(); ++e) {
    std::vector<LatticeEdge> rest;
    for (std::size_t f = 0; f < cover.size(); ++f)
      if (f != e) rest.push_back(cover[f]);
    if (first_uncovered(rest, targets)) out.push_back(cover[e]);
  }
  return out;
}

}  // namespace detail

inline CriticalEdgeSets critical_edges_B(const Graph& base, const Graph& lattice) {
  const auto report = member_B(base, lattice);
  if (!report.member) throw error(errc::not_member, "H1 o H2 is not in B_k");
  CriticalEdgeSets out{FamilyKind::B, {}, {}};
  for (const auto& c : report.checks)
    out.primary.push_back(detail::critical_within(c.edges, neighborhood_slice(base, c.i)));
  return out;
}

inline CriticalEdgeSets critical_edges_C(const Graph& lattice) {
  const auto report = member_C(lattice);
  if (!report.member) throw error(errc::not_member, "lattice is not in C_k");
  const std::size_t k = lattice_shape(lattice)->first;
  CriticalEdgeSets out{FamilyKind::C, {}, {}};
  for (const auto& c : report.checks) {
    if (c.name == 'M')
      out.primary.push_back(detail::critical_within(c.edges, Slice::of(k, 3, {c.i}, {2}).members()));
    else
      out.secondary.push_back(detail::critical_within(c.edges, s_set(k, c.i)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of minimal lattices
// ---------------------------------------------------------------------------

/// A ground set of candidate lattice edges plus covering requirements, each a
/// mask of ground edges at least one of which must be present. Membership
/// (base fixed for B, inside Gamma_k for C) is exactly "every requirement hit".
class CoverSystem {
 public:
  CoverSystem(std::size_t k, int m, std::vector<IndexEdge> ground) : k_(k), m_(m), ground_(std::move(ground)) {
    if (ground_.size() > 64) throw error(errc::enumeration_cap_exceeded, "ground set exceeds 64 edges");
  }

  void require(const std::vector<std::size_t>& covering_edges) {
    std::uint64_t mask = 0;
    for (auto e : covering_edges) mask |= std::uint64_t{1} << e;
    requirements_.push_back(mask);
  }

  std::size_t ground_size() const noexcept { return ground_.size(); }
  std::span<const IndexEdge> ground() const noexcept { return ground_; }

  bool member(std::uint64_t mask) const noexcept {
    for (auto r : requirements_)
      if (!(mask & r)) return false;
    return true;
  }

  Graph graph(std::uint64_t mask) const {
    std::vector<IndexEdge> e;
    for (std::size_t b = 0; b < ground_.size(); ++b)
      if ((mask >> b) & 1u) e.push_back(ground_[b]);
    return Graph::from_index_edges(lattice_labels(k_, m_), e);
  }

 private:
  std::size_t k_;
  int m_;
  std::vector<IndexEdge> ground_;
  std::vector<std::uint64_t> requirements_;
};

/// Family B with base fixed: ground = all pairs of [2]^k, one requirement
/// per (i, x) with x in [2]^k_{H1(i)}(2).
inline CoverSystem cover_system_B(const Graph& base) {
  detail::require_base(base);
  const std::size_t k = base.order();
  const auto xs = lattice_vertices(k, 2);
  std::vector<IndexEdge> ground;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b) ground.emplace_back(a, b);
  CoverSystem sys(k, 2, ground);
  for (int i = 1; i <= static_cast<int>(k); ++i)
    for (auto& t : neighborhood_slice(base, i)) {
      std::vector<std::size_t> cover;
      for (std::size_t e = 0; e < ground.size(); ++e) {
        const auto& x = xs[ground[e].first];
        const auto& y = xs[ground[e].second];
        if ((x == t || y == t) && in_scaffold(ScaffoldKind::B, x, y, i)) cover.push_back(e);
      }
      sys.require(cover);
    }
  return sys;
}

/// Family C: ground = E(Gamma_k); requirements from M_i over [3]^k_i(2)
/// and N_i over S^k_i.
inline CoverSystem cover_system_C(std::size_t k) {
  const Graph g = gamma_lattice(k);
  const auto ground = g.edge_indices();
  const auto xs = lattice_vertices(k, 3);
  CoverSystem sys(k, 3, ground);
  for (int i = 1; i <= static_cast<int>(k); ++i) {
    auto add = [&](const std::vector<LatticeVector>& targets, ScaffoldKind kind) {
      for (auto& t : targets) {
        std::vector<std::size_t> cover;
        for (std::size_t e = 0; e < ground.size(); ++e) {
          const auto& x = xs[ground[e].first];
          const auto& y = xs[ground[e].second];
          if ((x == t || y == t) && in_scaffold(kind, x, y, i)) cover.push_back(e);
        }
        sys.require(cover);
      }
    };
    add(Slice::of(k, 3, {i}, {2}).members(), ScaffoldKind::C);
    add(s_set(k, i), ScaffoldKind::D);
  }
  return sys;
}

/// Size first, then edge list lexicographically.
inline bool canonical_less(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.edge_indices() < b.edge_indices();
}

struct EnumerationOptions {
  unsigned jobs = 1;
  std::size_t max_ground_bits = 24;
};

/// All minimal members of a cover system: members whose every one-edge
/// deletion is a non-member. Sorted canonically.
inline std::vector<Graph> enumerate_minimal(const CoverSystem& sys, const EnumerationOptions& opt = {}) {
  if (sys.ground_size() > opt.max_ground_bits)
    throw error(errc::enumeration_cap_exceeded,
                "2^" + std::to_string(sys.ground_size()) + " candidate lattices exceed the cap");
  const std::uint64_t total = std::uint64_t{1} << sys.ground_size();
  std::vector<char> member(total, 0);
  parallel_ranges(total, opt.jobs, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    for (auto mask = lo; mask < hi; ++mask) member[mask] = sys.member(mask);
  });
  std::vector<std::vector<std::uint64_t>> found(std::max(1u, opt.jobs));
  parallel_ranges(total, opt.jobs, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
    for (auto mask = lo; mask < hi; ++mask) {
      if (!member[mask]) continue;
      bool minimal = true;
      for (auto bits = mask; bits && minimal; bits &= bits - 1) minimal = !member[mask & ~(bits & -bits)];
      if (minimal) found[w].push_back(mask);
    }
  });
  std::vector<Graph> out;
  for (auto& part : found)
    for (auto mask : part) out.push_back(sys.graph(mask));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

inline std::vector<Graph> enumerate_minimal_B(const Graph& base, const EnumerationOptions& opt = {}) {
  return enumerate_minimal(cover_system_B(base), opt);
}

inline std::vector<Graph> enumerate_minimal_C(std::size_t k, const EnumerationOptions& opt = {}) {
  if (k < 2) throw error(errc::index_out_of_range, "k-minimal graphs need k >= 2");
  const auto edges = (detail::pow_ll(7, static_cast<int>(k)) - detail::pow_ll(3, static_cast<int>(k))) / 2;
  if (static_cast<std::size_t>(edges) > opt.max_ground_bits)
    throw error(errc::enumeration_cap_exceeded, "|E(Gamma_k)| = " + std::to_string(edges) + " exceeds the cap");
  return enumerate_minimal(cover_system_C(k), opt);
}

}  // namespace crslab
