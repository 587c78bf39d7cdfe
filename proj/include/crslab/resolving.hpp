#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "crslab/combinatorics.hpp"
#include "crslab/distance.hpp"
#include "crslab/error.hpp"
#include "crslab/graph.hpp"

namespace crslab {

inline constexpr std::size_t kDefaultOrderCap = 12;

/// Witness that w_order is a completeness-resolving set: table maps every
/// vertex outside W to its distance vector, a bijection onto [m]^|W|.
/// Entries are sorted by vector.
struct CrsCertificate {
  std::vector<VertexLabel> w_order;
  int m = 0;
  std::vector<std::pair<VertexLabel, LatticeVector>> table;

  std::size_t k() const noexcept { return w_order.size(); }

  friend bool operator==(const CrsCertificate&, const CrsCertificate&) = default;
};

enum class CrsFailureReason { cardinality_mismatch, not_injective, not_surjective };

constexpr std::string_view to_string(CrsFailureReason r) {
  switch (r) {
    case CrsFailureReason::cardinality_mismatch: return "CardinalityMismatch";
    case CrsFailureReason::not_injective: return "NotInjective";
    case CrsFailureReason::not_surjective: return "NotSurjective";
  }
  return "Unknown";
}

struct CrsFailure {
  CrsFailureReason reason;
  int m = 0;
  std::string detail;
};

using CrsOutcome = std::variant<CrsCertificate, CrsFailure>;

inline bool succeeded(const CrsOutcome& o) { return std::holds_alternative<CrsCertificate>(o); }

namespace detail {

inline void validate_w(const Graph& g, std::span<const std::size_t> w) {
  if (w.empty()) throw error(errc::invalid_w, "W is empty");
  if (w.size() >= g.order()) throw error(errc::invalid_w, "W must be a proper subset of V");
  std::vector<std::size_t> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw error(errc::invalid_w, "W lists a vertex twice");
}

inline std::vector<std::size_t> indices_of(const Graph& g, std::span<const VertexLabel> labels) {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& v : labels) out.push_back(g.index_of(v));
  return out;
}

// Distances from each w in W, one row per w. Throws on disconnection.
struct WDistances {
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<char> in_w;
  std::uint32_t m = 0;

  WDistances(const Graph& g, std::span<const std::size_t> w) : rows(w.size()), in_w(g.order(), 0) {
    validate_w(g, w);
    for (auto i : w) in_w[i] = 1;
    for (std::size_t r = 0; r < w.size(); ++r) {
      bfs_levels(g, w[r], rows[r]);
      for (std::size_t u = 0; u < g.order(); ++u) {
        if (rows[r][u] == kNoPath) throw error(errc::disconnected_graph, "graph is not connected");
        if (!in_w[u]) m = std::max(m, rows[r][u]);
      }
    }
  }

  bool injective() const {
    const std::size_t k = rows.size();
    const std::size_t n = in_w.size();
    std::vector<std::size_t> outside;
    for (std::size_t u = 0; u < n; ++u)
      if (!in_w[u]) outside.push_back(u);
    auto less = [&](std::size_t a, std::size_t b) {
      for (std::size_t r = 0; r < k; ++r)
        if (rows[r][a] != rows[r][b]) return rows[r][a] < rows[r][b];
      return false;
    };
    std::sort(outside.begin(), outside.end(), less);
    for (std::size_t p = 1; p < outside.size(); ++p)
      if (!less(outside[p - 1], outside[p])) return false;
    return true;
  }

  LatticeVector vector_of(std::size_t u) const {
    if (rows.size() > kMaxLatticeDim)
      throw error(errc::size_overflow, "|W| exceeds the maximum lattice dimension");
    LatticeVector x(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][u] > 255) throw error(errc::size_overflow, "distance does not fit a lattice coordinate");
      x.set(r, static_cast<int>(rows[r][u]));
    }
    return x;
  }
};

}  // namespace detail

/// m(W): the largest distance from a vertex of W to a vertex outside W.
inline int truncation_radius(const Graph& g, std::span<const VertexLabel> w) {
  const auto idx = detail::indices_of(g, w);
  return static_cast<int>(detail::WDistances(g, idx).m);
}

inline LatticeVector resolve_vector(const Graph& g, std::span<const VertexLabel> w_order,
                                    const VertexLabel& u) {
  const auto idx = detail::indices_of(g, w_order);
  const auto ui = g.index_of(u);
  if (std::find(idx.begin(), idx.end(), ui) != idx.end())
    throw error(errc::vertex_in_w, to_string(u) + " belongs to W");
  return detail::WDistances(g, idx).vector_of(ui);
}

inline bool is_resolving_set(const Graph& g, std::span<const std::size_t> w) {
  return detail::WDistances(g, w).injective();
}

inline bool is_resolving_set(const Graph& g, std::span<const VertexLabel> w) {
  const auto idx = detail::indices_of(g, w);
  return is_resolving_set(g, idx);
}

/// Index form of check_crs; w lists vertex indices in coordinate order.
inline CrsOutcome check_crs(const Graph& g, std::span<const std::size_t> w) {
  const detail::WDistances dist(g, w);
  const std::size_t k = w.size();
  const std::size_t rest = g.order() - k;
  const auto box = checked_pow(dist.m, k);
  if (!box || *box != rest) {
    return CrsFailure{CrsFailureReason::cardinality_mismatch, static_cast<int>(dist.m),
                      std::to_string(rest) + " vertices outside W, box has " +
                          (box ? std::to_string(*box) : std::string("overflowing")) + " points"};
  }
  if (!dist.injective())
    return CrsFailure{CrsFailureReason::not_injective, static_cast<int>(dist.m),
                      "two vertices share a distance vector"};

  CrsCertificate cert;
  cert.m = static_cast<int>(dist.m);
  for (auto i : w) cert.w_order.push_back(g.label(i));
  std::vector<char> hit(rest, 0);
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (dist.in_w[u]) continue;
    auto x = dist.vector_of(u);
    // Every coordinate lies in [1, m] by the definition of m, so rank is in range.
    hit[x.rank(cert.m)] = 1;
    cert.table.emplace_back(g.label(u), x);
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    return CrsFailure{CrsFailureReason::not_surjective, cert.m, "distance vectors miss a box point"};
  std::sort(cert.table.begin(), cert.table.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return cert;
}

inline CrsOutcome check_crs(const Graph& g, std::span<const VertexLabel> w_order) {
  const auto idx = detail::indices_of(g, w_order);
  return check_crs(g, idx);
}

/// The same certificate with W (and every table vector) reordered: new
/// coordinate p is old coordinate perm[p].
inline CrsCertificate permute_coordinates(const CrsCertificate& cert, std::span<const std::size_t> perm) {
  CrsCertificate out;
  out.m = cert.m;
  for (auto p : perm) out.w_order.push_back(cert.w_order[p]);
  for (const auto& [u, x] : cert.table) {
    LatticeVector y(perm.size());
    for (std::size_t p = 0; p < perm.size(); ++p) y.set(p, x[perm[p]]);
    out.table.emplace_back(u, y);
  }
  std::sort(out.table.begin(), out.table.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

/// All |W|! coordinate orders of a certificate, identity first.
inline std::vector<CrsCertificate> all_coordinate_orders(const CrsCertificate& cert) {
  std::vector<std::size_t> perm(cert.k());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<CrsCertificate> out;
  do {
    out.push_back(permute_coordinates(cert, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct CrsSearchOptions {
  std::size_t order_cap = kDefaultOrderCap;
  // Skip cardinalities that cannot satisfy |V \ W| = m^|W| with m <= 3, and
  // require W independent when m >= 3. Off means every proper subset is tried.
  bool prune = true;
  // Smallest |W| considered.
  std::size_t min_size = 1;
  // Stop after the first certificate.
  bool first_only = false;
};

namespace detail {

inline void check_order_cap(const Graph& g, std::size_t cap) {
  if (g.order() > cap)
    throw error(errc::order_cap_exceeded,
                "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  if (!is_connected(g)) throw error(errc::disconnected_graph, "graph is not connected");
}

inline bool independent(const Graph& g, std::span<const std::size_t> w) {
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (g.adjacent(w[a], w[b])) return false;
  return true;
}

// m forced by |V \ W| = m^|W|, restricted to m in {1,2,3}; nullopt if none.
inline std::optional<int> implied_radius(std::size_t rest, std::size_t k) {
  for (int m = 1; m <= 3; ++m) {
    auto p = checked_pow(static_cast<std::uint64_t>(m), k);
    if (p && *p == rest) return m;
  }
  return std::nullopt;
}

}  // namespace detail

/// Every completeness-resolving set of g, one certificate per unordered W
/// (coordinates in canonical vertex order), by increasing |W| then
/// lexicographically. all_coordinate_orders() expands the orderings.
inline std::vector<CrsCertificate> find_all_crs(const Graph& g, const CrsSearchOptions& opt = {}) {
  detail::check_order_cap(g, opt.order_cap);
  std::vector<CrsCertificate> found;
  const std::size_t n = g.order();
  for (std::size_t r = std::max<std::size_t>(opt.min_size, 1); r < n; ++r) {
    std::optional<int> m;
    if (opt.prune && r >= 2) {
      m = detail::implied_radius(n - r, r);
      if (!m) continue;
    }
    const bool done = !for_each_combination(n, r, [&](std::span<const std::size_t> w) {
      if (m && *m >= 3 && !detail::independent(g, w)) return true;
      auto outcome = check_crs(g, w);
      if (auto* cert = std::get_if<CrsCertificate>(&outcome)) {
        found.push_back(std::move(*cert));
        if (opt.first_only) return false;
      }
      return true;
    });
    if (done) break;
  }
  return found;
}

inline bool is_path(const Graph& g) {
  std::size_t leaves = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto d = g.degree(i);
    if (d == 1)
      ++leaves;
    else if (d != 2)
      return false;
  }
  return leaves == 2 && is_connected(g);
}

inline std::optional<std::size_t> universal_vertex(const Graph& g) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.degree(i) + 1 == g.order()) return i;
  return std::nullopt;
}

enum class CrgClass { path, universal_vertex, family_b, family_c, not_completeness_resolvable };

constexpr std::string_view to_string(CrgClass c) {
  switch (c) {
    case CrgClass::path: return "Path";
    case CrgClass::universal_vertex: return "UniversalVertex";
    case CrgClass::family_b: return "FamilyB";
    case CrgClass::family_c: return "FamilyC";
    case CrgClass::not_completeness_resolvable: return "NotCompletenessResolvable";
  }
  return "Unknown";
}

struct ClassificationVerdict {
  CrgClass verdict = CrgClass::not_completeness_resolvable;
  int k = 0;
  std::optional<CrsCertificate> witness;
};

/// Decides which completeness-resolvable class g falls in: paths and graphs
/// with a universal vertex structurally, otherwise by CRS search with
/// |W| >= 2, where m(W) = 2 means family B and m(W) = 3 family C.
inline ClassificationVerdict is_completeness_resolvable(const Graph& g,
                                                        std::size_t order_cap = kDefaultOrderCap) {
  detail::check_order_cap(g, order_cap);
  auto certify = [&](std::vector<std::size_t> w) {
    return std::get<CrsCertificate>(check_crs(g, std::span<const std::size_t>(w)));
  };

  if (is_path(g)) {
    for (std::size_t i = 0; i < g.order(); ++i)
      if (g.degree(i) == 1) return {CrgClass::path, 1, certify({i})};
  }
  if (auto u = universal_vertex(g)) {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < g.order(); ++i)
      if (i != *u) w.push_back(i);
    return {CrgClass::universal_vertex, static_cast<int>(w.size()), certify(w)};
  }
  CrsSearchOptions opt;
  opt.order_cap = order_cap;
  opt.min_size = 2;
  opt.first_only = true;
  auto found = find_all_crs(g, opt);
  if (found.empty()) return {};
  auto& cert = found.front();
  const auto kind = cert.m == 2 ? CrgClass::family_b : CrgClass::family_c;
  const int k = static_cast<int>(cert.k());
  return {kind, k, std::move(cert)};
}

struct MetricDimension {
  std::size_t dimension = 0;
  std::vector<VertexLabel> basis;
};

/// Smallest resolving set, searched by increasing size; the basis reported is
/// the lexicographically first at that size.
inline MetricDimension metric_dimension(const Graph& g, std::size_t order_cap = kDefaultOrderCap) {
  detail::check_order_cap(g, order_cap);
  MetricDimension out;
  for (std::size_t r = 1; r < g.order(); ++r) {
    for_each_combination(g.order(), r, [&](std::span<const std::size_t> w) {
      if (!is_resolving_set(g, w)) return true;
      out.dimension = r;
      for (auto i : w) out.basis.push_back(g.label(i));
      return false;
    });
    if (out.dimension) return out;
  }
  // Unreachable: any W of size |V|-1 resolves.
  throw error(errc::invalid_graph, "no resolving set found");
}

struct PerfectnessReport {
  MetricDimension dimension;
  std::optional<CrsCertificate> perfect_basis;

  bool perfect() const noexcept { return perfect_basis.has_value(); }
};

inline PerfectnessReport perfectness(const Graph& g, std::size_t order_cap = kDefaultOrderCap) {
  PerfectnessReport report{metric_dimension(g, order_cap), std::nullopt};
  for_each_combination(g.order(), report.dimension.dimension, [&](std::span<const std::size_t> w) {
    if (!is_resolving_set(g, w)) return true;
    auto outcome = check_crs(g, w);
    if (auto* cert = std::get_if<CrsCertificate>(&outcome)) {
      report.perfect_basis = std::move(*cert);
      return false;
    }
    return true;
  });
  return report;
}

inline bool is_perfectness_resolvable(const Graph& g, std::size_t order_cap = kDefaultOrderCap) {
  return perfectness(g, order_cap).perfect();
}

}  // namespace crslab
