#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "crslab/error.hpp"
#include "crslab/graph.hpp"

namespace crslab {

namespace detail {

inline constexpr std::uint32_t kNoPath = std::numeric_limits<std::uint32_t>::max();

// Level-synchronous BFS over the adjacency bit sets; kNoPath marks vertices
// outside the component of `source`.
inline void bfs_levels(const Graph& g, std::size_t source, std::vector<std::uint32_t>& level) {
  const std::size_t n = g.order();
  const std::size_t words = g.words();
  level.assign(n, kNoPath);
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
  visited[source / 64] |= std::uint64_t{1} << (source % 64);
  frontier = visited;
  level[source] = 0;
  for (std::uint32_t depth = 1;; ++depth) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = frontier[w]; bits; bits &= bits - 1) {
        const auto v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        auto r = g.row(v);
        for (std::size_t x = 0; x < words; ++x) next[x] |= r[x];
      }
    }
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      any = any || next[w];
      for (std::uint64_t bits = next[w]; bits; bits &= bits - 1)
        level[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))] = depth;
    }
    if (!any) break;
    frontier.swap(next);
  }
}

}  // namespace detail

/// Hop distance; std::nullopt stands for "unreachable".
using Distance = std::optional<std::uint32_t>;

class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g) : n_(g.order()), d_(n_ * n_) {
    std::vector<std::uint32_t> level;
    for (std::size_t s = 0; s < n_; ++s) {
      detail::bfs_levels(g, s, level);
      std::copy(level.begin(), level.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
  }

  std::size_t order() const noexcept { return n_; }

  Distance at(std::size_t i, std::size_t j) const {
    const auto v = d_[i * n_ + j];
    if (v == detail::kNoPath) return std::nullopt;
    return v;
  }

  bool connected() const noexcept {
    return std::none_of(d_.begin(), d_.end(), [](auto v) { return v == detail::kNoPath; });
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> d_;
};

inline DistanceTable distances(const Graph& g) { return DistanceTable(g); }

inline Distance distance(const Graph& g, const VertexLabel& a, const VertexLabel& b) {
  std::vector<std::uint32_t> level;
  detail::bfs_levels(g, g.index_of(a), level);
  const auto v = level[g.index_of(b)];
  if (v == detail::kNoPath) return std::nullopt;
  return v;
}

inline bool is_connected(const Graph& g) {
  std::vector<std::uint32_t> level;
  detail::bfs_levels(g, 0, level);
  return std::find(level.begin(), level.end(), detail::kNoPath) == level.end();
}

inline std::uint32_t diameter(const Graph& g) {
  std::vector<std::uint32_t> level;
  std::uint32_t best = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    detail::bfs_levels(g, s, level);
    for (auto v : level) {
      if (v == detail::kNoPath) throw error(errc::disconnected_graph, "diameter of a disconnected graph");
      best = std::max(best, v);
    }
  }
  return best;
}

}  // namespace crslab
