#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crslab/error.hpp"
#include "crslab/graph.hpp"

namespace crslab {

// graph6 for graphs with PlainVertex labels (short size header up to 62
// vertices, four-byte header above). Vertex j of the encoding is the j-th
// vertex in canonical order; parsing yields ids 0..n-1.

/// Same graph on ids 0..n-1, vertex j being the j-th label in canonical order.
inline Graph as_plain(const Graph& g) { return plain_graph(g.order(), g.edge_indices()); }

inline std::string to_graph6(const Graph& g) {
  for (const auto& v : g.vertices())
    if (!is_plain(v)) throw error(errc::invalid_graph, "graph6 carries plain vertices only");
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += static_cast<char>(126);
    for (int shift : {12, 6, 0}) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  int acc = 0;
  int nbits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) out += static_cast<char>(63 + (acc << (6 - nbits)));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw error(errc::parse_error, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw error(errc::parse_error, "graph6 byte out of range");

  std::size_t n = static_cast<std::size_t>(text[0] - 63);
  std::size_t head = 1;
  if (n == 63) {
    if (text.size() < 4 || text[1] == 126) throw error(errc::parse_error, "unsupported graph6 size header");
    n = 0;
    for (std::size_t b = 1; b <= 3; ++b) n = (n << 6) | static_cast<std::size_t>(text[b] - 63);
    head = 4;
  }
  if (n > kMaxGraphOrder) throw error(errc::order_cap_exceeded, "graph6 order exceeds the graph order cap");
  const std::size_t bits = n * (n - 1) / 2;
  if (text.size() != head + (bits + 5) / 6)
    throw error(errc::parse_error, "graph6 length does not match order " + std::to_string(n));

  std::vector<IndexEdge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = text[head + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return plain_graph(n, edges);
}

}  // namespace crslab
