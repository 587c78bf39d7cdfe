#pragma once

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "crslab/error.hpp"
#include "crslab/extremal.hpp"
#include "crslab/families.hpp"
#include "crslab/graph.hpp"
#include "crslab/graph6.hpp"
#include "crslab/resolving.hpp"

// JSON and DOT encodings. A vertex is an integer (plain), an integer array
// (lattice vector) or a string "b<i>" (base vertex i).

namespace crslab {

using json = nlohmann::ordered_json;

inline json to_json(const LatticeVector& x) {
  json a = json::array();
  for (std::size_t p = 0; p < x.dim(); ++p) a.push_back(x[p]);
  return a;
}

inline json to_json(const VertexLabel& v) {
  if (auto* b = std::get_if<BaseVertex>(&v)) return "b" + std::to_string(b->index);
  if (auto* x = std::get_if<LatticeVector>(&v)) return to_json(*x);
  return std::get<PlainVertex>(v).id;
}

inline LatticeVector lattice_vector_from_json(const json& j) {
  if (!j.is_array()) throw error(errc::parse_error, "lattice vector must be an array");
  std::vector<int> c;
  for (auto& e : j) {
    if (!e.is_number_integer() || e.get<int>() < 1 || e.get<int>() > 255)
      throw error(errc::parse_error, "lattice coordinates must be integers in 1..255");
    c.push_back(e.get<int>());
  }
  if (c.empty()) throw error(errc::parse_error, "empty lattice vector");
  return LatticeVector(std::span<const int>(c));
}

inline VertexLabel vertex_from_json(const json& j) {
  if (j.is_number_unsigned()) return PlainVertex{j.get<std::uint32_t>()};
  if (j.is_array()) return lattice_vector_from_json(j);
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.size() >= 2 && s[0] == 'b' && s.find_first_not_of("0123456789", 1) == std::string::npos) {
      const int i = std::stoi(s.substr(1));
      if (i >= 1) return BaseVertex{i};
    }
  }
  throw error(errc::parse_error, "unrecognised vertex " + j.dump());
}

inline json to_json(const Graph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices()) vs.push_back(to_json(v));
  json es = json::array();
  for (const auto& [a, b] : g.edges()) es.push_back(json::array({to_json(a), to_json(b)}));
  return {{"vertices", vs}, {"edges", es}};
}

inline json to_json(const CompositeGraph& g) {
  json be = json::array();
  for (auto [a, b] : g.base().edge_indices()) be.push_back(json::array({a + 1, b + 1}));
  json le = json::array();
  for (const auto& [a, b] : g.lattice().edges())
    le.push_back(json::array({to_json(std::get<LatticeVector>(a)), to_json(std::get<LatticeVector>(b))}));
  return {{"k", g.k()}, {"m", g.m()}, {"base_edges", be}, {"lattice_edges", le}};
}

inline bool is_composite_json(const json& j) { return j.is_object() && j.contains("k") && j.contains("m"); }

inline CompositeGraph composite_from_json(const json& j) {
  try {
    const auto k = j.at("k").get<std::size_t>();
    const auto m = j.at("m").get<int>();
    lattice_order(k, m);
    std::vector<IndexEdge> be;
    for (auto& e : j.at("base_edges")) {
      const auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
      if (a < 1 || b < 1 || a > k || b > k) throw error(errc::wrong_vertex_set, "base edge outside [k]");
      be.emplace_back(a - 1, b - 1);
    }
    std::vector<LatticeEdge> le;
    for (auto& e : j.at("lattice_edges"))
      le.emplace_back(lattice_vector_from_json(e.at(0)), lattice_vector_from_json(e.at(1)));
    return CompositeGraph(Graph::from_index_edges(base_labels(k), be), lattice_graph(k, m, le), k, m);
  } catch (const json::exception& ex) {
    throw error(errc::parse_error, ex.what());
  }
}

inline Graph graph_from_json(const json& j) {
  if (is_composite_json(j)) return composite_from_json(j).materialize();
  try {
    std::vector<VertexLabel> vs;
    for (auto& v : j.at("vertices")) vs.push_back(vertex_from_json(v));
    std::vector<Edge> es;
    for (auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw error(errc::parse_error, "edge must be a pair");
      es.emplace_back(vertex_from_json(e[0]), vertex_from_json(e[1]));
    }
    return Graph(std::move(vs), es);
  } catch (const json::exception& ex) {
    throw error(errc::parse_error, ex.what());
  }
}

inline json to_json(const CrsCertificate& c) {
  json w = json::array();
  for (const auto& v : c.w_order) w.push_back(to_json(v));
  json table = json::array();
  for (const auto& [u, x] : c.table) table.push_back(json::array({to_json(u), to_json(x)}));
  return {{"w", w}, {"m", c.m}, {"table", table}};
}

inline json to_json(const CrsFailure& f) {
  return {{"failure", std::string(to_string(f.reason))}, {"m", f.m}, {"detail", f.detail}};
}

inline json to_json(const ClassificationVerdict& v) {
  json out = {{"verdict", std::string(to_string(v.verdict))}, {"k", v.k}};
  out["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return out;
}

inline json to_json(const LatticeEdge& e) { return json::array({to_json(e.first), to_json(e.second)}); }

inline json to_json(const MembershipReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json edges = json::array();
    for (const auto& e : c.edges) edges.push_back(to_json(e));
    checks.push_back({{"i", c.i},
                      {"set", std::string(1, c.name)},
                      {"target", c.target},
                      {"edges", edges},
                      {"uncovered", c.uncovered ? to_json(*c.uncovered) : json(nullptr)}});
  }
  json out = {{"member", r.member}, {"checks", checks}};
  if (r.outside_edge) out["outside_edge"] = to_json(*r.outside_edge);
  if (r.base_edge) out["base_edge"] = json::array({r.base_edge->first, r.base_edge->second});
  return out;
}

inline json to_json(const MinimalityReport& r) {
  json edges = json::array();
  for (const auto& e : r.edges)
    edges.push_back({{"edge", to_json(e.edge)},
                     {"witness", e.witness ? to_json(*e.witness) : json(nullptr)},
                     {"indices", e.indices},
                     {"set", std::string(1, e.cover)}});
  json out = {{"minimal", r.minimal}, {"member", r.member}, {"edges", edges}};
  if (r.unmatched_vertex) out["unmatched_vertex"] = to_json(*r.unmatched_vertex);
  if (r.removable_edge) out["removable_edge"] = to_json(*r.removable_edge);
  return out;
}

inline json to_json(const SizeBounds& b) { return {{"lower", b.lower}, {"upper", b.upper}}; }

inline json to_json(const BoundsReport& r) {
  return {{"lower", r.lower},
          {"upper", r.upper},
          {"actual", r.actual},
          {"lower_tight", r.lower_tight},
          {"upper_tight", r.upper_tight},
          {"lower_witness", r.lower_witness ? json(*r.lower_witness) : json(nullptr)},
          {"conditions", {{"a", r.cond_a}, {"b", r.cond_b}, {"c", r.cond_c}}},
          {"violation", r.violation},
          {"consistent", r.consistent()}};
}

/// Reads a graph from text: a JSON object (labeled or composite form) or a
/// graph6 line. Labeled graphs on [k] + [m]^k come back as composites.
inline NamedGraph parse_graph_text(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) throw error(errc::parse_error, "empty graph input");
  if (text[start] != '{') return from_graph6(text.substr(start));
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw error(errc::parse_error, ex.what());
  }
  if (is_composite_json(j)) return composite_from_json(j);
  Graph g = graph_from_json(j);
  if (is_base(g.label(0))) {
    try {
      return as_composite(g);
    } catch (const error&) {
      return g;
    }
  }
  return g;
}

inline Graph as_graph(const NamedGraph& g) {
  if (const auto* c = std::get_if<CompositeGraph>(&g)) return c->materialize();
  return std::get<Graph>(g);
}

/// Parses "v1,v2,..." where a vertex is an id (7), a base vertex (b2) or a
/// lattice vector written (1,2) or [1,2].
inline std::vector<VertexLabel> parse_vertex_list(std::string_view text) {
  std::vector<VertexLabel> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    std::size_t end;
    if (text[pos] == '(' || text[pos] == '[') {
      const char close = text[pos] == '(' ? ')' : ']';
      end = text.find(close, pos);
      if (end == std::string_view::npos) throw error(errc::parse_error, "unterminated vector in vertex list");
      std::vector<int> coords;
      std::string inner(text.substr(pos + 1, end - pos - 1));
      std::size_t p = 0;
      while (p < inner.size()) {
        std::size_t used = 0;
        try {
          coords.push_back(std::stoi(inner.substr(p), &used));
        } catch (const std::exception&) {
          throw error(errc::parse_error, "bad coordinate in " + inner);
        }
        p += used;
        while (p < inner.size() && (inner[p] == ',' || inner[p] == ' ')) ++p;
      }
      json arr = coords;
      out.push_back(lattice_vector_from_json(arr));
      pos = end + 1;
    } else {
      end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string token(text.substr(pos, end - pos));
      while (!token.empty() && token.back() == ' ') token.pop_back();
      if (!token.empty() && token[0] == 'b') {
        out.push_back(vertex_from_json(json(token)));
      } else {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
          throw error(errc::parse_error, "bad vertex '" + token + "'");
        out.push_back(PlainVertex{static_cast<std::uint32_t>(std::stoul(token))});
      }
      pos = end;
    }
    skip();
  }
  return out;
}

inline std::string dot_id(const VertexLabel& v) { return "\"" + to_string(v) + "\""; }

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const auto& v : g.vertices()) os << "  " << dot_id(v) << ";\n";
  for (const auto& [a, b] : g.edges()) os << "  " << dot_id(a) << " -- " << dot_id(b) << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const CompositeGraph& g, const std::string& name = "G") {
  return to_dot(g.materialize(), name);
}

}  // namespace crslab
