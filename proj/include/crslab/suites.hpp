#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "crslab/distance.hpp"
#include "crslab/extremal.hpp"
#include "crslab/families.hpp"
#include "crslab/graph.hpp"
#include "crslab/parallel.hpp"
#include "crslab/resolving.hpp"

// Named acceptance suites. Each criterion returns a pass/fail verdict with a
// one-line detail; sweeps shared between criteria are cached in SuiteContext.

namespace crslab {

struct SuiteOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 0x5eed2024;
  // Fail criteria that state a runtime limit when the limit is exceeded.
  bool enforce_time = true;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Counters from the sweep over all connected labeled graphs of order 2..6.
struct SweepSummary {
  std::size_t graphs = 0;
  std::size_t connected = 0;
  std::size_t certificates = 0;
  std::size_t relabeled = 0;
  std::size_t path_mismatch = 0;
  std::size_t universal_mismatch = 0;
  std::size_t verdict_mismatch = 0;
  std::size_t relabel_failures = 0;
  std::size_t radius_violations = 0;
  std::size_t independence_violations = 0;
  std::size_t dimension_violations = 0;
  std::size_t perfectness_violations = 0;
  std::string first_problem;
  double seconds = 0;

  void merge(const SweepSummary& o) {
    graphs += o.graphs;
    connected += o.connected;
    certificates += o.certificates;
    relabeled += o.relabeled;
    path_mismatch += o.path_mismatch;
    universal_mismatch += o.universal_mismatch;
    verdict_mismatch += o.verdict_mismatch;
    relabel_failures += o.relabel_failures;
    radius_violations += o.radius_violations;
    independence_violations += o.independence_violations;
    dimension_violations += o.dimension_violations;
    perfectness_violations += o.perfectness_violations;
    if (first_problem.empty()) first_problem = o.first_problem;
  }
};

struct SuiteContext {
  SuiteOptions options;
  // (base index 0 = null, 1 = complete, lattice mask over E(K_[2]^2)) of B members at k = 2.
  std::optional<std::vector<std::pair<int, std::uint32_t>>> b_members;
  // Masks over E(Gamma_2) whose lattice is in C_2.
  std::optional<std::vector<std::uint32_t>> c_members;
  std::optional<SweepSummary> sweep;
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Graph masked_subgraph(const Graph& g, const std::vector<IndexEdge>& edges, std::uint64_t mask) {
  std::vector<IndexEdge> keep;
  for (std::size_t b = 0; b < edges.size(); ++b)
    if ((mask >> b) & 1u) keep.push_back(edges[b]);
  return Graph::from_index_edges({g.vertices().begin(), g.vertices().end()}, keep);
}

// W = [k] (the first k vertices of a materialized composite) is a CRS with radius m.
inline bool base_is_crs(const Graph& composite, std::size_t k, int m) {
  if (!is_connected(composite)) return false;
  std::vector<std::size_t> w(k);
  std::iota(w.begin(), w.end(), 0);
  auto out = check_crs(composite, std::span<const std::size_t>(w));
  const auto* cert = std::get_if<CrsCertificate>(&out);
  return cert && cert->m == m;
}

// Materializes null_base(2) o (lattice given by a mask over E(Gamma_2)).
class GammaTwoComposites {
 public:
  GammaTwoComposites() : gamma_(gamma_lattice(2)), edges_(gamma_.edge_indices()) {
    const auto base = null_base(2);
    const auto full = compose(base, gamma_, 2, 3).materialize();
    labels_.assign(full.vertices().begin(), full.vertices().end());
    for (auto [a, b] : full.edge_indices())
      if (a < 2) cross_.emplace_back(a, b);
  }

  std::size_t edge_count() const noexcept { return edges_.size(); }

  Graph lattice(std::uint32_t mask) const { return masked_subgraph(gamma_, edges_, mask); }

  Graph composite(std::uint32_t mask) const {
    std::vector<IndexEdge> e = cross_;
    for (std::size_t b = 0; b < edges_.size(); ++b)
      if ((mask >> b) & 1u) e.emplace_back(edges_[b].first + 2, edges_[b].second + 2);
    return Graph::from_index_edges(labels_, e);
  }

 private:
  Graph gamma_;
  std::vector<IndexEdge> edges_;
  std::vector<VertexLabel> labels_;
  std::vector<IndexEdge> cross_;
};

inline std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(s < 10 ? 3 : 1);
  os << std::fixed << s << " s";
  return os.str();
}

inline std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

inline std::vector<std::pair<int, std::uint32_t>> sweep_b_members() {
  const auto full = complete_lattice(2, 2);
  const auto edges = full.edge_indices();
  const Graph bases[] = {null_base(2), complete_base(2)};
  std::vector<std::pair<int, std::uint32_t>> out;
  for (int b = 0; b < 2; ++b)
    for (std::uint32_t mask = 0; mask < 64; ++mask)
      if (member_B(bases[b], masked_subgraph(full, edges, mask)).member) out.emplace_back(b, mask);
  return out;
}

inline std::vector<std::uint32_t> sweep_c_members(unsigned jobs) {
  const GammaTwoComposites gc;
  const std::uint64_t total = std::uint64_t{1} << gc.edge_count();
  std::vector<std::vector<std::uint32_t>> parts(std::max(1u, jobs));
  parallel_ranges(total, jobs, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
    for (auto mask = lo; mask < hi; ++mask)
      if (member_C(gc.lattice(static_cast<std::uint32_t>(mask))).member)
        parts[w].push_back(static_cast<std::uint32_t>(mask));
  });
  std::vector<std::uint32_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline bool oracle_is_path(const Graph& g) {
  if (g.size() + 1 != g.order() || !is_connected(g)) return false;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

inline bool oracle_has_universal(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) return true;
  return false;
}

inline void note(SweepSummary& s, const Graph& g, const std::string& what) {
  if (!s.first_problem.empty()) return;
  std::string edges;
  for (auto [a, b] : g.edge_indices()) edges += std::to_string(a) + "-" + std::to_string(b) + " ";
  s.first_problem = what + " on n=" + std::to_string(g.order()) + " edges " + edges;
}

inline void sweep_one(const Graph& g, SweepSummary& s) {
  ++s.connected;
  const bool path = oracle_is_path(g);
  const bool universal = oracle_has_universal(g);
  const auto verdict = is_completeness_resolvable(g);

  CrsSearchOptions opt;
  opt.prune = false;
  const auto all = find_all_crs(g, opt);
  s.certificates += all.size();

  bool has_m1 = false, has_single = false, has_wide = false;
  for (const auto& c : all) {
    has_m1 = has_m1 || c.m == 1;
    has_single = has_single || c.k() == 1;
    if (c.k() < 2) continue;
    if (c.m >= 2) has_wide = true;
    if (c.m >= 4) {
      ++s.radius_violations;
      note(s, g, "certificate with k>=2 and m>=4");
    }
    if (c.m >= 3) {
      const auto w = indices_of(g, c.w_order);
      if (!independent(g, w)) {
        ++s.independence_violations;
        note(s, g, "m=3 certificate with W not independent");
      }
    }
    if (c.m == 2 || c.m == 3) {
      bool ok = false;
      try {
        const auto composite = canonical_relabel(g, c);
        ok = c.m == 2 ? member_B(composite).member : member_C(composite).member;
      } catch (const error&) {
        ok = false;
      }
      ++s.relabeled;
      if (!ok) {
        ++s.relabel_failures;
        note(s, g, "certificate did not relabel to a family member");
      }
    }
  }

  if ((verdict.verdict == CrgClass::path) != path || has_single != path) {
    ++s.path_mismatch;
    note(s, g, "path verdict mismatch");
  }
  if (has_m1 != universal || (verdict.verdict == CrgClass::universal_vertex && !universal)) {
    ++s.universal_mismatch;
    note(s, g, "universal-vertex mismatch");
  }
  bool verdict_ok = true;
  switch (verdict.verdict) {
    case CrgClass::not_completeness_resolvable: verdict_ok = all.empty(); break;
    case CrgClass::family_b: verdict_ok = !path && !universal && verdict.witness && verdict.witness->m == 2; break;
    case CrgClass::family_c: verdict_ok = !path && !universal && verdict.witness && verdict.witness->m == 3; break;
    case CrgClass::path: verdict_ok = path; break;
    case CrgClass::universal_vertex: verdict_ok = universal && !path; break;
  }
  if (!path && !universal && has_wide && verdict.verdict == CrgClass::not_completeness_resolvable) verdict_ok = false;
  if (!verdict_ok) {
    ++s.verdict_mismatch;
    note(s, g, "classification verdict inconsistent with certificates");
  }

  // |V| <= dim + diam^dim, and a perfect basis makes the graph completeness-resolvable.
  const auto perfect = perfectness(g);
  const auto dim = perfect.dimension.dimension;
  const auto diam = diameter(g);
  const auto bound = checked_pow(diam, dim);
  if (!bound || g.order() > dim + *bound) {
    ++s.dimension_violations;
    note(s, g, "order exceeds dim + diam^dim");
  }
  bool perfect_ok = !perfect.perfect() || verdict.verdict != CrgClass::not_completeness_resolvable;
  if (path && !perfect.perfect()) perfect_ok = false;
  // With a universal vertex u, V \ {u} is a metric basis exactly for complete graphs.
  if (universal && (dim + 1 == g.order()) != (g.size() * 2 == g.order() * (g.order() - 1))) perfect_ok = false;
  if (!perfect_ok) {
    ++s.perfectness_violations;
    note(s, g, "perfectness inconsistent");
  }
}

inline SweepSummary small_order_sweep(unsigned jobs, std::size_t max_order = 6) {
  Stopwatch clock;
  SweepSummary total;
  for (std::size_t n = 2; n <= max_order; ++n) {
    std::vector<IndexEdge> pairs;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    const std::uint64_t graphs = std::uint64_t{1} << pairs.size();
    std::vector<SweepSummary> parts(std::max(1u, jobs));
    parallel_ranges(graphs, jobs, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
      for (auto mask = lo; mask < hi; ++mask) {
        ++parts[w].graphs;
        std::vector<IndexEdge> e;
        for (std::size_t b = 0; b < pairs.size(); ++b)
          if ((mask >> b) & 1u) e.push_back(pairs[b]);
        const auto g = plain_graph(n, e);
        if (is_connected(g)) sweep_one(g, parts[w]);
      }
    });
    for (auto& p : parts) total.merge(p);
  }
  total.seconds = clock.seconds();
  return total;
}

inline const SweepSummary& cached_sweep(SuiteContext& ctx) {
  if (!ctx.sweep) ctx.sweep = small_order_sweep(ctx.options.jobs);
  return *ctx.sweep;
}

template <class Rng>
Graph random_subgraph(const Graph& g, Rng& rng, int percent) {
  std::vector<IndexEdge> keep;
  for (auto e : g.edge_indices())
    if (static_cast<int>(rng() % 100) < percent) keep.push_back(e);
  return Graph::from_index_edges({g.vertices().begin(), g.vertices().end()}, keep);
}

// A random member of Q_k (one uniformly chosen edge per epsilon site).
template <class Rng>
Graph random_q_member(std::size_t k, const std::vector<EpsilonSite>& sites, Rng& rng) {
  std::vector<IndexEdge> e;
  for (const auto& s : sites) {
    const auto& [x, y] = s.choices[rng() % s.choices.size()];
    e.emplace_back(std::min(x.rank(3), y.rank(3)), std::max(x.rank(3), y.rank(3)));
  }
  return Graph::from_index_edges(lattice_labels(k, 3), e);
}

// A random B member on [k]: random base, random lattice topped up with P_2^k.
template <class Rng>
std::pair<Graph, Graph> random_b_member(std::size_t k, Rng& rng) {
  auto base = random_subgraph(complete_base(k), rng, 50);
  auto lat = random_subgraph(complete_lattice(k, 2), rng, 10 + static_cast<int>(rng() % 30));
  if (!member_B(base, lat).member) lat = graph_union(lat, p2_box(k));
  return {std::move(base), std::move(lat)};
}

template <class Rng>
Graph random_c_member(std::size_t k, const std::vector<EpsilonSite>& sites, const Graph& gamma, Rng& rng) {
  return graph_union(random_q_member(k, sites, rng), random_subgraph(gamma, rng, static_cast<int>(rng() % 30)));
}

// Some non-edge of g chosen uniformly among allowed pairs, or nullopt.
template <class Rng>
std::optional<IndexEdge> random_non_edge(const Graph& g, const Graph& allowed, Rng& rng) {
  std::vector<IndexEdge> cand;
  for (auto [a, b] : allowed.edge_indices())
    if (!g.adjacent(a, b)) cand.emplace_back(a, b);
  if (cand.empty()) return std::nullopt;
  return cand[rng() % cand.size()];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

inline CriterionResult criterion_b_equivalence(SuiteContext& ctx) {
  detail::Stopwatch clock;
  const auto full = complete_lattice(2, 2);
  const auto edges = full.edge_indices();
  const Graph bases[] = {null_base(2), complete_base(2)};
  std::size_t total = 0, agree = 0;
  std::vector<std::pair<int, std::uint32_t>> members;
  std::string first_bad;
  for (int b = 0; b < 2; ++b)
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
      const auto c = compose(bases[b], detail::masked_subgraph(full, edges, mask), 2, 2);
      const bool member = member_B(c).member;
      const bool crs = detail::base_is_crs(c.materialize(), 2, 2);
      ++total;
      if (member == crs)
        ++agree;
      else if (first_bad.empty())
        first_bad = "; first disagreement base " + std::to_string(b) + " mask " + std::to_string(mask);
      if (member) members.emplace_back(b, mask);
    }
  ctx.b_members = members;
  const double s = clock.seconds();
  const bool fast = s < 1.0 || !ctx.options.enforce_time;
  return {1, "b-equivalence", agree == total && fast,
          detail::ratio(agree, total) + " composites agree, " + std::to_string(members.size()) + " members" +
              (fast ? "" : ", over the 1 s limit") + first_bad,
          s};
}

inline CriterionResult criterion_c_equivalence(SuiteContext& ctx) {
  detail::Stopwatch clock;
  const detail::GammaTwoComposites gc;
  const std::uint64_t total = std::uint64_t{1} << gc.edge_count();
  const unsigned jobs = std::max(1u, ctx.options.jobs);
  std::vector<std::size_t> agree(jobs, 0);
  std::vector<std::vector<std::uint32_t>> members(jobs), bad(jobs);
  parallel_ranges(total, jobs, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
    for (auto mask64 = lo; mask64 < hi; ++mask64) {
      const auto mask = static_cast<std::uint32_t>(mask64);
      const bool member = member_C(gc.lattice(mask)).member;
      const bool crs = detail::base_is_crs(gc.composite(mask), 2, 3);
      if (member == crs)
        ++agree[w];
      else
        bad[w].push_back(mask);
      if (member) members[w].push_back(mask);
    }
  });
  std::vector<std::uint32_t> all_members;
  for (auto& m : members) all_members.insert(all_members.end(), m.begin(), m.end());
  const std::size_t agreed = std::accumulate(agree.begin(), agree.end(), std::size_t{0});
  std::string first_bad;
  for (auto& b : bad)
    if (!b.empty() && first_bad.empty()) first_bad = "; first disagreement mask " + std::to_string(b.front());

  // Lattices with an edge outside Gamma_2: neither side may accept.
  std::mt19937_64 rng(ctx.options.seed);
  const auto complete = complete_lattice(2, 3);
  const auto cedges = complete.edge_indices();
  const auto gamma = gamma_lattice(2);
  std::uint64_t outside = 0;
  for (std::size_t b = 0; b < cedges.size(); ++b)
    if (!gamma.adjacent(cedges[b].first, cedges[b].second)) outside |= std::uint64_t{1} << b;
  std::vector<std::size_t> outside_bits;
  for (std::size_t b = 0; b < cedges.size(); ++b)
    if ((outside >> b) & 1u) outside_bits.push_back(b);
  std::size_t random_ok = 0;
  const std::size_t random_trials = 1000;
  for (std::size_t t = 0; t < random_trials; ++t) {
    std::uint64_t mask = rng() & ((std::uint64_t{1} << cedges.size()) - 1);
    if (!(mask & outside)) mask |= std::uint64_t{1} << outside_bits[rng() % outside_bits.size()];
    const auto lat = detail::masked_subgraph(complete, cedges, mask);
    const auto c = compose(null_base(2), lat, 2, 3);
    const bool member = member_C(c).member;
    const bool crs = detail::base_is_crs(c.materialize(), 2, 3);
    if (!member && !crs) ++random_ok;
  }

  ctx.c_members = std::move(all_members);
  const double s = clock.seconds();
  const bool fast = s <= 600.0 || !ctx.options.enforce_time;
  return {2, "c-equivalence", agreed == total && random_ok == random_trials && fast,
          detail::ratio(agreed, total) + " subgraphs of Gamma_2 agree, " + std::to_string(ctx.c_members->size()) +
              " members; " + detail::ratio(random_ok, random_trials) + " out-of-Gamma_2 lattices rejected by both" +
              (fast ? "" : ", over the 10 min target") + first_bad + "; jobs=" + std::to_string(jobs),
          s};
}

inline CriterionResult criterion_sizes(SuiteContext&) {
  detail::Stopwatch clock;
  std::size_t checks = 0, ok = 0;
  std::string first_bad;
  auto expect = [&](const std::string& what, long long got, long long want) {
    ++checks;
    if (got == want)
      ++ok;
    else if (first_bad.empty())
      first_bad = "; " + what + " = " + std::to_string(got) + ", expected " + std::to_string(want);
  };
  using detail::pow_ll;
  for (int k = 2; k <= 4; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const auto tag = [&](const char* f) { return std::string(f) + "_" + std::to_string(k); };
    expect(tag("|E(Gamma)|"), static_cast<long long>(gamma_lattice(uk).size()), (pow_ll(7, k) - pow_ll(3, k)) / 2);
    expect(tag("|E(T)|"), static_cast<long long>(t_graph(uk).size()), (pow_ll(3, k) + 1) / 2);
    expect(tag("|E(U)|"), static_cast<long long>(u_graph(uk).size()), 1);
    expect(tag("|E(V)|"), static_cast<long long>(v_graph(uk).size()), k);
    expect(tag("|E(R)|"), static_cast<long long>(r_graph(uk).size()), pow_ll(2, k - 1));
    expect(tag("|E(P2box)|"), static_cast<long long>(p2_box(uk).size()), k * pow_ll(2, k - 1));
  }
  for (int k = 2; k <= 3; ++k) {
    const long long want = k * (pow_ll(3, k - 1) + pow_ll(2, k - 1));
    std::size_t members = 0, right = 0;
    std::vector<IndexEdge> buf;
    for_each_Q(static_cast<std::size_t>(k), [&](std::span<const IndexEdge> e) {
      buf.assign(e.begin(), e.end());
      std::sort(buf.begin(), buf.end());
      const auto distinct = std::unique(buf.begin(), buf.end()) - buf.begin();
      ++members;
      right += distinct == want;
      return true;
    });
    expect("Q_" + std::to_string(k) + " members with the stated size", static_cast<long long>(right),
           static_cast<long long>(members));
    expect("|Q_" + std::to_string(k) + "| streamed", static_cast<long long>(members),
           static_cast<long long>(q_family_size(static_cast<std::size_t>(k))));
  }
  return {3, "sizes", ok == checks,
          detail::ratio(ok, checks) + " size identities exact (Q_2 and all 2^24 members of Q_3 streamed)" + first_bad,
          clock.seconds()};
}

inline CriterionResult criterion_minimal(SuiteContext& ctx) {
  detail::Stopwatch clock;
  EnumerationOptions opt;
  opt.jobs = ctx.options.jobs;
  std::vector<std::string> failures;
  auto edge_set = [](const std::vector<Graph>& gs) {
    std::set<std::vector<IndexEdge>> out;
    for (auto& g : gs) out.insert(g.edge_indices());
    return out;
  };
  auto of_size = [](const std::vector<Graph>& gs, std::size_t n) {
    std::vector<Graph> out;
    for (auto& g : gs)
      if (g.size() == n) out.push_back(g);
    return out;
  };

  const auto c = enumerate_minimal_C(2, opt);
  const auto c5 = of_size(c, 5);
  if (c5.size() != 1 || !(c5.front() == t_graph(2))) failures.push_back("size-5 stratum is not {T_2}");
  if (edge_set(of_size(c, 10)) != edge_set(enumerate_Q(2))) failures.push_back("size-10 stratum differs from Q_2");
  for (auto& g : c)
    if (g.size() < 5 || g.size() > 10) {
      failures.push_back("C member of size " + std::to_string(g.size()));
      break;
    }

  const auto bk = enumerate_minimal_B(complete_base(2), opt);
  const auto bk1 = of_size(bk, 1), bk2 = of_size(bk, 2);
  if (bk1.size() != 1 || !(bk1.front() == u_graph(2))) failures.push_back("K_[2]: size-1 stratum is not {U_2}");
  if (bk2.size() != 1 || !(bk2.front() == v_graph(2))) failures.push_back("K_[2]: size-2 stratum is not {V_2}");
  const auto bn = enumerate_minimal_B(null_base(2), opt);
  const auto bn2 = of_size(bn, 2), bn4 = of_size(bn, 4);
  if (bn2.size() != 1 || !(bn2.front() == r_graph(2))) failures.push_back("null base: size-2 stratum is not {R_2}");
  if (bn4.size() != 1 || !(bn4.front() == p2_box(2))) failures.push_back("null base: size-4 stratum is not {P2box_2}");

  std::string detail = "C_2: " + std::to_string(c.size()) + " minimal lattices; B_2: " + std::to_string(bk.size()) +
                       " (K_[2] base), " + std::to_string(bn.size()) + " (null base)";
  for (auto& f : failures) detail += "; " + f;
  return {4, "minimal", failures.empty(), detail, clock.seconds()};
}

inline CriterionResult criterion_distance_identity(SuiteContext& ctx) {
  detail::Stopwatch clock;
  if (!ctx.b_members) ctx.b_members = detail::sweep_b_members();
  if (!ctx.c_members) ctx.c_members = detail::sweep_c_members(ctx.options.jobs);

  // d(i, x) = x_(i) on every member; diameters lie in {2,3} for B and {3,4,5} for C.
  auto check = [](const Graph& g, std::size_t k, bool family_b, std::size_t& violations, std::size_t& diam_bad) {
    std::vector<std::uint32_t> level;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      detail::bfs_levels(g, i, level);
      for (std::size_t r = k; r < g.order() && ok; ++r)
        ok = level[r] == static_cast<std::uint32_t>(std::get<LatticeVector>(g.label(r))[i]);
    }
    if (!ok) ++violations;
    const auto d = diameter(g);
    if (family_b ? (d < 2 || d > 3) : (d < 3 || d > 5)) ++diam_bad;
  };

  std::size_t violations = 0, diam_bad = 0;
  const auto full = complete_lattice(2, 2);
  const auto edges = full.edge_indices();
  const Graph bases[] = {null_base(2), complete_base(2)};
  for (auto [b, mask] : *ctx.b_members)
    check(compose(bases[b], detail::masked_subgraph(full, edges, mask), 2, 2).materialize(), 2, true, violations,
          diam_bad);

  const detail::GammaTwoComposites gc;
  const auto& cm = *ctx.c_members;
  const unsigned jobs = std::max(1u, ctx.options.jobs);
  std::vector<std::size_t> v(jobs, 0), dbad(jobs, 0);
  parallel_ranges(cm.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
    for (auto n = lo; n < hi; ++n) check(gc.composite(cm[n]), 2, false, v[w], dbad[w]);
  });
  violations += std::accumulate(v.begin(), v.end(), std::size_t{0});
  diam_bad += std::accumulate(dbad.begin(), dbad.end(), std::size_t{0});

  const auto members = ctx.b_members->size() + cm.size();
  return {5, "distance-identity", violations == 0 && diam_bad == 0,
          std::to_string(members) + " member composites, " + std::to_string(violations) +
              " distance violations, " + std::to_string(diam_bad) + " diameters outside {2,3} (B) / {3,4,5} (C)",
          clock.seconds()};
}

inline CriterionResult criterion_diameters(SuiteContext&) {
  detail::Stopwatch clock;
  struct Case {
    const char* name;
    CompositeGraph graph;
    std::uint32_t want;
  };
  const Case cases[] = {
      {"K_[2] o K_[2]^2", compose(complete_base(2), complete_lattice(2, 2), 2, 2), 2},
      {"K_[2] o U_2", compose(complete_base(2), u_graph(2), 2, 2), 3},
      {"null o Gamma_2", compose(null_base(2), gamma_lattice(2), 2, 3), 3},
      {"null o Q_2", compose(null_base(2), q_canonical(2), 2, 3), 4},
      {"null o T_2", compose(null_base(2), t_graph(2), 2, 3), 5},
  };
  std::size_t ok = 0;
  std::string detail;
  for (const auto& c : cases) {
    const auto d = diameter(c.graph.materialize());
    ok += d == c.want;
    detail += std::string(detail.empty() ? "" : ", ") + c.name + "=" + std::to_string(d);
  }
  return {6, "diameters", ok == std::size(cases), detail, clock.seconds()};
}

inline CriterionResult criterion_classification(SuiteContext& ctx) {
  detail::Stopwatch clock;
  const bool cached = ctx.sweep.has_value();
  const auto& s = detail::cached_sweep(ctx);
  const double secs = cached ? s.seconds : clock.seconds();
  const bool fast = secs <= 300.0 || !ctx.options.enforce_time;
  const bool pass = fast && s.path_mismatch == 0 && s.universal_mismatch == 0 && s.verdict_mismatch == 0 &&
                    s.relabel_failures == 0;
  std::string detail = std::to_string(s.connected) + " connected graphs of order 2..6 (" + std::to_string(s.graphs) +
                       " labeled), " + std::to_string(s.certificates) + " certificates, " +
                       std::to_string(s.relabeled) + " relabeled into B/C; mismatches: path " +
                       std::to_string(s.path_mismatch) + ", universal " + std::to_string(s.universal_mismatch) +
                       ", verdict " + std::to_string(s.verdict_mismatch) + ", relabel " +
                       std::to_string(s.relabel_failures);
  if (!fast) detail += ", over the 5 min target";
  if (!pass && !s.first_problem.empty()) detail += "; " + s.first_problem;
  return {7, "classification", pass, detail, secs};
}

inline CriterionResult criterion_properties(SuiteContext& ctx) {
  detail::Stopwatch clock;
  std::mt19937_64 rng(ctx.options.seed + 8);
  std::vector<std::string> failures;

  const std::vector<EpsilonSite> sites[] = {epsilon_sites(2), epsilon_sites(3)};
  const Graph gammas[] = {gamma_lattice(2), gamma_lattice(3)};
  const Graph completes[] = {complete_lattice(2, 2), complete_lattice(3, 2)};
  const Graph complete_bases[] = {complete_base(2), complete_base(3)};

  // Up-set closure: adding an allowed edge to a member keeps it a member.
  const std::size_t trials = 1000;
  std::size_t up_ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = 2 + t % 2;
    const auto& allowed_lattice = (t / 2) % 2 == 0 ? completes[k - 2] : gammas[k - 2];
    if ((t / 2) % 2 == 0) {
      auto [base, lat] = detail::random_b_member(k, rng);
      bool ok = member_B(base, lat).member;
      if (rng() % 4 == 0) {
        if (auto e = detail::random_non_edge(base, complete_bases[k - 2], rng)) base = base.with_edge(e->first, e->second, true);
      } else if (auto e = detail::random_non_edge(lat, allowed_lattice, rng)) {
        lat = lat.with_edge(e->first, e->second, true);
      }
      const auto c = compose(base, lat, k, 2);
      ok = ok && member_B(c).member && detail::base_is_crs(c.materialize(), k, 2);
      up_ok += ok;
    } else {
      auto lat = detail::random_c_member(k, sites[k - 2], gammas[k - 2], rng);
      bool ok = member_C(lat).member;
      if (auto e = detail::random_non_edge(lat, allowed_lattice, rng)) lat = lat.with_edge(e->first, e->second, true);
      const auto c = compose(null_base(k), lat, k, 3);
      ok = ok && member_C(c).member && detail::base_is_crs(c.materialize(), k, 3);
      up_ok += ok;
    }
  }
  if (up_ok != trials) failures.push_back("up-set closure " + detail::ratio(up_ok, trials));

  // Union closure over random member pairs on the same [k].
  std::size_t union_ok = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = 2 + t % 2;
    bool ok;
    if ((t / 2) % 2 == 0) {
      auto [b1, l1] = detail::random_b_member(k, rng);
      auto [b2, l2] = detail::random_b_member(k, rng);
      ok = member_B(b1, l1).member && member_B(b2, l2).member &&
           member_B(graph_union(b1, b2), graph_union(l1, l2)).member;
    } else {
      auto l1 = detail::random_c_member(k, sites[k - 2], gammas[k - 2], rng);
      auto l2 = detail::random_c_member(k, sites[k - 2], gammas[k - 2], rng);
      ok = member_C(l1).member && member_C(l2).member && member_C(graph_union(l1, l2)).member;
    }
    union_ok += ok;
  }
  if (union_ok != trials) failures.push_back("union closure " + detail::ratio(union_ok, trials));

  // The epsilon_i(x) are pairwise disjoint.
  std::size_t eps_sets = 0, eps_clashes = 0;
  for (const auto& ss : sites) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& site : ss) {
      ++eps_sets;
      for (const auto& [x, y] : site.choices)
        if (!seen.emplace(std::min(x.rank(3), y.rank(3)), std::max(x.rank(3), y.rank(3))).second) ++eps_clashes;
    }
  }
  if (eps_clashes) failures.push_back(std::to_string(eps_clashes) + " edges shared between epsilon sets");

  const auto& s = detail::cached_sweep(ctx);
  if (s.radius_violations) failures.push_back(std::to_string(s.radius_violations) + " certificates with k>=2, m>=4");
  if (s.independence_violations)
    failures.push_back(std::to_string(s.independence_violations) + " m=3 certificates with dependent W");
  if (s.dimension_violations)
    failures.push_back(std::to_string(s.dimension_violations) + " graphs with |V| > dim + diam^dim");
  if (s.perfectness_violations)
    failures.push_back(std::to_string(s.perfectness_violations) + " perfectness inconsistencies");

  std::string detail = "up-set " + detail::ratio(up_ok, trials) + ", union " + detail::ratio(union_ok, trials) +
                       ", " + std::to_string(eps_sets) + " epsilon sets disjoint at k=2,3, sweep of " +
                       std::to_string(s.connected) + " graphs: m<=3, independence, dim bound, perfectness";
  for (auto& f : failures) detail += "; " + f;
  return {8, "properties", failures.empty(), detail, clock.seconds()};
}

inline CriterionResult criterion_tightness(SuiteContext& ctx) {
  detail::Stopwatch clock;
  EnumerationOptions opt;
  opt.jobs = ctx.options.jobs;
  std::size_t pairs = 0, agree = 0, lower = 0, upper = 0;
  std::string first_bad;
  for (const auto& base : {complete_base(2), null_base(2)})
    for (const auto& g : enumerate_minimal_B(base, opt)) {
      const auto r = tightness_B(base, g);
      ++pairs;
      lower += r.lower_tight;
      upper += r.upper_tight;
      if (r.consistent())
        ++agree;
      else if (first_bad.empty())
        first_bad = "; disagreement at size " + std::to_string(r.actual) + ": " + r.violation;
    }
  return {9, "tightness", agree == pairs,
          detail::ratio(agree, pairs) + " minimal pairs agree (" + std::to_string(lower) + " lower-tight, " +
              std::to_string(upper) + " upper-tight)" + first_bad,
          clock.seconds()};
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct NamedCriterion {
  int number;
  std::string_view name;
  CriterionResult (*run)(SuiteContext&);
};

inline const std::vector<NamedCriterion>& acceptance_criteria() {
  static const std::vector<NamedCriterion> all{
      {1, "b-equivalence", criterion_b_equivalence},
      {2, "c-equivalence", criterion_c_equivalence},
      {3, "sizes", criterion_sizes},
      {4, "minimal", criterion_minimal},
      {5, "distance-identity", criterion_distance_identity},
      {6, "diameters", criterion_diameters},
      {7, "classification", criterion_classification},
      {8, "properties", criterion_properties},
      {9, "tightness", criterion_tightness},
  };
  return all;
}

/// Runs "all", one criterion by name, or one by number.
template <class OnResult>
bool run_suite(std::string_view name, SuiteContext& ctx, OnResult&& on_result) {
  bool matched = false, pass = true;
  for (const auto& c : acceptance_criteria()) {
    if (name != "all" && name != c.name && name != std::to_string(c.number)) continue;
    matched = true;
    auto r = c.run(ctx);
    pass = pass && r.pass;
    on_result(r);
  }
  if (!matched) throw error(errc::unknown_name, "unknown suite " + std::string(name));
  return pass;
}

inline std::string format_result(const CriterionResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.number) + " " + r.name + ": " + r.detail +
         " [" + detail::fmt_seconds(r.seconds) + "]";
}

}  // namespace crslab
