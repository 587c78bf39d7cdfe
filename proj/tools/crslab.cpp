#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "crslab/crslab.hpp"

using namespace crslab;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitSchema = 2;
constexpr int kExitCap = 3;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

NamedGraph load(const std::string& path) { return parse_graph_text(read_input(path)); }

std::size_t order_cap() {
  if (const char* env = std::getenv("CRSLAB_ORDER_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw error(errc::parse_error, "CRSLAB_ORDER_CAP must be a positive integer");
    }
  }
  return kDefaultOrderCap;
}

void print(const json& j) { std::cout << j.dump() << '\n'; }

Graph base_from_option(const std::string& choice, std::size_t k) {
  if (choice == "null") return null_base(k);
  if (choice == "complete") return complete_base(k);
  auto g = as_graph(load(choice));
  if (!is_base_graph(g, k)) throw error(errc::wrong_vertex_set, "base file must be a graph on b1..b" + std::to_string(k));
  return g;
}

Graph base_from_file(const std::string& path) {
  auto g = as_graph(load(path));
  if (!is_base_graph(g, g.order())) throw error(errc::wrong_vertex_set, "base file must be a graph on b1..bk");
  return g;
}

// Base used by --compose when none is given: the one each named example is minimal for.
std::string default_base(Family f) {
  switch (f) {
    case Family::U:
    case Family::V: return "complete";
    default: return "null";
  }
}

int emit(const NamedGraph& g, const std::string& format) {
  const Graph flat = as_graph(g);
  if (format == "json")
    print(to_json(flat));
  else if (format == "dot")
    std::cout << to_dot(flat);
  else
    std::cout << to_graph6(as_plain(flat)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crslab: completeness-resolving sets, the families B_k and C_k, and their extremal graphs"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a named family member");
  std::string family, format = "json", base_choice;
  std::size_t k = 2;
  bool do_compose = false;
  construct->add_option("--family", family, "U|V|R|P2box|T|Qcanon|Gamma|MaxB|MaxC")->required();
  construct->add_option("--k", k, "dimension k >= 2")->required();
  construct->add_flag("--compose", do_compose, "compose the lattice with a base graph on [k]");
  construct->add_option("--base", base_choice, "base for --compose: null|complete|FILE");
  construct->add_option("--format", format, "output format")->check(CLI::IsMember({"g6", "json", "dot"}));

  // verify
  auto* verify = app.add_subcommand("verify", "check a completeness-resolving set or family membership");
  std::string graph_path, w_list, membership;
  verify->add_option("--graph", graph_path, "graph file (JSON or graph6, - for stdin)")->required();
  auto* w_opt = verify->add_option("--w", w_list, "ordered W, e.g. \"b1,b2\" or \"0,3\"");
  auto* mem_opt = verify->add_option("--membership", membership, "B|C")->check(CLI::IsMember({"B", "C"}));
  w_opt->excludes(mem_opt);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "enumerate minimal lattices as JSON lines");
  std::string minimal_kind, enum_base = "null";
  std::size_t enum_k = 2;
  unsigned jobs = 1;
  enumerate->add_option("--minimal", minimal_kind, "B|C")->required()->check(CLI::IsMember({"B", "C"}));
  enumerate->add_option("--k", enum_k, "dimension k")->required();
  enumerate->add_option("--base", enum_base, "base for B: null|complete|FILE");
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "edge-count bounds for minimal graphs");
  std::string bounds_kind, bounds_base, bounds_graph;
  std::size_t bounds_k = 0;
  bool bounds_composite = false;
  bounds->add_option("kind", bounds_kind, "B|C")->required()->check(CLI::IsMember({"B", "C"}));
  auto* bb = bounds->add_option("--base", bounds_base, "base graph file (B)");
  auto* bk = bounds->add_option("--k", bounds_k, "dimension k (C, or B with the null base)");
  auto* bg = bounds->add_option("--graph", bounds_graph, "composite file: report tightness of its lattice (B)");
  bounds->add_flag("--composite", bounds_composite, "bounds on |E(H1 o H2)| instead of |E(H2)|");
  bb->excludes(bk);
  bg->excludes(bb)->excludes(bk);

  // classify / dim
  auto* classify = app.add_subcommand("classify", "classify a connected graph");
  classify->add_option("--graph", graph_path, "graph file")->required();
  auto* dim = app.add_subcommand("dim", "metric dimension, a basis, and perfectness");
  dim->add_option("--graph", graph_path, "graph file")->required();

  // suite
  auto* suite = app.add_subcommand("suite", "run a named acceptance suite");
  std::string suite_name = "all";
  suite->add_option("--name", suite_name, "all, a criterion name, or its number");
  suite->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitSchema;
  }

  try {
    if (*construct) {
      const auto f = parse_family(family);
      if (!f) throw error(errc::unknown_name, "unknown family " + family);
      auto g = example_graph(*f, k);
      if (do_compose) {
        if (const auto* lattice = std::get_if<Graph>(&g)) {
          const auto base = base_from_option(base_choice.empty() ? default_base(*f) : base_choice, k);
          g = compose(base, *lattice);
        }
      } else if (!base_choice.empty()) {
        throw error(errc::parse_error, "--base needs --compose");
      }
      return emit(g, format);
    }

    if (*verify) {
      const auto g = load(graph_path);
      if (!membership.empty()) {
        MembershipReport report;
        if (const auto* c = std::get_if<CompositeGraph>(&g))
          report = membership == "B" ? member_B(*c) : member_C(*c);
        else if (membership == "C")
          report = member_C(std::get<Graph>(g));
        else
          throw error(errc::wrong_vertex_set, "B membership needs a composite graph on [k] + [2]^k");
        print(to_json(report));
        return report.member ? 0 : kExitNegative;
      }
      if (w_list.empty()) throw error(errc::parse_error, "verify needs --w or --membership");
      const auto flat = as_graph(g);
      const auto w = parse_vertex_list(w_list);
      if (!is_connected(flat)) throw error(errc::disconnected_graph, "graph is not connected");
      const auto outcome = check_crs(flat, std::span<const VertexLabel>(w));
      if (const auto* cert = std::get_if<CrsCertificate>(&outcome)) {
        print(to_json(*cert));
        return 0;
      }
      print(to_json(std::get<CrsFailure>(outcome)));
      return kExitNegative;
    }

    if (*enumerate) {
      EnumerationOptions opt;
      opt.jobs = jobs;
      if (minimal_kind == "C") {
        for (const auto& lattice : enumerate_minimal_C(enum_k, opt))
          print(to_json(compose(null_base(enum_k), lattice, enum_k, 3)));
      } else {
        const auto base = base_from_option(enum_base, enum_k);
        for (const auto& lattice : enumerate_minimal_B(base, opt))
          print(to_json(compose(base, lattice, enum_k, 2)));
      }
      return 0;
    }

    if (*bounds) {
      if (bounds_kind == "C") {
        if (!bounds_k) throw error(errc::parse_error, "bounds C needs --k");
        const int kk = static_cast<int>(bounds_k);
        print(to_json(bounds_composite ? composite_size_bounds_C(kk) : bounds_C(kk)));
        return 0;
      }
      if (!bounds_graph.empty()) {
        const auto g = load(bounds_graph);
        const auto* c = std::get_if<CompositeGraph>(&g);
        if (!c || c->m() != 2) throw error(errc::wrong_vertex_set, "bounds B --graph needs a composite on [k] + [2]^k");
        print(to_json(tightness_B(c->base(), c->lattice())));
        return 0;
      }
      Graph base = bounds_k ? null_base(bounds_k) : Graph(base_labels(2));
      if (!bounds_base.empty())
        base = base_from_file(bounds_base);
      else if (!bounds_k)
        throw error(errc::parse_error, "bounds B needs --base FILE, --k N or --graph FILE");
      print(to_json(bounds_composite ? composite_size_bounds_B(base) : bounds_B(base)));
      return 0;
    }

    if (*classify) {
      print(to_json(is_completeness_resolvable(as_graph(load(graph_path)), order_cap())));
      return 0;
    }

    if (*dim) {
      const auto report = perfectness(as_graph(load(graph_path)), order_cap());
      json basis = json::array();
      for (const auto& v : report.dimension.basis) basis.push_back(to_json(v));
      print({{"dimension", report.dimension.dimension},
             {"basis", basis},
             {"perfect", report.perfect()},
             {"perfect_basis", report.perfect_basis ? to_json(*report.perfect_basis) : json(nullptr)}});
      return 0;
    }

    if (*suite) {
      SuiteContext ctx;
      ctx.options.jobs = jobs;
      const bool pass = run_suite(suite_name, ctx, [](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
      });
      return pass ? 0 : kExitNegative;
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case errc::order_cap_exceeded:
      case errc::enumeration_cap_exceeded:
      case errc::size_overflow: return kExitCap;
      default: return kExitSchema;
    }
  }
  return 0;
}
