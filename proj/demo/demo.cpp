#include <iostream>

#include "crslab/extremal.hpp"
#include "crslab/families.hpp"
#include "crslab/resolving.hpp"

using namespace crslab;

int main() {
  // K_2 o U_2: the smallest member of B_2 on the complete base
  const auto u = compose(complete_base(2), u_graph(2));
  const Graph g = u.materialize();
  std::cout << "K2 o U2: " << g.order() << " vertices, " << g.size() << " edges\n";

  const std::vector<VertexLabel> w{BaseVertex{1}, BaseVertex{2}};
  const auto outcome = check_crs(g, std::span<const VertexLabel>(w));
  if (const auto* cert = std::get_if<CrsCertificate>(&outcome)) {
    std::cout << "W = {b1, b2} is completeness-resolving, box [" << cert->m << "]^" << cert->k() << "\n";
    for (const auto& [v, x] : cert->table) std::cout << "  " << to_string(v) << " -> " << to_string(x) << "\n";
  }

  const auto verdict = is_completeness_resolvable(g);
  std::cout << "classified as " << to_string(verdict.verdict) << " with k = " << verdict.k << "\n";

  // T_k is the sparse end of C_k, Gamma_k the dense end
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto b = bounds_C(static_cast<int>(k));
    std::cout << "k = " << k << ": |E(T_k)| = " << t_graph(k).size() << ", |E(Gamma_k)| = " << gamma_lattice(k).size()
              << ", bounds [" << b.lower << ", " << b.upper << "]"
              << ", T_k minimal: " << std::boolalpha << is_k_minimal(t_graph(k)).minimal << "\n";
  }

  const auto p = perfectness(cycle_graph(6));
  std::cout << "C6: dimension " << p.dimension.dimension << ", perfect " << p.perfect() << "\n";
  return 0;
}
