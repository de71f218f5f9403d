#pragma once

#include <string>
#include <vector>

#include "drc/stable_graph.hpp"

namespace drc {

/// A stable graph with a psi power on every half-edge and a kappa monomial on
/// every vertex. kappa[v] is a sorted multiset: {1, 1, 2} is kappa_1^2 kappa_2.
struct DecoratedGraph {
  StableGraph graph;
  std::vector<int> psi;
  std::vector<std::vector<int>> kappa;

  DecoratedGraph() = default;
  explicit DecoratedGraph(StableGraph g);
  DecoratedGraph(StableGraph g, std::vector<int> psi_exponents, std::vector<std::vector<int>> kappa_monomials);

  /// |E| + sum of psi powers + sum of kappa orders.
  int degree() const;
  bool has_decorations() const;
};

struct CanonicalDecorated {
  std::string key;
  DecoratedGraph representative;
  /// Automorphisms of the graph preserving every decoration.
  long automorphisms = 1;
};

/// Canonical form under vertex and half-edge relabelling; decorations are
/// folded into the vertex and edge colours before minimisation.
CanonicalDecorated canonicalize(const DecoratedGraph& dg);

}  // namespace drc
