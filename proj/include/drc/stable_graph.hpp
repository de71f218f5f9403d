#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace drc {

/// Genus-decorated multigraph with legs. Half-edges are indexed 0..H-1; the
/// involution pairs the two halves of an edge and fixes legs. Loops and
/// parallel edges are allowed.
class StableGraph {
 public:
  StableGraph() = default;

  int add_vertex(int genus);
  /// Returns the two half-edges (at u, at v).
  std::pair<int, int> add_edge(int u, int v);
  /// marking is 1-based.
  int add_leg(int v, int marking);

  /// Low-level constructor used by decoders; does not validate.
  static StableGraph from_parts(std::vector<int> genera, std::vector<int> vertex_of,
                                std::vector<int> involution, std::vector<int> marking);

  int vertex_count() const { return static_cast<int>(genera_.size()); }
  int half_edge_count() const { return static_cast<int>(vertex_of_.size()); }
  int genus(int v) const { return genera_[v]; }
  const std::vector<int>& genera() const { return genera_; }
  int vertex_of(int h) const { return vertex_of_[h]; }
  int partner(int h) const { return involution_[h]; }
  bool is_leg(int h) const { return involution_[h] == h; }
  /// 1-based marking of a leg, 0 for edge half-edges.
  int marking(int h) const { return marking_[h]; }

  int valence(int v) const;
  std::vector<int> half_edges_at(int v) const;
  /// Edges as (h, h') with h < h', in increasing order of h.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;
  int leg_count() const;
  /// Half-edge carrying marking i (1-based); -1 if absent.
  int leg_half_edge(int marking) const;

  int first_betti() const { return edge_count() - vertex_count() + 1; }
  int total_genus() const;
  bool is_connected() const;
  /// True when removing edge (h, h') disconnects the graph.
  bool is_separating(int h) const;
  bool has_separating_edge() const;

 private:
  std::vector<int> genera_;
  std::vector<int> vertex_of_;
  std::vector<int> involution_;
  std::vector<int> marking_;
};

/// Name of the first violated stable-graph condition for ambient (g, n):
/// "involution", "vertex", "markings", "connectivity", "stability", "genus".
std::optional<std::string> validate(const StableGraph& graph, int g, int n);

int first_betti(const StableGraph& graph);

/// Canonical byte string: equal iff the graphs are isomorphic respecting
/// leg markings. Stable across runs.
std::string canonical_key(const StableGraph& graph);

/// |Aut| as a group of vertex and half-edge permutations, including the
/// half-swap of each loop.
long automorphism_order(const StableGraph& graph);

/// Isomorphic copy with the canonical vertex and half-edge numbering.
StableGraph canonical_form(const StableGraph& graph);

/// Every isomorphism class of G_{g,n} with at most max_edges edges, one
/// representative each (in canonical form), sorted by canonical key.
/// Throws std::invalid_argument when 2g-2+n <= 0.
std::vector<StableGraph> enumerate_stable_graphs(int g, int n, int max_edges);

/// Named constructors for frequently used graphs.
StableGraph trivial_graph(int g, int n);
/// One genus-(g-1) vertex with a loop and legs 1..n.
StableGraph loop_graph(int g, int n);

}  // namespace drc
