#include "drc/stable_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace drc {

int StableGraph::add_vertex(int genus) {
  if (genus < 0) throw std::invalid_argument("negative vertex genus");
  genera_.push_back(genus);
  return vertex_count() - 1;
}

std::pair<int, int> StableGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::out_of_range("add_edge: vertex out of range");
  int h = half_edge_count();
  vertex_of_.insert(vertex_of_.end(), {u, v});
  involution_.insert(involution_.end(), {h + 1, h});
  marking_.insert(marking_.end(), {0, 0});
  return {h, h + 1};
}

int StableGraph::add_leg(int v, int marking) {
  if (v < 0 || v >= vertex_count()) throw std::out_of_range("add_leg: vertex out of range");
  if (marking < 1) throw std::invalid_argument("markings are 1-based");
  int h = half_edge_count();
  vertex_of_.push_back(v);
  involution_.push_back(h);
  marking_.push_back(marking);
  return h;
}

StableGraph StableGraph::from_parts(std::vector<int> genera, std::vector<int> vertex_of,
                                    std::vector<int> involution, std::vector<int> marking) {
  StableGraph g;
  g.genera_ = std::move(genera);
  g.vertex_of_ = std::move(vertex_of);
  g.involution_ = std::move(involution);
  g.marking_ = std::move(marking);
  return g;
}

int StableGraph::valence(int v) const {
  return static_cast<int>(std::count(vertex_of_.begin(), vertex_of_.end(), v));
}

std::vector<int> StableGraph::half_edges_at(int v) const {
  std::vector<int> out;
  for (int h = 0; h < half_edge_count(); ++h)
    if (vertex_of_[h] == v) out.push_back(h);
  return out;
}

std::vector<std::pair<int, int>> StableGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int h = 0; h < half_edge_count(); ++h)
    if (involution_[h] > h) out.emplace_back(h, involution_[h]);
  return out;
}

int StableGraph::edge_count() const {
  int c = 0;
  for (int h = 0; h < half_edge_count(); ++h)
    if (involution_[h] > h) ++c;
  return c;
}

int StableGraph::leg_count() const {
  int c = 0;
  for (int h = 0; h < half_edge_count(); ++h)
    if (involution_[h] == h) ++c;
  return c;
}

int StableGraph::leg_half_edge(int marking) const {
  for (int h = 0; h < half_edge_count(); ++h)
    if (involution_[h] == h && marking_[h] == marking) return h;
  return -1;
}

int StableGraph::total_genus() const {
  return std::accumulate(genera_.begin(), genera_.end(), 0) + first_betti();
}

namespace {

// Number of components after ignoring the edge containing half-edge skip (-1: none).
int component_count(const StableGraph& g, int skip) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [h, hp] : g.edges()) {
    if (h == skip || hp == skip) continue;
    parent[find(g.vertex_of(h))] = find(g.vertex_of(hp));
  }
  int c = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (find(v) == v) ++c;
  return c;
}

}  // namespace

bool StableGraph::is_connected() const { return vertex_count() > 0 && component_count(*this, -1) == 1; }

bool StableGraph::is_separating(int h) const {
  if (is_leg(h)) return false;
  return component_count(*this, h) > component_count(*this, -1);
}

bool StableGraph::has_separating_edge() const {
  for (auto [h, hp] : edges())
    if (is_separating(h)) return true;
  return false;
}

std::optional<std::string> validate(const StableGraph& graph, int g, int n) {
  const int hc = graph.half_edge_count();
  for (int h = 0; h < hc; ++h) {
    int p = graph.partner(h);
    if (p < 0 || p >= hc || graph.partner(p) != h) return "involution";
    if (graph.vertex_of(h) < 0 || graph.vertex_of(h) >= graph.vertex_count()) return "vertex";
  }
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (graph.genus(v) < 0) return "vertex";
  std::vector<int> seen(n + 1, 0);
  for (int h = 0; h < hc; ++h) {
    if (!graph.is_leg(h)) {
      if (graph.marking(h) != 0) return "markings";
      continue;
    }
    int m = graph.marking(h);
    if (m < 1 || m > n || seen[m]++) return "markings";
  }
  if (graph.leg_count() != n) return "markings";
  if (!graph.is_connected()) return "connectivity";
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (2 * graph.genus(v) - 2 + graph.valence(v) <= 0) return "stability";
  if (graph.total_genus() != g) return "genus";
  return std::nullopt;
}

int first_betti(const StableGraph& graph) { return graph.first_betti(); }

StableGraph trivial_graph(int g, int n) {
  StableGraph G;
  G.add_vertex(g);
  for (int i = 1; i <= n; ++i) G.add_leg(0, i);
  return G;
}

StableGraph loop_graph(int g, int n) {
  if (g < 1) throw std::invalid_argument("loop_graph needs g >= 1");
  StableGraph G;
  G.add_vertex(g - 1);
  G.add_edge(0, 0);
  for (int i = 1; i <= n; ++i) G.add_leg(0, i);
  return G;
}

}  // namespace drc
