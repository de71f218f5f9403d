#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "drc/decorated_graph.hpp"
#include "drc/rational.hpp"
#include "drc/stable_graph.hpp"

namespace drc::test {

inline Rational q(const char* text) { return Rational::parse(text); }

/// Isomorphic copy with shuffled vertex and half-edge numbering. With
/// swap_halves the two halves of every edge may also trade places.
struct Relabel {
  std::vector<int> vertex;     // old -> new
  std::vector<int> half_edge;  // old -> new
};

inline Relabel random_relabel(const StableGraph& g, std::mt19937_64& rng) {
  Relabel m;
  m.vertex.resize(g.vertex_count());
  m.half_edge.resize(g.half_edge_count());
  std::iota(m.vertex.begin(), m.vertex.end(), 0);
  std::iota(m.half_edge.begin(), m.half_edge.end(), 0);
  std::shuffle(m.vertex.begin(), m.vertex.end(), rng);
  std::shuffle(m.half_edge.begin(), m.half_edge.end(), rng);
  return m;
}

inline StableGraph apply(const StableGraph& g, const Relabel& m) {
  const int V = g.vertex_count(), H = g.half_edge_count();
  std::vector<int> genera(V), vertex_of(H), inv(H), marking(H);
  for (int v = 0; v < V; ++v) genera[m.vertex[v]] = g.genus(v);
  for (int h = 0; h < H; ++h) {
    vertex_of[m.half_edge[h]] = m.vertex[g.vertex_of(h)];
    inv[m.half_edge[h]] = m.half_edge[g.partner(h)];
    marking[m.half_edge[h]] = g.marking(h);
  }
  return StableGraph::from_parts(genera, vertex_of, inv, marking);
}

inline DecoratedGraph apply(const DecoratedGraph& dg, const Relabel& m) {
  DecoratedGraph out;
  out.graph = apply(dg.graph, m);
  out.psi.assign(dg.psi.size(), 0);
  out.kappa.assign(dg.kappa.size(), {});
  for (std::size_t h = 0; h < dg.psi.size(); ++h) out.psi[m.half_edge[h]] = dg.psi[h];
  for (std::size_t v = 0; v < dg.kappa.size(); ++v) out.kappa[m.vertex[v]] = dg.kappa[v];
  return out;
}

/// Random balanced vector of length n with entries in [-bound, bound].
inline std::vector<long> random_balanced(int n, long bound, std::mt19937_64& rng, long total = 0) {
  std::uniform_int_distribution<long> pick(-bound, bound);
  for (;;) {
    std::vector<long> a(n);
    long s = 0;
    for (int i = 0; i + 1 < n; ++i) s += a[i] = pick(rng);
    a[n - 1] = total - s;
    if (std::abs(a[n - 1]) <= bound) return a;
  }
}

}  // namespace drc::test
