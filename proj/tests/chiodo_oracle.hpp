#pragma once

// Second route to the Chiodo pushforward in degrees 1 and 2. Works on the
// moduli of r-th roots: Chern characters as sums over weighted boundary
// strata, products by excess intersection, then pushforward to curves.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "drc/bernoulli.hpp"
#include "drc/graph_poly.hpp"
#include "drc/tautclass.hpp"
#include "oracles.hpp"

namespace drc::test {

// xi_{(graph, w)*}[poly]; poly already carries every scalar.
struct SpinPiece {
  StableGraph graph;
  std::vector<long> w;
  DecorationPoly poly;
};
using SpinClass = std::vector<SpinPiece>;

inline DecorationLayout spin_layout(const StableGraph& G) { return {G.half_edge_count(), G.vertex_count(), 2}; }

struct Contraction {
  StableGraph graph;
  std::vector<int> half;    // old half-edge -> new, -1 if contracted
  std::vector<int> vertex;  // old vertex -> new
};

inline Contraction contract(const StableGraph& G, const std::vector<std::pair<int, int>>& along) {
  const int V = G.vertex_count(), H = G.half_edge_count();
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  std::vector<bool> gone(H, false);
  for (auto [h, hp] : along) {
    gone[h] = gone[hp] = true;
    parent[find(G.vertex_of(h))] = find(G.vertex_of(hp));
  }
  Contraction c;
  c.vertex.assign(V, -1);
  std::vector<int> root_id(V, -1), genera, members;
  for (int v = 0; v < V; ++v) {
    int root = find(v);
    if (root_id[root] < 0) {
      root_id[root] = static_cast<int>(genera.size());
      genera.push_back(0);
      members.push_back(0);
    }
    c.vertex[v] = root_id[root];
    genera[c.vertex[v]] += G.genus(v);
    ++members[c.vertex[v]];
  }
  for (std::size_t i = 0; i < genera.size(); ++i) genera[i] -= members[i] - 1;
  for (auto [h, hp] : along) ++genera[c.vertex[G.vertex_of(h)]];
  c.half.assign(H, -1);
  int next = 0;
  for (int h = 0; h < H; ++h)
    if (!gone[h]) c.half[h] = next++;
  std::vector<int> vertex_of(next), inv(next), marking(next, 0);
  for (int h = 0; h < H; ++h) {
    if (gone[h]) continue;
    vertex_of[c.half[h]] = c.vertex[G.vertex_of(h)];
    inv[c.half[h]] = c.half[G.partner(h)];
    if (G.is_leg(h)) marking[c.half[h]] = G.marking(h);
  }
  c.graph = StableGraph::from_parts(std::move(genera), std::move(vertex_of), std::move(inv), std::move(marking));
  return c;
}

struct Iso {
  std::vector<int> half;    // source half-edge -> target half-edge
  std::vector<int> vertex;  // source vertex -> target vertex
};

// All isomorphisms of weighted graphs (S, ws) -> (T, wt), by brute force.
inline std::vector<Iso> weighted_isomorphisms(const StableGraph& S, const std::vector<long>& ws, const StableGraph& T,
                                              const std::vector<long>& wt) {
  std::vector<Iso> out;
  const int H = S.half_edge_count();
  if (H != T.half_edge_count() || S.vertex_count() != T.vertex_count()) return out;
  std::vector<int> perm(H);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Iso f{perm, std::vector<int>(S.vertex_count(), -1)};
    bool ok = true;
    for (int h = 0; h < H && ok; ++h) {
      const int t = perm[h];
      ok = ws[h] == wt[t] && S.is_leg(h) == T.is_leg(t) && (!S.is_leg(h) || S.marking(h) == T.marking(t)) &&
           perm[S.partner(h)] == T.partner(t);
      int& fv = f.vertex[S.vertex_of(h)];
      if (ok && fv >= 0) ok = fv == T.vertex_of(t);
      if (ok) fv = T.vertex_of(t);
    }
    for (int v = 0; v < S.vertex_count() && ok; ++v) {
      if (f.vertex[v] < 0) ok = false;  // vertices without half-edges only occur on unstable input
      else ok = S.genus(v) == T.genus(f.vertex[v]);
    }
    if (ok) {
      std::vector<int> seen(f.vertex);
      std::sort(seen.begin(), seen.end());
      ok = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    }
    if (ok) out.push_back(std::move(f));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Pullback of a decoration along target -> contraction ~ source.
inline DecorationPoly pull_back(const DecorationPoly& p, const StableGraph& target, const Contraction& c, const Iso& f,
                                int max_degree) {
  const DecorationLayout src = p.layout(), dst = spin_layout(target);
  std::vector<int> inverse_half(c.graph.half_edge_count(), -1);
  for (int h = 0; h < target.half_edge_count(); ++h)
    if (c.half[h] >= 0) inverse_half[c.half[h]] = h;
  DecorationPoly out(dst);
  for (const auto& [mono, coeff] : p.terms()) {
    DecorationPoly t = DecorationPoly::constant(dst, coeff);
    for (int var = 0; var < src.variable_count(); ++var) {
      if (mono[var] == 0) continue;
      DecorationPoly x(dst);
      if (var < src.half_edges) {
        x = DecorationPoly::variable(dst, dst.psi(inverse_half[f.half[var]]));
      } else {
        const int v = (var - src.half_edges) / src.max_kappa, m = (var - src.half_edges) % src.max_kappa + 1;
        for (int u = 0; u < target.vertex_count(); ++u)
          if (c.vertex[u] == f.vertex[v]) x += DecorationPoly::variable(dst, dst.kappa(u, m));
      }
      for (int e = 0; e < mono[var]; ++e) t = t.multiply(x, max_degree);
    }
    out += t;
  }
  return out;
}

class SpinOracle {
 public:
  SpinOracle(const DRVector& dr, long r) : dr_(dr), r_(r) {
    for (const auto& G : enumerate_stable_graphs(dr.genus(), dr.marking_count(), 2))
      for (auto& w : naive_weightings(G, r, dr)) strata_.push_back({G, std::move(w)});
  }

  // ch_m of the derived pushforward of the universal root, m = 1 or 2.
  SpinClass ch(int m) const {
    SpinClass out;
    auto bern = [&](long x) {
      return bernoulli_poly(static_cast<unsigned>(m + 1), Rational(Integer(x), Integer(r_))) /
             Rational(factorial(static_cast<unsigned>(m + 1)));
    };
    for (const auto& [G, w] : strata_) {
      const auto layout = spin_layout(G);
      if (G.edge_count() == 0) {
        DecorationPoly p = DecorationPoly::variable(layout, layout.kappa(0, m), bern(dr_.twist()));
        for (int i = 1; i <= dr_.marking_count(); ++i) {
          DecorationPoly leg = DecorationPoly::variable(layout, layout.psi(G.leg_half_edge(i)));
          DecorationPoly t = DecorationPoly::constant(layout, -bern(mod(dr_.part(i), r_)));
          for (int j = 0; j < m; ++j) t = t.multiply(leg, 2);
          p += t;
        }
        out.push_back({G, w, p});
      } else if (G.edge_count() == 1) {
        auto [h, hp] = G.edges()[0];
        const Rational c = Rational(r_) * bern(w[h]) / Rational(automorphism_order(G));
        DecorationPoly p(layout);
        if (m == 1) {
          p = DecorationPoly::constant(layout, c);
        } else {
          p = DecorationPoly::variable(layout, layout.psi(h), c);
          p += DecorationPoly::variable(layout, layout.psi(hp), -c);
        }
        out.push_back({G, w, p});
      }
    }
    return out;
  }

  SpinClass multiply(const SpinClass& X, const SpinClass& Y) const {
    SpinClass out;
    for (const auto& [T, wt] : strata_) {
      const auto edges = T.edges();
      const int ne = static_cast<int>(edges.size());
      const auto layout = spin_layout(T);
      DecorationPoly acc(layout);
      for (unsigned a = 0; a < (1u << ne); ++a)
        for (unsigned b = 0; b < (1u << ne); ++b) {
          if ((a | b) != (1u << ne) - 1) continue;
          const Contraction ca = contract_keeping(T, edges, a), cb = contract_keeping(T, edges, b);
          const auto wa = push_weights(wt, ca), wb = push_weights(wt, cb);
          DecorationPoly excess = DecorationPoly::constant(layout, Rational(1));
          for (int e = 0; e < ne; ++e)
            if ((a & b) >> e & 1) {
              DecorationPoly n = DecorationPoly::variable(layout, layout.psi(edges[e].first), Rational(-1, r_));
              n += DecorationPoly::variable(layout, layout.psi(edges[e].second), Rational(-1, r_));
              excess = excess.multiply(n, 2);
            }
          const int room = 2 - ne;
          if (room < 0) continue;
          DecorationPoly left(layout), right(layout);
          for (const auto& P : X)
            for (const auto& f : weighted_isomorphisms(P.graph, P.w, ca.graph, wa))
              left += pull_back(P.poly, T, ca, f, room);
          for (const auto& Q : Y)
            for (const auto& f : weighted_isomorphisms(Q.graph, Q.w, cb.graph, wb))
              right += pull_back(Q.poly, T, cb, f, room);
          acc += left.multiply(right, room).multiply(excess, room);
        }
      acc *= Rational(1) / Rational(automorphism_order(T));
      if (!acc.is_zero()) out.push_back({T, wt, acc});
    }
    return out;
  }

  TautClass push_forward(const SpinClass& X, int d) const {
    TautClass out(dr_.genus(), dr_.marking_count());
    for (const auto& P : X) {
      DecorationPoly p = P.poly.degree_part(d - P.graph.edge_count());
      int e = 0;
      for (int v = 0; v < P.graph.vertex_count(); ++v) e += 2 * P.graph.genus(v) - 1;
      Rational scale = pow(Rational(r_), static_cast<unsigned>(std::abs(e)));
      if (e < 0) scale = Rational(1) / scale;
      for (const auto& [mono, coeff] : p.terms()) out.add_term(p.decorate(P.graph, mono), coeff * scale);
    }
    return out;
  }

  // Degree-d part of the pushforward of c(-R pi_* L), d = 0, 1 or 2.
  TautClass chern(int d) const {
    if (d == 0) {
      TautClass out(dr_.genus(), dr_.marking_count());
      out.add_term(DecoratedGraph(trivial_graph(dr_.genus(), dr_.marking_count())),
                   pow(Rational(r_), static_cast<unsigned>(2 * dr_.genus())) / Rational(r_));
      return out;
    }
    const SpinClass ch1 = ch(1);
    if (d == 1) return Rational(-1) * push_forward(ch1, 1);
    if (d != 2) throw std::invalid_argument("oracle covers degrees up to 2");
    TautClass out = push_forward(ch(2), 2);
    out.merge(Rational(1, 2) * push_forward(multiply(ch1, ch1), 2));
    return out;
  }

 private:
  static Contraction contract_keeping(const StableGraph& T, const std::vector<std::pair<int, int>>& edges,
                                      unsigned keep) {
    std::vector<std::pair<int, int>> along;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (!(keep >> e & 1)) along.push_back(edges[e]);
    return contract(T, along);
  }

  static std::vector<long> push_weights(const std::vector<long>& w, const Contraction& c) {
    std::vector<long> out(c.graph.half_edge_count());
    for (std::size_t h = 0; h < w.size(); ++h)
      if (c.half[h] >= 0) out[c.half[h]] = w[h];
    return out;
  }

  struct Stratum {
    StableGraph graph;
    std::vector<long> w;
  };
  DRVector dr_;
  long r_;
  std::vector<Stratum> strata_;
};

}  // namespace drc::test
