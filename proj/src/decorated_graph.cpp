#include "drc/decorated_graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace drc {

DecoratedGraph::DecoratedGraph(StableGraph g)
    : graph(std::move(g)),
      psi(graph.half_edge_count(), 0),
      kappa(graph.vertex_count()) {}

DecoratedGraph::DecoratedGraph(StableGraph g, std::vector<int> psi_exponents,
                               std::vector<std::vector<int>> kappa_monomials)
    : graph(std::move(g)), psi(std::move(psi_exponents)), kappa(std::move(kappa_monomials)) {
  if (psi.size() != static_cast<std::size_t>(graph.half_edge_count()) ||
      kappa.size() != static_cast<std::size_t>(graph.vertex_count()))
    throw std::invalid_argument("decoration size does not match graph");
  for (int p : psi)
    if (p < 0) throw std::invalid_argument("negative psi exponent");
  for (auto& k : kappa) {
    for (int m : k)
      if (m < 1) throw std::invalid_argument("kappa orders must be positive");
    std::sort(k.begin(), k.end());
  }
}

int DecoratedGraph::degree() const {
  int d = graph.edge_count();
  for (int p : psi) d += p;
  for (const auto& k : kappa)
    for (int m : k) d += m;
  return d;
}

bool DecoratedGraph::has_decorations() const {
  return std::any_of(psi.begin(), psi.end(), [](int p) { return p != 0; }) ||
         std::any_of(kappa.begin(), kappa.end(), [](const auto& k) { return !k.empty(); });
}

namespace {

using Edge = std::array<int, 4>;  // (u, psi at u, v, psi at v), (u, a) <= (v, b)

std::vector<int> vertex_signature(const DecoratedGraph& dg, int v) {
  const auto& G = dg.graph;
  std::vector<int> legs, inner;
  int loops = 0;
  for (int h : G.half_edges_at(v)) {
    if (G.is_leg(h)) {
      legs.push_back(G.marking(h));
      legs.push_back(dg.psi[h]);
    } else {
      inner.push_back(dg.psi[h]);
      if (G.vertex_of(G.partner(h)) == v && G.partner(h) > h) ++loops;
    }
  }
  std::sort(inner.begin(), inner.end());
  // legs are unique by marking; sort the (marking, psi) pairs by marking
  std::vector<std::pair<int, int>> lp;
  for (std::size_t i = 0; i < legs.size(); i += 2) lp.emplace_back(legs[i], legs[i + 1]);
  std::sort(lp.begin(), lp.end());

  std::vector<int> sig{G.genus(v), G.valence(v), loops, static_cast<int>(dg.kappa[v].size())};
  sig.insert(sig.end(), dg.kappa[v].begin(), dg.kappa[v].end());
  sig.push_back(static_cast<int>(lp.size()));
  for (auto [m, p] : lp) sig.insert(sig.end(), {m, p});
  sig.insert(sig.end(), inner.begin(), inner.end());
  return sig;
}

struct Encoding {
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> legs;  // by marking: (vertex, psi)
  auto operator<=>(const Encoding&) const = default;
};

Encoding encode(const DecoratedGraph& dg, const std::vector<int>& new_index,
                const std::vector<std::pair<int, int>>& edge_list, const std::vector<int>& leg_by_marking) {
  const auto& G = dg.graph;
  Encoding enc;
  enc.edges.reserve(edge_list.size());
  for (auto [h, hp] : edge_list) {
    int u = new_index[G.vertex_of(h)], v = new_index[G.vertex_of(hp)];
    int a = dg.psi[h], b = dg.psi[hp];
    if (std::pair(u, a) > std::pair(v, b)) {
      std::swap(u, v);
      std::swap(a, b);
    }
    enc.edges.push_back({u, a, v, b});
  }
  std::sort(enc.edges.begin(), enc.edges.end());
  enc.legs.reserve(leg_by_marking.size());
  for (int h : leg_by_marking) enc.legs.emplace_back(new_index[G.vertex_of(h)], dg.psi[h]);
  return enc;
}

}  // namespace

CanonicalDecorated canonicalize(const DecoratedGraph& dg) {
  const auto& G = dg.graph;
  const int nv = G.vertex_count();

  std::vector<std::vector<int>> sigs(nv);
  for (int v = 0; v < nv; ++v) sigs[v] = vertex_signature(dg, v);
  std::vector<int> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sigs[a] < sigs[b]; });

  // Groups of equal signature occupy contiguous ranges of `order`.
  std::vector<std::pair<int, int>> groups;
  for (int i = 0; i < nv;) {
    int j = i;
    while (j < nv && sigs[order[j]] == sigs[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }

  const auto edge_list = G.edges();
  std::vector<int> leg_by_marking;
  {
    std::vector<std::pair<int, int>> legs;
    for (int h = 0; h < G.half_edge_count(); ++h)
      if (G.is_leg(h)) legs.emplace_back(G.marking(h), h);
    std::sort(legs.begin(), legs.end());
    for (auto [m, h] : legs) leg_by_marking.push_back(h);
  }

  Encoding best;
  std::vector<int> best_index;
  long best_count = 0;
  std::vector<int> new_index(nv);
  std::vector<int> slots = order;

  std::function<void(std::size_t)> search = [&](std::size_t gi) {
    if (gi == groups.size()) {
      for (int pos = 0; pos < nv; ++pos) new_index[slots[pos]] = pos;
      Encoding enc = encode(dg, new_index, edge_list, leg_by_marking);
      if (best_count == 0 || enc < best) {
        best = std::move(enc);
        best_index = new_index;
        best_count = 1;
      } else if (enc == best) {
        ++best_count;
      }
      return;
    }
    auto [lo, hi] = groups[gi];
    std::sort(slots.begin() + lo, slots.begin() + hi);
    do {
      search(gi + 1);
    } while (std::next_permutation(slots.begin() + lo, slots.begin() + hi));
  };
  search(0);

  CanonicalDecorated out;
  // Representative: vertices in canonical order, then edges, then legs.
  StableGraph rep;
  std::vector<std::vector<int>> kappa(nv);
  std::vector<int> old_of(nv);
  for (int v = 0; v < nv; ++v) old_of[best_index[v]] = v;
  for (int pos = 0; pos < nv; ++pos) {
    rep.add_vertex(G.genus(old_of[pos]));
    kappa[pos] = dg.kappa[old_of[pos]];
  }
  std::vector<int> psi;
  for (const auto& e : best.edges) {
    rep.add_edge(e[0], e[2]);
    psi.push_back(e[1]);
    psi.push_back(e[3]);
  }
  for (std::size_t i = 0; i < best.legs.size(); ++i) {
    rep.add_leg(best.legs[i].first, G.marking(leg_by_marking[i]));
    psi.push_back(best.legs[i].second);
  }

  long aut = best_count;
  for (std::size_t i = 0; i < best.edges.size();) {
    std::size_t j = i;
    while (j < best.edges.size() && best.edges[j] == best.edges[i]) ++j;
    for (std::size_t m = 2; m <= j - i; ++m) aut *= static_cast<long>(m);
    const auto& e = best.edges[i];
    if (e[0] == e[2] && e[1] == e[3])
      for (std::size_t m = i; m < j; ++m) aut *= 2;
    i = j;
  }

  std::string key = "V";
  for (int pos = 0; pos < nv; ++pos) {
    key += "(" + std::to_string(rep.genus(pos));
    for (int m : kappa[pos]) key += "k" + std::to_string(m);
    key += ")";
  }
  key += "E";
  for (const auto& e : best.edges)
    key += "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "," +
           std::to_string(e[3]) + ")";
  key += "L";
  for (std::size_t i = 0; i < best.legs.size(); ++i)
    key += "(" + std::to_string(G.marking(leg_by_marking[i])) + ":" + std::to_string(best.legs[i].first) + "," +
           std::to_string(best.legs[i].second) + ")";

  out.key = std::move(key);
  out.representative = DecoratedGraph(std::move(rep), std::move(psi), std::move(kappa));
  out.automorphisms = aut;
  return out;
}

std::string canonical_key(const StableGraph& graph) { return canonicalize(DecoratedGraph(graph)).key; }

long automorphism_order(const StableGraph& graph) { return canonicalize(DecoratedGraph(graph)).automorphisms; }

StableGraph canonical_form(const StableGraph& graph) {
  return canonicalize(DecoratedGraph(graph)).representative.graph;
}

}  // namespace drc
