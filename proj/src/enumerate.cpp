#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "drc/decorated_graph.hpp"
#include "drc/stable_graph.hpp"

namespace drc {

namespace {

// Nonincreasing genus vectors of length parts summing to total.
void genus_vectors(int total, int parts, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int x = std::min(total, cap); x >= 0; --x) {
    if (x * parts < total) break;
    cur.push_back(x);
    genus_vectors(total - x, parts - 1, x, cur, out);
    cur.pop_back();
  }
}

std::vector<StableGraph> graphs_with_edges(int g, int n, int e) {
  std::map<std::string, StableGraph> found;
  for (int nv = 1; nv <= e + 1; ++nv) {
    const int betti = e - nv + 1;
    const int vertex_genus = g - betti;
    if (vertex_genus < 0) continue;

    std::vector<std::vector<int>> gvs;
    std::vector<int> cur;
    genus_vectors(vertex_genus, nv, vertex_genus, cur, gvs);

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < nv; ++i)
      for (int j = i; j < nv; ++j) pairs.emplace_back(i, j);

    // Multisets of e vertex pairs, as nondecreasing index sequences.
    std::vector<int> choice;
    std::function<void(int)> pick_edges = [&](int start) {
      if (static_cast<int>(choice.size()) == e) {
        // connectivity
        std::vector<int> parent(nv);
        for (int i = 0; i < nv; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (int c : choice) parent[find(pairs[c].first)] = find(pairs[c].second);
        for (int i = 1; i < nv; ++i)
          if (find(i) != find(0)) return;

        std::vector<int> inner_valence(nv, 0);
        for (int c : choice) {
          ++inner_valence[pairs[c].first];
          ++inner_valence[pairs[c].second];
        }
        for (const auto& gv : gvs) {
          // Assign legs: marking i -> vertex leg_at[i].
          std::vector<int> leg_at(n, 0);
          for (;;) {
            std::vector<int> val = inner_valence;
            for (int i = 0; i < n; ++i) ++val[leg_at[i]];
            bool stable = true;
            for (int v = 0; v < nv && stable; ++v)
              if (2 * gv[v] - 2 + val[v] <= 0) stable = false;
            if (stable) {
              StableGraph G;
              for (int v = 0; v < nv; ++v) G.add_vertex(gv[v]);
              for (int c : choice) G.add_edge(pairs[c].first, pairs[c].second);
              for (int i = 0; i < n; ++i) G.add_leg(leg_at[i], i + 1);
              auto canon = canonicalize(DecoratedGraph(G));
              if (!found.count(canon.key)) found.emplace(canon.key, std::move(canon.representative.graph));
            }
            int i = 0;
            while (i < n && ++leg_at[i] == nv) leg_at[i++] = 0;
            if (i == n) break;
          }
        }
        return;
      }
      for (int c = start; c < static_cast<int>(pairs.size()); ++c) {
        choice.push_back(c);
        pick_edges(c);
        choice.pop_back();
      }
    };
    pick_edges(0);
  }
  std::vector<StableGraph> out;
  out.reserve(found.size());
  for (auto& [k, G] : found) out.push_back(std::move(G));
  return out;
}

}  // namespace

std::vector<StableGraph> enumerate_stable_graphs(int g, int n, int max_edges) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
    throw std::invalid_argument("unstable (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ")");
  if (max_edges < 0) throw std::invalid_argument("max_edges must be non-negative");
  // Stable graphs have at most 3g - 3 + n edges.
  max_edges = std::min(max_edges, 3 * g - 3 + n);

  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::vector<StableGraph>> cache;

  std::vector<std::pair<std::string, StableGraph>> all;
  for (int e = 0; e <= max_edges; ++e) {
    std::vector<StableGraph> layer;
    bool cached = false;
    {
      std::lock_guard lock(mutex);
      auto it = cache.find({g, n, e});
      if (it != cache.end()) {
        layer = it->second;
        cached = true;
      }
    }
    if (!cached) {
      layer = graphs_with_edges(g, n, e);
      std::lock_guard lock(mutex);
      cache.emplace(std::tuple{g, n, e}, layer);
    }
    for (auto& G : layer) all.emplace_back(canonical_key(G), std::move(G));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<StableGraph> out;
  out.reserve(all.size());
  for (auto& [k, G] : all) out.push_back(std::move(G));
  return out;
}

}  // namespace drc
