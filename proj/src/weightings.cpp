#include "drc/weightings.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

#include "drc/parallel.hpp"

namespace drc {

DRVector::DRVector(int g, std::vector<long> parts, int k) : g_(g), k_(k), parts_(std::move(parts)) {
  const int n = marking_count();
  if (g < 0 || 2 * g - 2 + n <= 0)
    throw std::invalid_argument("unstable (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ")");
  if (imbalance() != 0) {
    std::ostringstream os;
    os << "unbalanced vector: sum a_i = " << std::accumulate(parts_.begin(), parts_.end(), 0L)
       << " but k(2g-2+n) = " << static_cast<long>(k) * (2 * g - 2 + n);
    throw std::invalid_argument(os.str());
  }
}

DRVector DRVector::unchecked(int g, std::vector<long> parts, int k) {
  DRVector d;
  d.g_ = g;
  d.k_ = k;
  d.parts_ = std::move(parts);
  const int n = d.marking_count();
  if (g < 0 || 2 * g - 2 + n <= 0)
    throw std::invalid_argument("unstable (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ")");
  return d;
}

long DRVector::imbalance() const {
  const long n = marking_count();
  return static_cast<long>(k_) * (2L * g_ - 2 + n) - std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::vector<long> DRVector::mu() const {
  std::vector<long> out;
  for (long a : parts_)
    if (a > 0) out.push_back(a);
  return out;
}

std::vector<long> DRVector::nu() const {
  std::vector<long> out;
  for (long a : parts_)
    if (a < 0) out.push_back(-a);
  return out;
}

long DRVector::degree() const {
  auto m = mu();
  return std::accumulate(m.begin(), m.end(), 0L);
}

namespace {

long mod(long x, long r) {
  long m = x % r;
  return m < 0 ? m + r : m;
}

}  // namespace

WeightingSolver::WeightingSolver(const StableGraph& graph, TreePolicy policy) : graph_(graph) {
  const int nv = graph.vertex_count();
  if (nv == 0) throw std::invalid_argument("empty graph");
  root_ = std::clamp(policy.root, 0, nv - 1);
  auto edges = graph.edges();
  if (policy.reverse_edges) std::reverse(edges.begin(), edges.end());

  parent_edge_.assign(nv, {-1, -1});
  std::vector<bool> seen(nv, false);
  std::vector<bool> tree_edge(edges.size(), false);
  std::deque<int> queue{root_};
  seen[root_] = true;
  std::vector<int> bfs;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    bfs.push_back(v);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [h, hp] = edges[i];
      int a = graph.vertex_of(h), b = graph.vertex_of(hp);
      int other = -1, half_at_other = -1, half_at_v = -1;
      if (a == v && !seen[b]) {
        other = b, half_at_other = hp, half_at_v = h;
      } else if (b == v && !seen[a]) {
        other = a, half_at_other = h, half_at_v = hp;
      }
      if (other < 0) continue;
      seen[other] = true;
      tree_edge[i] = true;
      parent_edge_[other] = {half_at_other, half_at_v};
      queue.push_back(other);
    }
  }
  if (static_cast<int>(bfs.size()) != nv) throw std::invalid_argument("graph is not connected");
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!tree_edge[i]) free_edges_.push_back(edges[i]);
  // Leaves first: reverse BFS order, root excluded.
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it)
    if (*it != root_) solve_order_.push_back(*it);
}

long WeightingSolver::for_each(long r, const DRVector& dr,
                               const std::function<void(const std::vector<long>&)>& visit) const {
  if (r < 1) throw std::invalid_argument("modulus r must be positive");
  const auto& G = graph_;
  const int hc = G.half_edge_count();
  const int nv = G.vertex_count();
  const long k = dr.twist();

  // Vertex targets k(2g(v) - 2 + n(v)) mod r.
  std::vector<long> target(nv);
  for (int v = 0; v < nv; ++v) target[v] = mod(k * (2L * G.genus(v) - 2 + G.valence(v)), r);

  std::vector<long> w(hc, 0);
  std::vector<bool> known(hc, false);
  for (int h = 0; h < hc; ++h)
    if (G.is_leg(h)) {
      w[h] = mod(dr.part(G.marking(h)), r);
      known[h] = true;
    }
  for (auto [h, hp] : free_edges_) known[h] = known[hp] = true;

  std::vector<std::vector<int>> at(nv);
  for (int h = 0; h < hc; ++h) at[G.vertex_of(h)].push_back(h);

  auto solve = [&]() -> bool {
    for (int v : solve_order_) {
      auto [hv, hp] = parent_edge_[v];
      long s = 0;
      for (int h : at[v])
        if (h != hv) s += w[h];
      w[hv] = mod(target[v] - s, r);
      w[hp] = mod(-w[hv], r);
    }
    long s = 0;
    for (int h : at[root_]) s += w[h];
    return mod(s - target[root_], r) == 0;
  };

  for (auto [h, hp] : free_edges_) w[h] = w[hp] = 0;
  if (!solve()) return 0;

  const std::size_t nf = free_edges_.size();
  std::vector<long> digit(nf, 0);
  long count = 0;
  for (;;) {
    for (std::size_t i = 0; i < nf; ++i) {
      auto [h, hp] = free_edges_[i];
      w[h] = digit[i];
      w[hp] = mod(-digit[i], r);
    }
    solve();
    visit(w);
    ++count;
    std::size_t i = 0;
    while (i < nf && ++digit[i] == r) digit[i++] = 0;
    if (i == nf) break;
  }
  return count;
}

std::vector<Weighting> enumerate_weightings(const StableGraph& graph, long r, const DRVector& dr,
                                            TreePolicy policy) {
  std::vector<Weighting> out;
  WeightingSolver(graph, policy).for_each(r, dr, [&](const std::vector<long>& w) { out.push_back({w, r}); });
  return out;
}

int total_degree(const HalfEdgePoly& q) {
  int d = 0;
  for (const auto& m : q) {
    if (m.coefficient.is_zero()) continue;
    d = std::max(d, std::accumulate(m.exponents.begin(), m.exponents.end(), 0));
  }
  return d;
}

namespace {

// Integer sum of prod_h w(h)^e_h over weightings, one accumulator per monomial.
// Small products are accumulated in __int128 and flushed to GMP.
struct MonomialAccumulator {
  std::vector<std::pair<int, int>> factors;  // (half-edge, exponent)
  __int128 fast = 0;
  Integer total = 0;

  void add(const std::vector<long>& w) {
    __int128 p = 1;
    bool overflow = false;
    for (auto [h, e] : factors) {
      for (int i = 0; i < e; ++i) {
        __int128 next;
        if (__builtin_mul_overflow(p, static_cast<__int128>(w[h]), &next)) {
          overflow = true;
          break;
        }
        p = next;
      }
      if (overflow || p == 0) break;
    }
    if (overflow) {
      Integer big = 1;
      for (auto [h, e] : factors) {
        Integer base = w[h];
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), e);
        big *= pw;
      }
      total += big;
      return;
    }
    __int128 next;
    if (__builtin_add_overflow(fast, p, &next) || next > (static_cast<__int128>(1) << 120)) {
      flush();
      fast = p;
    } else {
      fast = next;
    }
  }

  void flush() {
    __int128 v = fast;
    fast = 0;
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer hi = static_cast<unsigned long>(u >> 64);
    Integer lo = static_cast<unsigned long>(u & ~0UL);
    Integer z = hi * (Integer(1) << 64) + lo;
    total += neg ? Integer(-z) : z;
  }
};

}  // namespace

std::vector<Rational> lattice_sums(const StableGraph& graph, long r, const DRVector& dr,
                                   std::span<const HalfEdgePoly> qs, TreePolicy policy) {
  std::vector<std::vector<MonomialAccumulator>> acc(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (const auto& m : qs[i]) {
      if (m.exponents.size() != static_cast<std::size_t>(graph.half_edge_count()))
        throw std::invalid_argument("polynomial variables do not match half-edges");
      MonomialAccumulator a;
      for (std::size_t h = 0; h < m.exponents.size(); ++h)
        if (m.exponents[h] > 0) a.factors.emplace_back(static_cast<int>(h), m.exponents[h]);
      acc[i].push_back(std::move(a));
    }
  WeightingSolver(graph, policy).for_each(r, dr, [&](const std::vector<long>& w) {
    for (auto& list : acc)
      for (auto& a : list) a.add(w);
  });
  std::vector<Rational> out(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = 0; j < qs[i].size(); ++j) {
      acc[i][j].flush();
      out[i] += qs[i][j].coefficient * Rational(acc[i][j].total);
    }
  return out;
}

Rational lattice_sum(const StableGraph& graph, long r, const DRVector& dr, const HalfEdgePoly& q,
                     TreePolicy policy) {
  return lattice_sums(graph, r, dr, std::span<const HalfEdgePoly>(&q, 1), policy)[0];
}

long default_r_min(const DRVector& dr) {
  long s = 0;
  for (long a : dr.parts()) s += std::labs(a);
  s += std::labs(static_cast<long>(dr.twist())) * std::labs(2L * dr.genus() - 2 + dr.marking_count());
  return std::max(2L, s) + 1;
}

std::vector<FitResult> fit_r_polynomials(const StableGraph& graph, const DRVector& dr,
                                         std::span<const HalfEdgePoly> qs, const SampleSpec& spec) {
  const int betti = graph.first_betti();
  int bound = spec.degree_bound;
  if (bound < 0) {
    bound = 0;
    for (const auto& q : qs) bound = std::max(bound, total_degree(q) + betti);
  }
  const long r_min = spec.r_min > 0 ? spec.r_min : default_r_min(dr);

  for (int attempt = 0;; ++attempt) {
    const int samples = bound + 1;
    const int total = samples + spec.verification_nodes;
    std::vector<long> nodes(total);
    std::iota(nodes.begin(), nodes.end(), r_min);

    std::vector<std::vector<Rational>> values(total);
    parallel_for(static_cast<std::size_t>(total),
                 [&](std::size_t i) { values[i] = lattice_sums(graph, nodes[i], dr, qs, spec.policy); });

    std::vector<FitResult> out(qs.size());
    std::string mismatch;
    for (std::size_t qi = 0; qi < qs.size() && mismatch.empty(); ++qi) {
      std::vector<Sample> pts;
      for (int i = 0; i < samples; ++i) pts.push_back({Rational(nodes[i]), values[i][qi]});
      RPoly p = interpolate(pts);
      for (int i = samples; i < total; ++i)
        if (p(Rational(nodes[i])) != values[i][qi]) {
          std::ostringstream os;
          os << "insufficient degree bound " << bound << " for lattice sum on graph " << canonical_key(graph)
             << ": fit predicts " << p(Rational(nodes[i])) << " at r = " << nodes[i] << " but sum is "
             << values[i][qi];
          mismatch = os.str();
          break;
        }
      out[qi].poly = std::move(p);
      out[qi].betti = betti;
      out[qi].degree_bound = bound;
      out[qi].divisible_by_r_betti = out[qi].poly.divisible_by_r_power(static_cast<unsigned>(betti));
      out[qi].nodes = nodes;
    }
    if (mismatch.empty()) return out;
    if (!spec.retry_on_mismatch || attempt > 0) throw FitError(mismatch);
    bound = 2 * samples - 1;
  }
}

FitResult fit_r_polynomial(const StableGraph& graph, const DRVector& dr, const HalfEdgePoly& q,
                           const SampleSpec& spec) {
  return fit_r_polynomials(graph, dr, std::span<const HalfEdgePoly>(&q, 1), spec)[0];
}

void FitLog::add(FitRecord rec) {
  std::lock_guard lock(mutex_);
  records_.push_back(std::move(rec));
}

std::vector<FitRecord> FitLog::records() const {
  std::lock_guard lock(mutex_);
  return records_;
}

std::size_t FitLog::failures() const {
  std::lock_guard lock(mutex_);
  return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(), [](const FitRecord& r) {
    return !r.verified || (r.divisibility_checked && !r.divisible);
  }));
}

}  // namespace drc
