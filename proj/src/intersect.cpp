#include "drc/intersect.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "drc/parallel.hpp"
#include "drc/pixton.hpp"

namespace drc {

namespace {

std::mutex correlator_mutex;
std::map<std::pair<int, std::vector<int>>, Rational> correlator_cache;

Rational odd_df(int k) { return Rational(double_factorial_odd(k)); }  // (2k-1)!!

Rational correlator(int g, std::vector<int> d);

// Splits of `rest` into two sub-multisets, by index subsets.
Rational split_sum(int g, int a, int b, const std::vector<int>& rest) {
  Rational total;
  const int n = static_cast<int>(rest.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> left{a}, right{b};
    for (int i = 0; i < n; ++i) (mask >> i & 1u ? left : right).push_back(rest[i]);
    for (int g1 = 0; g1 <= g; ++g1) {
      Rational l = correlator(g1, left);
      if (l.is_zero()) continue;
      total += l * correlator(g - g1, right);
    }
  }
  return total;
}

Rational compute(int g, std::vector<int> d) {
  const int n = static_cast<int>(d.size());
  const int dim = 3 * g - 3 + n;
  if (g < 0 || 2 * g - 2 + n <= 0 || dim < 0) return Rational();
  if (std::accumulate(d.begin(), d.end(), 0) != dim) return Rational();
  if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) return Rational();
  if (g == 0 && n == 3) return Rational(1);
  if (g == 1 && n == 1) return Rational(1, 24);
  // Virasoro (DVV) recursion on the largest exponent k + 1.
  std::sort(d.begin(), d.end(), std::greater<>());
  const int k = d[0] - 1;
  if (k < 0) return Rational();
  std::vector<int> rest(d.begin() + 1, d.end());
  Rational total;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> e = rest;
    e[j] += k;
    total += odd_df(k + rest[j] + 1) / odd_df(rest[j]) * correlator(g, e);
  }
  Rational half;
  for (int a = 0; a <= k - 1; ++a) {
    const int b = k - 1 - a;
    const Rational w = odd_df(a + 1) * odd_df(b + 1);
    std::vector<int> e = rest;
    e.push_back(a);
    e.push_back(b);
    Rational s = correlator(g - 1, e) + split_sum(g, a, b, rest);
    half += w * s;
  }
  total += half / Rational(2);
  return total / odd_df(k + 2);
}

Rational correlator(int g, std::vector<int> d) {
  std::sort(d.begin(), d.end());
  auto key = std::make_pair(g, d);
  {
    std::lock_guard lock(correlator_mutex);
    auto it = correlator_cache.find(key);
    if (it != correlator_cache.end()) return it->second;
  }
  Rational v = compute(g, d);
  std::lock_guard lock(correlator_mutex);
  correlator_cache.emplace(std::move(key), v);
  return v;
}

// Set partitions of {0..m-1} as block-label vectors.
void set_partitions(int m, std::vector<int>& cur, int blocks, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    set_partitions(m, cur, std::max(blocks, b + 1), out);
    cur.pop_back();
  }
}

std::mutex kappa_mutex;
std::map<std::tuple<int, std::vector<int>, std::vector<int>>, Rational> kappa_cache;

// int psi^a kappa_{b_1} ... kappa_{b_m}: invert
// pi_*(prod psi_{n+j}^{b_j+1}) = sum_{sigma in S_m} prod_{cycles c} kappa_{b(c)}.
Rational kappa_integral(int g, const std::vector<int>& psi, std::vector<int> kappa) {
  std::sort(kappa.begin(), kappa.end());
  if (kappa.empty()) return correlator(g, psi);
  auto key = std::make_tuple(g, psi, kappa);
  {
    std::lock_guard lock(kappa_mutex);
    auto it = kappa_cache.find(key);
    if (it != kappa_cache.end()) return it->second;
  }
  const int m = static_cast<int>(kappa.size());
  std::vector<int> ext = psi;
  for (int b : kappa) ext.push_back(b + 1);
  Rational value = correlator(g, ext);
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  set_partitions(m, cur, 0, parts);
  for (const auto& p : parts) {
    const int blocks = *std::max_element(p.begin(), p.end()) + 1;
    if (blocks == m) continue;  // the identity permutation
    std::vector<int> merged(blocks, 0), size(blocks, 0);
    for (int j = 0; j < m; ++j) {
      merged[p[j]] += kappa[j];
      ++size[p[j]];
    }
    Integer perms = 1;
    for (int s : size) perms *= factorial(static_cast<unsigned>(s - 1));
    value -= Rational(perms) * kappa_integral(g, psi, merged);
  }
  std::lock_guard lock(kappa_mutex);
  kappa_cache.emplace(std::move(key), value);
  return value;
}

}  // namespace

Rational witten_correlator(int g, std::vector<int> exponents) { return correlator(g, std::move(exponents)); }

Rational integrate_vertex(int g, int n, const std::vector<int>& psi, std::vector<int> kappa) {
  if (static_cast<int>(psi.size()) != n) throw std::invalid_argument("integrate_vertex: need one psi exponent per point");
  if (g < 0 || 2 * g - 2 + n <= 0) return Rational();
  const int deg = std::accumulate(psi.begin(), psi.end(), 0) + std::accumulate(kappa.begin(), kappa.end(), 0);
  if (deg != 3 * g - 3 + n) return Rational();
  return kappa_integral(g, psi, std::move(kappa));
}

Rational pair_with_psi(const TautClass& t, const std::vector<int>& b) {
  if (static_cast<int>(b.size()) != t.marking_count())
    throw std::invalid_argument("pair_with_psi: " + std::to_string(b.size()) + " exponents for n = " +
                                std::to_string(t.marking_count()));
  std::vector<const TautClass::Term*> terms;
  for (const auto& [key, term] : t.terms()) terms.push_back(&term);
  std::vector<Rational> values(terms.size());
  parallel_for(terms.size(), [&](std::size_t i) {
    const auto& dg = terms[i]->graph;
    const auto& G = dg.graph;
    Rational v = terms[i]->coefficient;
    for (int vert = 0; vert < G.vertex_count() && !v.is_zero(); ++vert) {
      std::vector<int> psi;
      for (int h : G.half_edges_at(vert)) psi.push_back(dg.psi[h] + (G.is_leg(h) ? b[G.marking(h) - 1] : 0));
      v *= integrate_vertex(G.genus(vert), static_cast<int>(psi.size()), psi, dg.kappa[vert]);
    }
    values[i] = v;
  });
  Rational total;
  for (const auto& v : values) total += v;
  return total;
}

std::vector<std::vector<int>> psi_monomials(int n, int degree) {
  std::vector<std::vector<int>> out;
  if (degree < 0 || n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int left) -> void {
    if (static_cast<int>(cur.size()) == n - 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.push_back(e);
      self(self, left - e);
      cur.pop_back();
    }
  };
  if (n == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(rec, degree);
  return out;
}

std::vector<ProbeResult> vanishing_probe(const DRVector& dr, int d, std::vector<std::vector<int>> exponent_sets,
                                         FitLog* log) {
  const int g = dr.genus(), n = dr.marking_count();
  if (exponent_sets.empty()) exponent_sets = psi_monomials(n, 3 * g - 3 + n - d);
  const TautClass p = pixton_class(dr, d, {}, log);
  std::vector<ProbeResult> out;
  for (auto& b : exponent_sets) out.push_back({b, pair_with_psi(p, b)});
  return out;
}

}  // namespace drc
