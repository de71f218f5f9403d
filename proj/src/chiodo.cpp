#include "drc/chiodo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "drc/bernoulli.hpp"
#include "drc/graph_poly.hpp"
#include "drc/parallel.hpp"
#include "drc/pixton.hpp"

namespace drc {

namespace {

long mod(long x, long r) {
  long m = x % r;
  return m < 0 ? m + r : m;
}

Rational power_of_r(long r, int e) {
  Rational p = pow(Rational(r), static_cast<unsigned>(std::abs(e)));
  return e >= 0 ? p : Rational(1) / p;
}

class Coefficients {
 public:
  Coefficients(const ChiodoOptions& options, long r) : r_(r) {
    if (options.bernoulli) bern_ = options.bernoulli;
    else bern_ = [](unsigned m, const Rational& x) { return bernoulli_poly(m, x); };
  }
  // (-1)^{m-1} B_{m+1}(x / r) / (m(m+1))
  Rational operator()(int m, long x) const {
    Rational b = bern_(static_cast<unsigned>(m + 1), Rational(Integer(x), Integer(r_)));
    b /= Rational(static_cast<long>(m) * (m + 1));
    return m % 2 ? b : -b;
  }

 private:
  long r_;
  BernoulliFn bern_;
};

TautClass graph_contribution(const StableGraph& G, const DRVector& dr, int d, long r, const Coefficients& c,
                             const ChiodoOptions& options) {
  const int g = dr.genus(), n = dr.marking_count();
  TautClass out(g, n);
  const auto edges = G.edges();
  const int ne = static_cast<int>(edges.size());
  if (d - ne < 0) return out;
  // Series are truncated at total degree D >= d - |E|; only degree d - |E| is kept.
  const int D = std::max(d, options.truncation) - ne;
  DecorationLayout layout{G.half_edge_count(), G.vertex_count(), std::max(D, 1)};

  DecorationPoly x(layout);
  for (int m = 1; m <= D; ++m) {
    const Rational vk = -c(m, dr.twist());
    for (int v = 0; v < G.vertex_count(); ++v) x += DecorationPoly::variable(layout, layout.kappa(v, m), vk);
    for (int i = 1; i <= n; ++i) {
      DecorationPoly t = DecorationPoly::constant(layout, c(m, mod(dr.part(i), r)));
      const auto leg = DecorationPoly::variable(layout, layout.psi(G.leg_half_edge(i)));
      for (int j = 0; j < m; ++j) t = t.multiply(leg, D);
      x += t;
    }
  }
  const DecorationPoly base = x.exp(D);

  // Edge factor -(sum_{j>=1} s^{j-1} Y^j / j!) with s = psi_h + psi_h' and
  // s Y = sum_m c_m(w) [psi_h^m - (-psi_h')^m].
  auto edge_factor = [&](int h, int hp, long w) {
    const auto ph = DecorationPoly::variable(layout, layout.psi(h));
    const auto php = DecorationPoly::variable(layout, layout.psi(hp), Rational(-1));
    DecorationPoly y(layout);
    for (int m = 1; m <= D + 1; ++m) {
      DecorationPoly sum(layout);
      for (int j = 0; j < m; ++j) {
        DecorationPoly t = DecorationPoly::constant(layout, Rational(1));
        for (int a = 0; a < m - 1 - j; ++a) t = t.multiply(ph, D);
        for (int b = 0; b < j; ++b) t = t.multiply(php, D);
        sum += t;
      }
      sum *= c(m, w);
      y += sum;
    }
    DecorationPoly s = DecorationPoly::variable(layout, layout.psi(h));
    s += DecorationPoly::variable(layout, layout.psi(hp));
    DecorationPoly result(layout);
    DecorationPoly ypow = DecorationPoly::constant(layout, Rational(1));
    DecorationPoly spow = DecorationPoly::constant(layout, Rational(1));
    for (int j = 1; j <= D + 1; ++j) {
      ypow = ypow.multiply(y, D);
      DecorationPoly term = spow.multiply(ypow, D);
      term *= Rational(Integer(-1), factorial(static_cast<unsigned>(j)));
      result += term;
      spow = spow.multiply(s, D);
    }
    return result;
  };

  std::vector<std::map<long, DecorationPoly>> cache(ne);
  DecorationPoly acc(layout);
  WeightingSolver solver(G, options.policy);
  solver.for_each(r, dr, [&](const std::vector<long>& w) {
    DecorationPoly prod = DecorationPoly::constant(layout, Rational(1));
    for (int e = 0; e < ne; ++e) {
      auto [h, hp] = edges[e];
      auto it = cache[e].find(w[h]);
      if (it == cache[e].end()) it = cache[e].emplace(w[h], edge_factor(h, hp, w[h])).first;
      prod = prod.multiply(it->second, D);
    }
    acc += prod;
  });

  DecorationPoly total = acc.multiply(base, D).degree_part(d - ne);
  total *= power_of_r(r, 2 * g - 1 - G.first_betti()) / Rational(automorphism_order(G));
  for (const auto& [mono, coeff] : total.terms()) out.add_term(total.decorate(G, mono), coeff);
  return out;
}

}  // namespace

TautClass chiodo_pushforward(const DRVector& dr, int d, long r, const ChiodoOptions& options) {
  if (d < 0) throw std::invalid_argument("degree d must be non-negative");
  if (r < 1) throw std::invalid_argument("modulus r must be positive");
  if (mod(dr.imbalance(), r) != 0) {
    std::ostringstream os;
    os << "no r-th roots exist: k(2g-2+n) - sum a_i = " << dr.imbalance() << " is not divisible by r = " << r;
    throw std::invalid_argument(os.str());
  }
  const Coefficients c(options, r);
  const auto graphs = enumerate_stable_graphs(dr.genus(), dr.marking_count(), std::max(d, options.truncation));
  std::vector<TautClass> parts(graphs.size(), TautClass(dr.genus(), dr.marking_count()));
  parallel_for(graphs.size(), [&](std::size_t i) { parts[i] = graph_contribution(graphs[i], dr, d, r, c, options); });
  TautClass out(dr.genus(), dr.marking_count());
  for (auto& p : parts) out.merge(p);
  return out;
}

TautClass chiodo_constant(const DRVector& dr, int d, const SampleSpec& spec, FitLog* log,
                          const ChiodoOptions& options) {
  if (dr.imbalance() != 0)
    throw std::invalid_argument("chiodo_constant requires sum a_i = k(2g-2+n) exactly (imbalance " +
                                std::to_string(dr.imbalance()) + ")");
  const int g = dr.genus();
  const int shift = 2 * d - 2 * g + 1;
  int bound = spec.degree_bound >= 0 ? spec.degree_bound : std::max(2 * d, 2 * d + 2 * g - 1);
  const long r_min = spec.r_min > 0 ? spec.r_min : default_r_min(dr);

  std::vector<TautClass> values;
  auto ensure = [&](int count) {
    const std::size_t have = values.size();
    if (static_cast<int>(have) >= count) return;
    values.resize(count, TautClass(g, dr.marking_count()));
    parallel_for(count - have, [&](std::size_t i) {
      const long r = r_min + static_cast<long>(have + i);
      values[have + i] = power_of_r(r, shift) * chiodo_pushforward(dr, d, r, options);
    });
  };

  for (int attempt = 0;; ++attempt) {
    const int samples = bound + 1;
    const int total = samples + spec.verification_nodes;
    ensure(total);
    std::map<std::string, const DecoratedGraph*> keys;
    for (int i = 0; i < total; ++i)
      for (const auto& [key, term] : values[i].terms()) keys.emplace(key, &term.graph);

    TautClass out(g, dr.marking_count());
    std::string mismatch;
    std::vector<FitRecord> records;
    for (const auto& [key, graph] : keys) {
      std::vector<Sample> pts;
      for (int i = 0; i < samples; ++i) pts.push_back({Rational(r_min + i), values[i].coefficient_of_key(key)});
      RPoly p = interpolate(pts);
      bool verified = true;
      for (int i = samples; i < total; ++i) {
        const Rational actual = values[i].coefficient_of_key(key);
        if (p(Rational(r_min + i)) != actual) {
          std::ostringstream os;
          os << "insufficient degree bound " << bound << " for Chiodo coefficient of " << render_term(*graph)
             << ": fit predicts " << p(Rational(r_min + i)) << " at r = " << r_min + i << " but value is " << actual;
          mismatch = os.str();
          verified = false;
          break;
        }
      }
      records.push_back({"chiodo g=" + std::to_string(g) + " d=" + std::to_string(d) + " " + key,
                         graph->graph.first_betti(), p.degree(), false, true, verified});
      if (!verified) break;
      out.add_term(*graph, p.constant_term());
    }
    if (mismatch.empty()) {
      if (log)
        for (auto& rec : records) log->add(std::move(rec));
      return out;
    }
    if (!spec.retry_on_mismatch || attempt > 0) {
      if (log)
        for (auto& rec : records) log->add(std::move(rec));
      throw FitError(mismatch);
    }
    bound = 2 * samples - 1;
  }
}

SameFreeTermReport verify_samefreeterm(const DRVector& dr, int d, const SampleSpec& spec, FitLog* log,
                                       const ChiodoOptions& options) {
  SameFreeTermReport report{false, chiodo_constant(dr, d, spec, log, options),
                            Rational(Integer(1), Integer(1) << d) * pixton_class(dr, d, spec, log), {}};
  report.diff = formal_diff(report.chiodo, report.pixton);
  report.equal = report.diff.empty();
  return report;
}

}  // namespace drc
