#include "drc/pixton.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "drc/graph_poly.hpp"
#include "drc/parallel.hpp"

namespace drc {

namespace {

// Edge-exponent vectors m with sum(m) <= budget.
void exponent_vectors(int edges, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == edges) {
    out.push_back(cur);
    return;
  }
  for (int m = 0; m <= budget; ++m) {
    cur.push_back(m);
    exponent_vectors(edges, budget - m, cur, out);
    cur.pop_back();
  }
}

// Everything about one graph that does not depend on r: the edge-exponent
// vectors, the matching weight monomials prod_e (w(h)w(h'))^{m_e+1}, and the
// decoration polynomial attached to each vector.
struct GraphPlan {
  StableGraph graph;
  long automorphisms = 1;
  std::vector<std::vector<int>> ms;
  std::vector<HalfEdgePoly> qs;
  std::vector<DecorationPoly> polys;
};

GraphPlan plan_graph(const StableGraph& G, const DRVector& dr, int d) {
  GraphPlan plan{G, automorphism_order(G), {}, {}, {}};
  const auto edges = G.edges();
  const int ne = static_cast<int>(edges.size());
  const int budget = d - ne;
  DecorationLayout layout{G.half_edge_count(), G.vertex_count(), 1};

  DecorationPoly x(layout);
  const long k = dr.twist();
  for (int v = 0; v < G.vertex_count(); ++v) x += DecorationPoly::variable(layout, layout.kappa(v, 1), Rational(-k * k));
  for (int i = 1; i <= dr.marking_count(); ++i) {
    const long a = dr.part(i);
    x += DecorationPoly::variable(layout, layout.psi(G.leg_half_edge(i)), Rational(Integer(a) * a));
  }
  const DecorationPoly base = x.exp(budget);

  std::vector<int> cur;
  exponent_vectors(ne, budget, cur, plan.ms);
  for (const auto& m : plan.ms) {
    HalfEdgeMonomial q{std::vector<int>(G.half_edge_count(), 0), Rational(1)};
    DecorationPoly poly = DecorationPoly::constant(layout, Rational(1));
    int used = 0;
    for (int e = 0; e < ne; ++e) {
      auto [h, hp] = edges[e];
      q.exponents[h] = q.exponents[hp] = m[e] + 1;
      DecorationPoly s = DecorationPoly::variable(layout, layout.psi(h));
      s += DecorationPoly::variable(layout, layout.psi(hp));
      DecorationPoly factor = DecorationPoly::constant(layout, Rational(Integer(m[e] % 2 ? -1 : 1), factorial(m[e] + 1)));
      for (int j = 0; j < m[e]; ++j) factor = factor.multiply(s, budget);
      poly = poly.multiply(factor, budget);
      used += m[e];
    }
    poly = poly.multiply(base.degree_part(budget - used), budget).degree_part(budget);
    plan.qs.push_back(HalfEdgePoly{q});
    plan.polys.push_back(std::move(poly));
  }
  return plan;
}

// sum over m of scalar[m] / |Aut| * xi_*[poly_m].
void emit(const GraphPlan& plan, const std::vector<Rational>& scalars, TautClass& out) {
  const Rational inv_aut(Integer(1), Integer(plan.automorphisms));
  for (std::size_t i = 0; i < plan.ms.size(); ++i) {
    if (scalars[i].is_zero()) continue;
    const Rational c = scalars[i] * inv_aut;
    for (const auto& [mono, coeff] : plan.polys[i].terms())
      out.add_term(plan.polys[i].decorate(plan.graph, mono), c * coeff);
  }
}

std::vector<GraphPlan> plan_all(const DRVector& dr, int d) {
  const int g = dr.genus(), n = dr.marking_count();
  std::vector<GraphPlan> plans;
  for (const auto& G : enumerate_stable_graphs(g, n, d)) plans.push_back(plan_graph(G, dr, d));
  return plans;
}

TautClass reduce(const DRVector& dr, std::vector<TautClass>& parts) {
  TautClass out(dr.genus(), dr.marking_count());
  for (auto& p : parts) out.merge(p);
  return out;
}

void require_degree(int d) {
  if (d < 0) throw std::invalid_argument("degree d must be non-negative");
}

}  // namespace

TautClass pixton_fixed_r(const DRVector& dr, int d, long r, TreePolicy policy) {
  require_degree(d);
  if (r < 1) throw std::invalid_argument("modulus r must be positive");
  const auto plans = plan_all(dr, d);
  std::vector<TautClass> parts(plans.size(), TautClass(dr.genus(), dr.marking_count()));
  parallel_for(plans.size(), [&](std::size_t i) {
    const auto& plan = plans[i];
    TreePolicy p = policy;
    p.root = std::min(p.root, plan.graph.vertex_count() - 1);
    auto sums = lattice_sums(plan.graph, r, dr, plan.qs, p);
    const Rational scale(Integer(1), pow(Rational(r), plan.graph.first_betti()).numerator());
    for (auto& s : sums) s *= scale;
    emit(plan, sums, parts[i]);
  });
  return reduce(dr, parts);
}

namespace {

void fit_plan(const GraphPlan& plan, const DRVector& dr, int d, const SampleSpec& spec, FitLog* log,
              TautClass& out) {
  SampleSpec s = spec;
  s.policy.root = std::min(s.policy.root, plan.graph.vertex_count() - 1);
  auto fits = fit_r_polynomials(plan.graph, dr, plan.qs, s);
  const int betti = plan.graph.first_betti();
  std::vector<Rational> scalars;
  for (std::size_t j = 0; j < fits.size(); ++j) {
    // Constant term of F(r) / r^{h1}.
    scalars.push_back(fits[j].poly.coefficient(static_cast<std::size_t>(betti)));
    if (log) {
      std::ostringstream ctx;
      ctx << "pixton g=" << dr.genus() << " d=" << d << " graph=" << canonical_key(plan.graph) << " m=";
      for (int x : plan.ms[j]) ctx << x;
      log->add({ctx.str(), betti, fits[j].poly.degree(), true, fits[j].divisible_by_r_betti, true});
    }
  }
  emit(plan, scalars, out);
}

}  // namespace

TautClass pixton_class(const DRVector& dr, int d, const SampleSpec& spec, FitLog* log) {
  require_degree(d);
  const auto plans = plan_all(dr, d);
  std::vector<TautClass> parts(plans.size(), TautClass(dr.genus(), dr.marking_count()));
  parallel_for(plans.size(), [&](std::size_t i) { fit_plan(plans[i], dr, d, spec, log, parts[i]); });
  return reduce(dr, parts);
}

TautClass pixton_graph_terms(const DRVector& dr, int d, const StableGraph& graph, const SampleSpec& spec,
                             FitLog* log) {
  require_degree(d);
  if (auto bad = validate(graph, dr.genus(), dr.marking_count()))
    throw std::invalid_argument("pixton_graph_terms: invalid graph (" + *bad + ")");
  TautClass out(dr.genus(), dr.marking_count());
  if (graph.edge_count() <= d) fit_plan(plan_graph(graph, dr, d), dr, d, spec, log, out);
  return out;
}

TautClass dr_cycle(const DRVector& dr, const SampleSpec& spec, FitLog* log) {
  if (dr.twist() != 0) throw std::invalid_argument("dr_cycle requires k = 0, got k = " + std::to_string(dr.twist()));
  const int g = dr.genus();
  return Rational(Integer(1), Integer(1) << g) * pixton_class(dr, g, spec, log);
}

TautClass lambda_expression(int g, int n, FitLog* log) {
  if (g < 1) throw std::invalid_argument("lambda_expression requires g >= 1");
  DRVector zero(g, std::vector<long>(static_cast<std::size_t>(n), 0));
  TautClass out = (g % 2 ? Rational(-1) : Rational(1)) * dr_cycle(zero, {}, log);
  for (const auto& [key, term] : out.terms())
    if (term.graph.graph.has_separating_edge())
      throw std::logic_error("lambda_expression: separating-edge term survived: " + render_term(term.graph));
  return out;
}

PolynomialityReport check_dr_polynomiality(int g, FitLog* log) {
  if (g < 1) throw std::invalid_argument("check_dr_polynomiality requires g >= 1");
  PolynomialityReport report;
  report.genus = g;
  const int fit_count = 2 * g + 1;
  std::vector<TautClass> values;
  std::map<std::string, const DecoratedGraph*> keys;
  for (long a = 0; a < fit_count + 2; ++a) {
    (a < fit_count ? report.fit_points : report.held_out).push_back(a);
    values.push_back(dr_cycle(DRVector(g, {a, -a}), {}, log));
  }
  for (const auto& v : values)
    for (const auto& [key, term] : v.terms()) keys.emplace(key, &term.graph);
  for (const auto& [key, graph] : keys) {
    std::vector<Sample> pts;
    for (int i = 0; i < fit_count; ++i) pts.push_back({Rational(report.fit_points[i]), values[i].coefficient_of_key(key)});
    RPoly p = interpolate(pts);
    for (std::size_t i = 0; i < report.held_out.size(); ++i) {
      const Rational actual = values[fit_count + i].coefficient_of_key(key);
      if (p(Rational(report.held_out[i])) != actual)
        report.failures.push_back(render_term(*graph) + ": fit predicts " + p(Rational(report.held_out[i])).str() +
                                  " at a = " + std::to_string(report.held_out[i]) + ", actual " + actual.str());
    }
    if (p.degree() > 2 * g) report.failures.push_back(render_term(*graph) + ": degree " + std::to_string(p.degree()));
    for (int i = 1; i <= p.degree(); i += 2)
      if (!p.coefficient(i).is_zero()) {
        report.failures.push_back(render_term(*graph) + ": odd coefficient of a^" + std::to_string(i));
        break;
      }
    report.fits.emplace(key, std::move(p));
  }
  report.ok = report.failures.empty();
  return report;
}

namespace {

// Genus-0 boundary algebra. A stratum is a laminar family of clusters
// (subsets of markings avoiding marking 1, of size >= 2 with complement of
// size >= 2); each edge carries psi powers on its inner and outer half.
struct SplitMonomial {
  std::vector<int> legs;                             // psi power per marking
  std::map<unsigned, std::pair<int, int>> clusters;  // cluster -> (inner, outer) psi powers

  int degree() const {
    int d = std::accumulate(legs.begin(), legs.end(), 0);
    for (const auto& [c, p] : clusters) d += 1 + p.first + p.second;
    return d;
  }
  auto key() const { return std::tie(legs, clusters); }
  friend bool operator<(const SplitMonomial& a, const SplitMonomial& b) { return a.key() < b.key(); }
};

using SplitPoly = std::map<SplitMonomial, Rational>;

bool compatible(unsigned a, unsigned b) { return (a & b) == 0 || (a & b) == a || (a & b) == b; }

void add_to(SplitPoly& p, const SplitMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

struct Generator {
  int leg = -1;          // psi_{leg+1} when >= 0
  unsigned cluster = 0;  // delta_cluster otherwise
  Rational coefficient;
};

SplitPoly times(const SplitPoly& p, const std::vector<Generator>& x, int max_degree) {
  SplitPoly out;
  for (const auto& [m, c] : p) {
    if (m.degree() + 1 > max_degree) continue;
    for (const auto& gen : x) {
      const Rational cc = c * gen.coefficient;
      if (gen.leg >= 0) {
        SplitMonomial t = m;
        ++t.legs[gen.leg];
        add_to(out, t, cc);
        continue;
      }
      auto it = m.clusters.find(gen.cluster);
      if (it != m.clusters.end()) {
        // Self-intersection: normal bundle -(psi + psi').
        SplitMonomial inner = m, outer = m;
        ++inner.clusters[gen.cluster].first;
        ++outer.clusters[gen.cluster].second;
        add_to(out, inner, -cc);
        add_to(out, outer, -cc);
        continue;
      }
      bool ok = std::all_of(m.clusters.begin(), m.clusters.end(),
                            [&](const auto& kv) { return compatible(kv.first, gen.cluster); });
      if (!ok) continue;
      SplitMonomial t = m;
      t.clusters[gen.cluster] = {0, 0};
      add_to(out, t, cc);
    }
  }
  return out;
}

DecoratedGraph tree_of(const SplitMonomial& m, int n) {
  std::vector<unsigned> cl;
  for (const auto& [c, p] : m.clusters) cl.push_back(c);
  const int nc = static_cast<int>(cl.size());
  auto vertex_of_cluster = [](int i) { return i + 1; };
  // Innermost cluster strictly containing `set` (or the root).
  auto parent = [&](unsigned set, int self) {
    int best = -1;
    for (int j = 0; j < nc; ++j)
      if (j != self && (cl[j] & set) == set && cl[j] != set &&
          (best < 0 || std::popcount(cl[j]) < std::popcount(cl[best])))
        best = j;
    return best < 0 ? 0 : vertex_of_cluster(best);
  };
  StableGraph G;
  G.add_vertex(0);
  for (int i = 0; i < nc; ++i) G.add_vertex(0);
  std::vector<std::pair<int, int>> psi_at;  // (half-edge, power)
  for (int i = 0; i < nc; ++i) {
    auto [hin, hout] = G.add_edge(vertex_of_cluster(i), parent(cl[i], i));
    const auto& p = m.clusters.at(cl[i]);
    psi_at.push_back({hin, p.first});
    psi_at.push_back({hout, p.second});
  }
  for (int i = 0; i < n; ++i) {
    int v = 0, best = -1;
    for (int j = 0; j < nc; ++j)
      if ((cl[j] >> i & 1u) && (best < 0 || std::popcount(cl[j]) < std::popcount(cl[best]))) best = j;
    if (best >= 0) v = vertex_of_cluster(best);
    int h = G.add_leg(v, i + 1);
    psi_at.push_back({h, m.legs[i]});
  }
  DecoratedGraph dg(G);
  for (auto [h, p] : psi_at) dg.psi[h] = p;
  return dg;
}

long subset_sum(const std::vector<long>& a, unsigned set) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (set >> i & 1u) s += a[i];
  return s;
}

}  // namespace

TautClass genus0_closed(const std::vector<long>& a, int d) {
  const int n = static_cast<int>(a.size());
  DRVector check(0, a);  // stability and balance
  if (n > 30) throw std::invalid_argument("genus0_closed supports at most 30 markings");
  std::vector<Generator> x;
  for (int i = 0; i < n; ++i)
    if (a[i] != 0) x.push_back({i, 0, Rational(Integer(a[i]) * a[i])});
  const unsigned full = (1u << n) - 1;
  for (unsigned c = 2; c <= full; c += 2) {  // bit 0 (marking 1) clear
    const int size = std::popcount(c);
    if (size < 2 || n - size < 2) continue;
    const long s = subset_sum(a, c);
    if (s != 0) x.push_back({-1, c, Rational(-(Integer(s) * s))});
  }

  SplitPoly power{{SplitMonomial{std::vector<int>(n, 0), {}}, Rational(1)}};
  SplitPoly total;
  for (int j = 0; j <= d; ++j) {
    if (j > 0) {
      power = times(power, x, d);
      for (auto& [m, c] : power) c /= Rational(j);
    }
    for (const auto& [m, c] : power)
      if (m.degree() == d) add_to(total, m, c);
  }
  TautClass out(0, n);
  for (const auto& [m, c] : total) out.add_term(tree_of(m, n), c);
  return out;
}

TautClass genus1_closed(const std::vector<long>& a) {
  const int n = static_cast<int>(a.size());
  DRVector check(1, a);
  TautClass out(1, n);
  for (int i = 1; i <= n; ++i) out += Rational(Integer(a[i - 1]) * a[i - 1]) * classes::psi(1, n, i);
  if (n > 30) throw std::invalid_argument("genus1_closed supports at most 30 markings");
  for (unsigned set = 0; set < (1u << n); ++set) {
    if (std::popcount(set) < 2) continue;
    const long s = subset_sum(a, set);
    if (s == 0) continue;
    std::vector<int> I;
    for (int i = 0; i < n; ++i)
      if (set >> i & 1u) I.push_back(i + 1);
    out += Rational(-(Integer(s) * s)) * classes::delta_I(n, I);
  }
  out += Rational(-1, 6) * classes::delta_0(1, n);
  return out;
}

}  // namespace drc
