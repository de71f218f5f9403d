#include <sstream>
#include <stdexcept>

#include "drc/bernoulli.hpp"
#include "drc/intersect.hpp"
#include "drc/pixton.hpp"

namespace drc {

namespace {

Rational sign(int e) { return e % 2 ? Rational(-1) : Rational(1); }

void require_genus(int g, const char* what) {
  if (g < 1) throw std::invalid_argument(std::string(what) + " requires g >= 1");
}

// int psi_1^p psi_2^q lambda_g lambda_{g-1} summed against the trivial-graph
// terms of a class on M_{g,2}-bar.
Rational socle_pairing(const TautClass& t, int g) {
  Rational total;
  for (const auto& [key, term] : t.terms()) {
    const auto& G = term.graph.graph;
    if (G.vertex_count() != 1 || G.edge_count() != 0 || !term.graph.kappa[0].empty()) continue;
    const int p = term.graph.psi[G.leg_half_edge(1)], q = term.graph.psi[G.leg_half_edge(2)];
    if (p + q == g) total += term.coefficient * socle_integral(g, p, q);
  }
  return total;
}

}  // namespace

Rational socle_integral(int g, int p, int q) {
  require_genus(g, "socle_integral");
  if (p < 0 || q < 0 || p + q != g)
    throw std::invalid_argument("socle_integral requires p + q = g with p, q >= 0");
  Rational den(Integer(1) << (2 * g));
  den *= Rational(g);
  den *= Rational(double_factorial_odd(p) * double_factorial_odd(q));
  return sign(g + 1) * bernoulli_number(2 * g) / den;
}

bool Routes::agree() const {
  if (!problems.empty()) return false;
  for (const auto& [name, v] : routes)
    if (v != value) return false;
  return true;
}

std::string Routes::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < routes.size(); ++i) os << (i ? ", " : "") << routes[i].first << " = " << routes[i].second;
  for (const auto& p : problems) os << "; " << p;
  return os.str();
}

Routes psi_sum_lambda(int g) {
  require_genus(g, "psi_sum_lambda");
  const Rational b = bernoulli_number(2 * g);
  Rational binomial_route;
  Rational even_sum;
  for (int p = 0; p <= g; ++p) {
    binomial_route += Rational(binomial(g, p)) * socle_integral(g, p, g - p);
    even_sum += Rational(Integer(1) << g) / Rational(factorial(2 * p) * factorial(2 * (g - p)));
  }
  const Rational closed = sign(g + 1) * b / Rational(2 * g) / Rational(double_factorial_odd(g));
  // The socle expansion collapsed through the even-binomial identity.
  const Rational identity_rhs = Rational(Integer(1) << (3 * g - 1)) / Rational(factorial(2 * g));
  const Rational collapsed =
      sign(g + 1) * b / Rational(g) * Rational(factorial(g)) / Rational(Integer(1) << (2 * g)) * identity_rhs;
  Routes out{closed, {{"closed", closed}, {"socle", binomial_route}, {"even-binomial", collapsed}}, {}};
  if (even_sum != identity_rhs)
    out.problems.push_back("even-binomial sum " + even_sum.str() + " != " + identity_rhs.str());
  return out;
}

Routes hodge_triple(int g, FitLog* log) {
  require_genus(g, "hodge_triple");
  const Rational b2g = bernoulli_number(2 * g), b2g2 = bernoulli_number(2 * g + 2);
  const Rational closed =
      Rational(-1, 2) / Rational(factorial(2 * g)) * (b2g / Rational(2 * g)) * (b2g2 / Rational(2 * g + 2));
  const Rational lemma = psi_sum_lambda(g).value;

  // r-free term of (-1)^g / (2r) sum_{a<r} a^{2g+2} / (2^{g+1}(g+1)!) times the lemma.
  const StableGraph loop = loop_graph(g + 1, 0);
  const DRVector empty(g + 1, {});
  HalfEdgeMonomial q{std::vector<int>(loop.half_edge_count(), 0), Rational(1)};
  q.exponents[loop.edges()[0].first] = 2 * g + 2;
  const FitResult fit = fit_r_polynomial(loop, empty, HalfEdgePoly{q});
  if (log)
    log->add({"hodge-triple g=" + std::to_string(g), 1, fit.poly.degree(), true, fit.divisible_by_r_betti, true});
  const Rational lattice = sign(g) * fit.poly.coefficient(1) / Rational(2) /
                           Rational((Integer(1) << (g + 1)) * factorial(g + 1)) * lemma;

  // The loop-graph terms of lambda_{g+1} from the graph sum, paired through
  // the socle formula (lambda_g lambda_{g-1} on the genus-g vertex).
  const TautClass terms = sign(g + 1) * Rational(Integer(1), Integer(1) << (g + 1)) *
                          pixton_graph_terms(empty, g + 1, loop, {}, log);
  Rational engine;
  for (const auto& [key, term] : terms.terms()) {
    const auto& G = term.graph.graph;
    auto [h, hp] = G.edges()[0];
    if (!term.graph.kappa[0].empty()) continue;
    const int p = term.graph.psi[h], s = term.graph.psi[hp];
    // The two halves become markings 1 and 2 of M_{g,2}-bar.
    engine += term.coefficient * socle_integral(g, p, s);
  }
  Routes out{closed, {{"closed", closed}, {"lattice", lattice}, {"graph-sum", engine}}, {}};
  if (!fit.divisible_by_r_betti) out.problems.push_back("power sum fit not divisible by r");
  return out;
}

Routes dr_ab_integral(int g, long a, FitLog* log) {
  require_genus(g, "dr_ab_integral");
  const Rational a2g = pow(Rational(a), 2 * g);
  const Rational closed = sign(g + 1) * a2g / Rational(factorial(2 * g)) * bernoulli_number(2 * g) / Rational(2 * g);
  const Rational single =
      a2g / Rational((Integer(1) << g) * factorial(g)) * psi_sum_lambda(g).value;

  const TautClass dr = dr_cycle(DRVector(g, {a, -a}), {}, log);
  Routes out{closed, {{"closed", closed}, {"single-graph", single}, {"graph-sum", socle_pairing(dr, g)}}, {}};
  // lambda_g lambda_{g-1} also sees the rational-tails graph (genus-g vertex
  // joined to a genus-0 vertex carrying both markings); its terms must vanish.
  for (const auto& [key, term] : dr.terms()) {
    const auto& G = term.graph.graph;
    if (G.vertex_count() == 2 && G.edge_count() == 1 && (G.genus(0) == g || G.genus(1) == g))
      out.problems.push_back("rational-tails term present: " + render_term(term.graph));
  }
  return out;
}

}  // namespace drc
