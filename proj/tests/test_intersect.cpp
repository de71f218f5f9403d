#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "drc/intersect.hpp"
#include "drc/pixton.hpp"
#include "support.hpp"

using namespace drc;
using drc::test::q;

namespace {

// All exponent vectors of length n with entries summing to `total`.
void compositions(int n, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    compositions(n, total - x, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> all_exponents(int n, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (n == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  compositions(n, total, cur, out);
  return out;
}

TautClass kappa_class(int g, int n, std::vector<int> kappa) {
  TautClass t(g, n);
  t.add_term(DecoratedGraph(trivial_graph(g, n), std::vector<int>(n, 0), {kappa}), Rational(1));
  return t;
}

}  // namespace

TEST_CASE("correlator normalizations") {
  CHECK(witten_correlator(0, {0, 0, 0}) == q("1"));
  CHECK(witten_correlator(1, {1}) == q("1/24"));
  CHECK(witten_correlator(0, {1, 0, 0, 0}) == q("1"));
  CHECK(witten_correlator(2, {4}) == q("1/1152"));
  CHECK(witten_correlator(3, {7}) == q("1/82944"));
  CHECK(witten_correlator(1, {0}) == q("0"));
  CHECK(witten_correlator(0, {0, 0}) == q("0"));
  CHECK(witten_correlator(2, {2, 3}) == witten_correlator(2, {3, 2}));
}

TEST_CASE("genus-zero correlators are multinomials") {
  for (int n = 3; n <= 8; ++n)
    for (const auto& d : all_exponents(n, n - 3)) {
      Integer denom = 1;
      for (int x : d) denom *= factorial(static_cast<unsigned>(x));
      CHECK(witten_correlator(0, d) == Rational(factorial(static_cast<unsigned>(n - 3)), denom));
    }
}

TEST_CASE("string and dilaton equations up to dimension 6") {
  for (int g = 0; g <= 3; ++g)
    for (int n = 0; 3 * g - 3 + n <= 6; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const int dim = 3 * g - 3 + n;
      for (const auto& d : all_exponents(n, dim)) {
        // string: <tau_0 prod tau_{d_i}> = sum_j <... tau_{d_j - 1} ...>
        std::vector<int> with0 = d;
        with0.push_back(0);
        Rational s;
        for (int j = 0; j < n; ++j)
          if (d[j] > 0) {
            auto e = d;
            --e[j];
            s += witten_correlator(g, e);
          }
        CHECK(witten_correlator(g, with0) == s);
        // dilaton: <tau_1 prod tau_{d_i}> = (2g - 2 + n) <prod tau_{d_i}>
        std::vector<int> with1 = d;
        with1.push_back(1);
        CHECK(witten_correlator(g, with1) == Rational(2L * g - 2 + n) * witten_correlator(g, d));
      }
    }
}

TEST_CASE("integrate_vertex examples") {
  CHECK(integrate_vertex(1, 1, {1}, {}) == q("1/24"));
  CHECK(integrate_vertex(1, 1, {0}, {1}) == q("1/24"));
  CHECK(integrate_vertex(0, 3, {0, 0, 0}, {}) == q("1"));
  CHECK(integrate_vertex(0, 4, {0, 0, 0, 0}, {1}) == q("1"));
  CHECK(integrate_vertex(0, 5, {0, 0, 0, 0, 0}, {1, 1}) == q("5"));
  CHECK(integrate_vertex(0, 5, {0, 0, 0, 0, 0}, {2}) == q("1"));
  CHECK(integrate_vertex(1, 1, {0}, {}) == q("0"));
  CHECK(integrate_vertex(2, 0, {}, {3}) == witten_correlator(2, {4}));
}

TEST_CASE("kappa reduction agrees with forgetful pushforward") {
  // kappa_a = pi_* psi^{a+1}; pushing psi^{a+1} psi^{b+1} forward gives kappa_a kappa_b + kappa_{a+b}.
  for (int g = 0; g <= 3; ++g)
    for (int n = 0; n <= 3; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      const int dim = 3 * g - 3 + n;
      for (int a = 1; a <= dim; ++a)
        for (const auto& d : all_exponents(n, dim - a)) {
          auto e = d;
          e.push_back(a + 1);
          CHECK(integrate_vertex(g, n, d, {a}) == witten_correlator(g, e));
        }
      for (int a = 1; a <= dim; ++a)
        for (int b = a; a + b <= dim; ++b)
          for (const auto& d : all_exponents(n, dim - a - b)) {
            auto e2 = d, e1 = d;
            e2.push_back(a + 1);
            e2.push_back(b + 1);
            e1.push_back(a + b + 1);
            CHECK(integrate_vertex(g, n, d, {a, b}) == witten_correlator(g, e2) - witten_correlator(g, e1));
            CHECK(integrate_vertex(g, n, d, {b, a}) == integrate_vertex(g, n, d, {a, b}));
          }
    }
}

TEST_CASE("pair_with_psi examples") {
  TautClass loop(1, 1);
  loop.add_term(DecoratedGraph(loop_graph(1, 1)), Rational(1));
  CHECK(pair_with_psi(loop, {0}) == q("1"));
  CHECK(pair_with_psi(classes::delta_0(1, 1), {0}) == q("1/2"));
  CHECK(pair_with_psi(dr_cycle(DRVector(1, {0})), {0}) == q("-1/24"));
  CHECK(pair_with_psi(pixton_class(DRVector(0, {1, 1, -1, -1}), 1), {0, 0, 0, 0}) == q("0"));
  CHECK(pair_with_psi(classes::psi(1, 1, 1), {0}) == q("1/24"));
  CHECK(pair_with_psi(classes::fundamental(1, 1), {1}) == q("1/24"));
  CHECK_THROWS(pair_with_psi(classes::fundamental(1, 1), {0, 0}));
}

TEST_CASE("pair_with_psi is linear and symmetric") {
  const DRVector dr(1, {2, -1, -1});
  const TautClass a = pixton_class(dr, 1), b = dr_cycle(DRVector(1, {3, -1, -2}));
  const TautClass c = kappa_class(1, 3, {1});
  for (const auto& e : all_exponents(3, 2)) {
    CHECK(pair_with_psi(q("2/3") * a + q("-5") * c, e) == q("2/3") * pair_with_psi(a, e) - q("5") * pair_with_psi(c, e));
    CHECK(pair_with_psi(a + b, e) == pair_with_psi(a, e) + pair_with_psi(b, e));
  }
  // swapping markings 2 and 3 together with their exponents
  const TautClass x = dr_cycle(DRVector(1, {3, -1, -2})), y = dr_cycle(DRVector(1, {3, -2, -1}));
  for (const auto& e : all_exponents(3, 1)) {
    auto f = e;
    std::swap(f[1], f[2]);
    CHECK(pair_with_psi(x, e) == pair_with_psi(y, f));
  }
}

TEST_CASE("socle integrals") {
  CHECK(socle_integral(1, 1, 0) == q("1/24"));
  CHECK(socle_integral(1, 0, 1) == q("1/24"));
  CHECK(socle_integral(2, 1, 1) == q("1/960"));
  CHECK(socle_integral(3, 3, 0) == q("1/120960"));
  for (int g = 1; g <= 4; ++g)
    for (int p = 0; p <= g; ++p) CHECK(socle_integral(g, p, g - p) == socle_integral(g, g - p, p));
  CHECK_THROWS(socle_integral(2, 1, 0));
}

TEST_CASE("psi sum against lambda_g lambda_{g-1}") {
  CHECK(psi_sum_lambda(1).value == q("1/12"));
  CHECK(psi_sum_lambda(2).value == q("1/360"));
  // (B_6/6)/5!! with 5!! = 15
  CHECK(psi_sum_lambda(3).value == q("1/3780"));
  for (int g = 1; g <= 5; ++g) {
    const Routes r = psi_sum_lambda(g);
    INFO(r.describe());
    CHECK(r.agree());
    CHECK(r.problems.empty());
    CHECK(r.routes.size() >= 2);
  }
}

TEST_CASE("lambda_{g+1} lambda_g lambda_{g-1}") {
  CHECK(hodge_triple(1).value == q("1/5760"));
  CHECK(hodge_triple(2).value == q("1/1451520"));
  CHECK(hodge_triple(3).value == q("1/87091200"));
  for (int g = 1; g <= 3; ++g) {
    FitLog log;
    const Routes r = hodge_triple(g, &log);
    INFO(r.describe());
    CHECK(r.agree());
    CHECK(r.problems.empty());
  }
}

TEST_CASE("DR(a,-a) against lambda_g lambda_{g-1}") {
  CHECK(dr_ab_integral(1, 1).value == q("1/24"));
  CHECK(dr_ab_integral(1, 2).value == q("1/6"));
  CHECK(dr_ab_integral(1, 3).value == q("3/8"));
  CHECK(dr_ab_integral(2, 1).value == q("1/2880"));
  CHECK(dr_ab_integral(2, 2).value == q("16/2880"));
  CHECK(dr_ab_integral(2, 3).value == q("81/2880"));
  for (int g = 1; g <= 3; ++g)
    for (long a = 1; a <= 3; ++a) {
      const Routes r = dr_ab_integral(g, a);
      INFO(r.describe());
      CHECK(r.agree());
      CHECK(r.problems.empty());
    }
}

TEST_CASE("DR(a,-a) pairing is an even polynomial of degree 2g") {
  for (int g = 1; g <= 3; ++g) {
    std::vector<Sample> pts;
    for (long a = 0; a <= 2 * g; ++a) pts.push_back({Rational(a), dr_ab_integral(g, a).value});
    const RPoly p = interpolate(pts);
    CHECK(p.degree() == 2 * g);
    for (int i = 1; i <= p.degree(); i += 2) CHECK(p.coefficients()[i].is_zero());
    for (long a : {2L * g + 1, 2L * g + 2}) CHECK(p(Rational(a)) == dr_ab_integral(g, a).value);
    CHECK(dr_ab_integral(g, -2).value == dr_ab_integral(g, 2).value);
  }
}

TEST_CASE("psi_monomials enumerates compositions") {
  CHECK(psi_monomials(3, 2).size() == 6);
  CHECK(psi_monomials(1, 4) == std::vector<std::vector<int>>{{4}});
  CHECK(psi_monomials(2, 0).size() == 1);
}

TEST_CASE("vanishing probes") {
  struct Probe {
    DRVector dr;
    int d;
  };
  for (const auto& [dr, d] : std::vector<Probe>{{DRVector(0, {1, 1, -1, -1}), 1},
                                                {DRVector(1, {1, -1}), 2},
                                                {DRVector(2, {0}), 3},
                                                {DRVector(1, {2, -2}), 2},
                                                {DRVector(0, {2, 1, -1, -2}), 1}}) {
    const auto results = vanishing_probe(dr, d);
    const int dim = 3 * dr.genus() - 3 + dr.marking_count();
    CHECK(results.size() == psi_monomials(dr.marking_count(), dim - d).size());
    for (const auto& r : results) CHECK(r.value.is_zero());
  }
  // d <= g gives honest non-zero pairings, so the probe is not vacuous
  const auto control = vanishing_probe(DRVector(1, {2, -2}), 1, {{1, 0}});
  REQUIRE(control.size() == 1);
  CHECK(control[0].value == q("1/4"));
}

TEST_CASE("DR(a,-a) against the top psi power") {
  // [z^2g] S(az)/S(z) with S(z) = sinh(z/2)/(z/2)
  for (long a = 1; a <= 4; ++a)
    CHECK(pair_with_psi(dr_cycle(DRVector(1, {a, -a})), {1, 0}) == Rational(a * a - 1, 24));
  const auto g2 = [](long a) {
    const Rational x(a * a);
    return x * x / Rational(1920) - x / Rational(576) + Rational(1, 576) - Rational(1, 1920);
  };
  for (long a = 1; a <= 2; ++a) CHECK(pair_with_psi(dr_cycle(DRVector(2, {a, -a})), {3, 0}) == g2(a));
}
