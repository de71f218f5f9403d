#include "drc/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "drc/chiodo.hpp"
#include "drc/intersect.hpp"
#include "drc/json_io.hpp"
#include "drc/parallel.hpp"
#include "drc/pixton.hpp"

namespace drc::cli {

std::vector<long> parse_vector(const std::string& text) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("malformed vector \"" + text + "\": bad entry \"" + item + "\"");
    out.push_back(v);
  }
  if (text.back() == ',') throw std::invalid_argument("malformed vector \"" + text + "\": trailing comma");
  return out;
}

namespace {

struct Options {
  bool json = false;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  int g = -1, n = -1, k = 0, d = -1, max_edges = -1, p = -1, q = -1;
  long r = 0, scalar_a = 1;
  bool constant = false;
  std::string a, class_file, psi;
};

void print_class(const TautClass& t, const Options& o, std::ostream& out) {
  if (o.json) out << class_to_json(t).dump(2) << "\n";
  else out << t.render();
}

int report_routes(const Routes& routes, const std::string& what, std::ostream& out) {
  if (routes.agree()) {
    out << "OK " << routes.value << "\n";
    return kOk;
  }
  out << "FAIL " << what << ": " << routes.describe() << "\n";
  return kVerificationFailed;
}

std::vector<long> random_balanced(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-3, 3);
  std::vector<long> a(n);
  long sum = 0;
  for (int i = 0; i + 1 < n; ++i) sum += a[i] = dist(rng);
  if (n > 0) a[n - 1] = -sum;
  return a;
}

std::vector<long> parts_or_random(const Options& o) {
  if (!o.a.empty() || o.n < 0) return parse_vector(o.a);
  return random_balanced(o.n, o.seed);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pixton classes, double ramification cycles and Chiodo classes on moduli of stable curves", "drc"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--threads", o.threads, "Worker threads (default: all cores)");
  app.add_option("--seed", o.seed, "Seed for randomized selections");

  auto need = [](CLI::App* sub, const char* name, auto& var, const char* help) { sub->add_option(name, var, help)->required(); };

  auto* graphs = app.add_subcommand("graphs", "Enumerate stable graphs of M_{g,n}-bar");
  need(graphs, "--g", o.g, "Genus");
  need(graphs, "--n", o.n, "Number of markings");
  graphs->add_option("--max-edges", o.max_edges, "Edge bound (default: all)");

  auto* pixton = app.add_subcommand("pixton", "Pixton's class P_g^{d,k}(A), or its value at fixed r");
  need(pixton, "--g", o.g, "Genus");
  pixton->add_option("--k", o.k, "Twist k");
  need(pixton, "--a", o.a, "Parts a_1,...,a_n");
  need(pixton, "--d", o.d, "Degree");
  pixton->add_option("--r", o.r, "Fixed modulus r");

  auto* dr = app.add_subcommand("dr", "Double ramification cycle DR_g(A)");
  need(dr, "--g", o.g, "Genus");
  need(dr, "--a", o.a, "Parts a_1,...,a_n (sum zero)");

  auto* lambda = app.add_subcommand("lambda", "lambda_g as a boundary graph sum");
  need(lambda, "--g", o.g, "Genus");
  lambda->add_option("--n", o.n, "Number of markings (default 0, or 1 in genus 1)");

  auto* chiodo = app.add_subcommand("chiodo", "Chiodo pushforward at fixed r, or its rescaled constant term");
  need(chiodo, "--g", o.g, "Genus");
  chiodo->add_option("--k", o.k, "Twist k");
  need(chiodo, "--a", o.a, "Parts a_1,...,a_n");
  need(chiodo, "--d", o.d, "Degree");
  auto* ropt = chiodo->add_option("--r", o.r, "Modulus r");
  auto* copt = chiodo->add_flag("--constant", o.constant, "Constant term of r^{2d-2g+1} times the class");
  ropt->excludes(copt);
  copt->excludes(ropt);

  auto* integrate = app.add_subcommand("integrate", "Integrate a class (JSON file) against psi monomials");
  need(integrate, "--class", o.class_file, "TautClass JSON file");
  integrate->add_option("--psi", o.psi, "Exponents b_1,...,b_n (default all zero)");

  auto* verify = app.add_subcommand("verify", "Cross-checks between independent routes");
  verify->require_subcommand(1);
  auto* v_same = verify->add_subcommand("samefreeterm", "Chiodo constant term vs 2^{-d} Pixton class");
  need(v_same, "--g", o.g, "Genus");
  v_same->add_option("--k", o.k, "Twist k");
  v_same->add_option("--a", o.a, "Parts (default: random balanced vector of length --n)");
  v_same->add_option("--n", o.n, "Length of a random vector");
  need(v_same, "--d", o.d, "Degree");
  auto* v_van = verify->add_subcommand("vanishing", "Pairings of P_g^d(A), d > g, with psi monomials");
  need(v_van, "--g", o.g, "Genus");
  v_van->add_option("--a", o.a, "Parts (default: random balanced vector of length --n)");
  v_van->add_option("--n", o.n, "Length of a random vector");
  need(v_van, "--d", o.d, "Degree (> g)");
  auto* v_hodge = verify->add_subcommand("hodge-triple", "lambda_{g+1} lambda_g lambda_{g-1} on M_{g+1}-bar");
  need(v_hodge, "--g", o.g, "Genus g");
  auto* v_drab = verify->add_subcommand("dr-ab", "DR_g(a,-a) paired with lambda_g lambda_{g-1}");
  need(v_drab, "--g", o.g, "Genus");
  need(v_drab, "--a", o.scalar_a, "The part a");
  auto* v_socle = verify->add_subcommand("socle", "Socle integrals and (psi_1+psi_2)^g lambda_g lambda_{g-1}");
  need(v_socle, "--g", o.g, "Genus");
  v_socle->add_option("--p", o.p, "Power of psi_1 (prints one socle value)");
  v_socle->add_option("--q", o.q, "Power of psi_2");
  auto* v_poly = verify->add_subcommand("polynomiality", "DR_g(a,-a) coefficients are even polynomials in a");
  need(v_poly, "--g", o.g, "Genus");

  for (auto* sub : {graphs, pixton, dr, lambda, chiodo, integrate, verify}) sub->fallthrough();
  for (auto* sub : {v_same, v_van, v_hodge, v_drab, v_socle, v_poly}) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  set_thread_count(o.threads);
  try {
    if (*graphs) {
      const int max_edges = o.max_edges >= 0 ? o.max_edges : std::max(0, 3 * o.g - 3 + o.n);
      const auto list = enumerate_stable_graphs(o.g, o.n, max_edges);
      if (o.json) {
        Json arr = Json::array();
        for (const auto& G : list) arr.push_back({{"graph", graph_to_json(G)}, {"automorphisms", automorphism_order(G)}});
        out << Json{{"g", o.g}, {"n", o.n}, {"max_edges", max_edges}, {"count", list.size()}, {"graphs", arr}}.dump(2)
            << "\n";
      } else {
        out << list.size() << " graphs\n";
        for (const auto& G : list) out << "|Aut| = " << automorphism_order(G) << "  " << render_term(DecoratedGraph(G)) << "\n";
      }
      return kOk;
    }
    if (*pixton) {
      DRVector v(o.g, parse_vector(o.a), o.k);
      print_class(o.r > 0 ? pixton_fixed_r(v, o.d, o.r) : pixton_class(v, o.d), o, out);
      return kOk;
    }
    if (*dr) {
      print_class(dr_cycle(DRVector(o.g, parse_vector(o.a))), o, out);
      return kOk;
    }
    if (*lambda) {
      const int n = o.n >= 0 ? o.n : (o.g == 1 ? 1 : 0);
      print_class(lambda_expression(o.g, n), o, out);
      return kOk;
    }
    if (*chiodo) {
      if (o.constant) print_class(chiodo_constant(DRVector(o.g, parse_vector(o.a), o.k), o.d), o, out);
      else if (o.r > 0) print_class(chiodo_pushforward(DRVector::unchecked(o.g, parse_vector(o.a), o.k), o.d, o.r), o, out);
      else throw std::invalid_argument("chiodo needs --r R (R >= 1) or --constant");
      return kOk;
    }
    if (*integrate) {
      std::ifstream in(o.class_file);
      if (!in) throw std::invalid_argument("cannot read class file " + o.class_file);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("class file is not JSON: ") + e.what());
      }
      const TautClass t = class_from_json(j);
      std::vector<int> b(static_cast<std::size_t>(t.marking_count()), 0);
      if (!o.psi.empty()) {
        auto parsed = parse_vector(o.psi);
        if (static_cast<int>(parsed.size()) != t.marking_count())
          throw std::invalid_argument("--psi needs " + std::to_string(t.marking_count()) + " exponents");
        for (std::size_t i = 0; i < parsed.size(); ++i) {
          if (parsed[i] < 0) throw std::invalid_argument("--psi exponents must be non-negative");
          b[i] = static_cast<int>(parsed[i]);
        }
      }
      const Rational v = pair_with_psi(t, b);
      if (o.json) out << Json{{"value", v.str()}}.dump() << "\n";
      else out << v << "\n";
      return kOk;
    }
    if (*v_same) {
      DRVector v(o.g, parts_or_random(o), o.k);
      const auto rep = verify_samefreeterm(v, o.d);
      if (rep.equal) {
        out << "OK\n";
        print_class(rep.chiodo, o, out);
        return kOk;
      }
      out << "FAIL samefreeterm\nchiodo constant term:\n" << rep.chiodo.render() << "2^-d pixton:\n" << rep.pixton.render();
      for (const auto& line : rep.diff) out << "diff " << line << "\n";
      return kVerificationFailed;
    }
    if (*v_van) {
      DRVector v(o.g, parts_or_random(o));
      if (o.d <= o.g) throw std::invalid_argument("vanishing needs d > g");
      bool ok = true;
      for (const auto& [b, value] : vanishing_probe(v, o.d)) {
        out << "psi^(";
        for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
        out << ") " << value << "\n";
        ok = ok && value.is_zero();
      }
      out << (ok ? "OK" : "FAIL vanishing") << "\n";
      return ok ? kOk : kVerificationFailed;
    }
    if (*v_hodge) return report_routes(hodge_triple(o.g), "hodge-triple", out);
    if (*v_drab) return report_routes(dr_ab_integral(o.g, o.scalar_a), "dr-ab", out);
    if (*v_socle) {
      if (o.p >= 0 || o.q >= 0) {
        out << "OK " << socle_integral(o.g, o.p, o.q) << "\n";
        return kOk;
      }
      for (int p = 0; p <= o.g; ++p) out << "socle(" << p << "," << o.g - p << ") = " << socle_integral(o.g, p, o.g - p) << "\n";
      return report_routes(psi_sum_lambda(o.g), "socle", out);
    }
    if (*v_poly) {
      const auto rep = check_dr_polynomiality(o.g);
      for (const auto& [key, poly] : rep.fits) out << poly.str("a") << "  " << key << "\n";
      if (rep.ok) {
        out << "OK " << rep.fits.size() << " coefficients\n";
        return kOk;
      }
      for (const auto& f : rep.failures) out << "FAIL " << f << "\n";
      return kVerificationFailed;
    }
  } catch (const FitError& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace drc::cli
