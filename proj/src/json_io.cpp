#include "drc/json_io.hpp"

#include <stdexcept>

namespace drc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rational as_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad("coefficient must be a \"num/den\" string");
  return Rational::parse(j.get<std::string>());
}

}  // namespace

Json graph_to_json(const StableGraph& g) {
  Json vertices = Json::array(), edges = Json::array(), legs = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back({{"genus", g.genus(v)}});
  for (auto [h, hp] : g.edges()) edges.push_back({h, hp});
  for (int h = 0; h < g.half_edge_count(); ++h)
    if (g.is_leg(h)) legs.push_back({{"half_edge", h}, {"marking", g.marking(h)}});
  Json half_edges = Json::array();
  for (int h = 0; h < g.half_edge_count(); ++h) half_edges.push_back(g.vertex_of(h));
  return {{"vertices", vertices}, {"half_edges", half_edges}, {"edges", edges}, {"legs", legs}};
}

StableGraph graph_from_json(const Json& j) {
  std::vector<int> genera;
  for (const auto& v : field(j, "vertices")) genera.push_back(as_int(field(v, "genus"), "genus"));
  const auto& he = field(j, "half_edges");
  if (!he.is_array()) bad("half_edges must be an array");
  std::vector<int> vertex_of;
  for (const auto& v : he) {
    int x = as_int(v, "half_edges entry");
    if (x < 0 || x >= static_cast<int>(genera.size())) bad("half_edges entry out of range");
    vertex_of.push_back(x);
  }
  const int hc = static_cast<int>(vertex_of.size());
  std::vector<int> inv(hc, -1), marking(hc, 0);
  auto check = [&](int h) {
    if (h < 0 || h >= hc) bad("half-edge index out of range");
    if (inv[h] != -1) bad("half-edge used twice");
  };
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) bad("edge must be a pair");
    int a = as_int(e[0], "edge"), b = as_int(e[1], "edge");
    check(a);
    check(b);
    if (a == b) bad("edge joins a half-edge to itself");
    inv[a] = b;
    inv[b] = a;
  }
  for (const auto& l : field(j, "legs")) {
    int h = as_int(field(l, "half_edge"), "half_edge");
    check(h);
    inv[h] = h;
    marking[h] = as_int(field(l, "marking"), "marking");
  }
  for (int h = 0; h < hc; ++h)
    if (inv[h] == -1) bad("half-edge " + std::to_string(h) + " is neither edge nor leg");
  return StableGraph::from_parts(std::move(genera), std::move(vertex_of), std::move(inv), std::move(marking));
}

Json class_to_json(const TautClass& t) {
  Json terms = Json::array();
  for (const auto& [key, term] : t.terms()) {
    Json kappa = Json::array();
    for (const auto& k : term.graph.kappa) kappa.push_back(k);
    terms.push_back({{"graph", graph_to_json(term.graph.graph)},
                     {"psi", term.graph.psi},
                     {"kappa", kappa},
                     {"coefficient", term.coefficient.str()}});
  }
  return {{"schema", kTautClassSchema}, {"g", t.genus()}, {"n", t.marking_count()}, {"terms", terms}};
}

TautClass class_from_json(const Json& j) {
  const auto& schema = field(j, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kTautClassSchema)
    bad(std::string("schema must be \"") + kTautClassSchema + "\"");
  const int g = as_int(field(j, "g"), "g"), n = as_int(field(j, "n"), "n");
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) bad("unstable (g, n)");
  TautClass out(g, n);
  for (const auto& term : field(j, "terms")) {
    StableGraph graph = graph_from_json(field(term, "graph"));
    if (auto why = validate(graph, g, n)) bad("term graph violates " + *why);
    std::vector<int> psi;
    for (const auto& p : field(term, "psi")) psi.push_back(as_int(p, "psi exponent"));
    std::vector<std::vector<int>> kappa;
    for (const auto& k : field(term, "kappa")) {
      std::vector<int> mono;
      for (const auto& m : k) mono.push_back(as_int(m, "kappa index"));
      kappa.push_back(std::move(mono));
    }
    try {
      out.add_term(DecoratedGraph(std::move(graph), std::move(psi), std::move(kappa)), as_rational(field(term, "coefficient")));
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    } catch (const std::domain_error& e) {
      bad(e.what());
    }
  }
  return out;
}

Json rpoly_to_json(const RPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coefficients()) c.push_back(x.str());
  return {{"coefficients", c}};
}

RPoly rpoly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : field(j, "coefficients")) c.push_back(as_rational(x));
  return RPoly(std::move(c));
}

}  // namespace drc
