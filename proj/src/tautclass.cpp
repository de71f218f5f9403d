#include "drc/tautclass.hpp"

#include <sstream>
#include <stdexcept>

namespace drc {

void TautClass::require_same_ambient(const TautClass& o) const {
  if (g_ != o.g_ || n_ != o.n_)
    throw std::invalid_argument("ambient mismatch: M_{" + std::to_string(g_) + "," + std::to_string(n_) +
                                "} vs M_{" + std::to_string(o.g_) + "," + std::to_string(o.n_) + "}");
}

namespace {

// A vertex whose psi/kappa degree exceeds dim M_{g(v),n(v)} makes the term zero.
bool exceeds_vertex_dimension(const DecoratedGraph& dg) {
  const auto& G = dg.graph;
  for (int v = 0; v < G.vertex_count(); ++v) {
    int deg = 0;
    for (int h : G.half_edges_at(v)) deg += dg.psi[h];
    for (int m : dg.kappa[v]) deg += m;
    if (deg > 3 * G.genus(v) - 3 + G.valence(v)) return true;
  }
  return false;
}

void check_term(const DecoratedGraph& dg, int g, int n) {
  if (auto why = validate(dg.graph, g, n)) throw std::invalid_argument("term graph violates " + *why);
  if (dg.psi.size() != static_cast<std::size_t>(dg.graph.half_edge_count()) ||
      dg.kappa.size() != static_cast<std::size_t>(dg.graph.vertex_count()))
    throw std::invalid_argument("decorations do not match the graph");
  for (int e : dg.psi)
    if (e < 0) throw std::invalid_argument("negative psi exponent");
  for (const auto& mono : dg.kappa)
    for (int m : mono)
      if (m < 1) throw std::invalid_argument("kappa index must be positive");
}

}  // namespace

void TautClass::add_term(const DecoratedGraph& dg, const Rational& c) {
  if (c.is_zero()) return;
  check_term(dg, g_, n_);
  if (exceeds_vertex_dimension(dg)) return;
  auto canon = canonicalize(dg);
  auto it = terms_.find(canon.key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(canon.key), Term{std::move(canon.representative), c});
    return;
  }
  it->second.coefficient += c;
  if (it->second.coefficient.is_zero()) terms_.erase(it);
}

void TautClass::merge(const TautClass& other) {
  require_same_ambient(other);
  for (const auto& [key, term] : other.terms_) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, term);
      continue;
    }
    it->second.coefficient += term.coefficient;
    if (it->second.coefficient.is_zero()) terms_.erase(it);
  }
}

Rational TautClass::coefficient(const DecoratedGraph& dg) const { return coefficient_of_key(canonicalize(dg).key); }

Rational TautClass::coefficient_of_key(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational() : it->second.coefficient;
}

TautClass TautClass::degree_part(int d) const {
  TautClass out(g_, n_);
  for (const auto& [key, term] : terms_)
    if (term.graph.degree() == d) out.terms_.emplace(key, term);
  return out;
}

std::set<int> TautClass::degrees() const {
  std::set<int> out;
  for (const auto& [key, term] : terms_) out.insert(term.graph.degree());
  return out;
}

TautClass& TautClass::operator+=(const TautClass& o) {
  merge(o);
  return *this;
}

TautClass& TautClass::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, term] : terms_) term.coefficient *= c;
  return *this;
}

bool operator==(const TautClass& a, const TautClass& b) {
  if (a.g_ != b.g_ || a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [key, term] : a.terms_) {
    if (key != it->first || term.coefficient != it->second.coefficient) return false;
    ++it;
  }
  return true;
}

std::string render_term(const DecoratedGraph& dg) {
  const auto& G = dg.graph;
  std::ostringstream os;
  os << "G[";
  for (int v = 0; v < G.vertex_count(); ++v) os << (v ? " " : "") << "v" << v << ":g" << G.genus(v);
  for (auto [h, hp] : G.edges()) {
    int a = G.vertex_of(h), b = G.vertex_of(hp);
    os << "; " << (a == b ? "loop" : "edge") << "(h" << h << "@v" << a << ",h" << hp << "@v" << b << ")";
  }
  for (int h = 0; h < G.half_edge_count(); ++h)
    if (G.is_leg(h)) os << "; leg" << G.marking(h) << "=h" << h << "@v" << G.vertex_of(h);
  os << "] psi{";
  bool first = true;
  for (int h = 0; h < G.half_edge_count(); ++h)
    if (dg.psi[h] > 0) {
      os << (first ? "" : " ") << "h" << h << "^" << dg.psi[h];
      first = false;
    }
  os << "} kappa{";
  first = true;
  for (int v = 0; v < G.vertex_count(); ++v)
    if (!dg.kappa[v].empty()) {
      os << (first ? "" : " ") << "v" << v << ":";
      for (std::size_t i = 0; i < dg.kappa[v].size(); ++i) os << (i ? "*" : "") << "k" << dg.kappa[v][i];
      first = false;
    }
  os << "}";
  return os.str();
}

std::string TautClass::render() const {
  std::ostringstream os;
  if (terms_.empty()) return "0\n";
  for (const auto& [key, term] : terms_) os << term.coefficient << " * " << render_term(term.graph) << "\n";
  return os.str();
}

TautClass add(const TautClass& a, const TautClass& b) { return a + b; }
TautClass scale(const Rational& c, const TautClass& t) { return c * t; }
TautClass degree_part(const TautClass& t, int d) { return t.degree_part(d); }
bool formal_equal(const TautClass& a, const TautClass& b) {
  if (a.genus() != b.genus() || a.marking_count() != b.marking_count())
    throw std::invalid_argument("formal_equal: ambient mismatch");
  return a == b;
}

std::vector<std::string> formal_diff(const TautClass& a, const TautClass& b) {
  std::vector<std::string> out;
  auto report = [&](const std::string& key, const TautClass::Term* t, const Rational& x, const Rational& y) {
    out.push_back(render_term(t->graph) + ": " + x.str() + " vs " + y.str());
    (void)key;
  };
  for (const auto& [key, term] : a.terms()) {
    Rational other = b.coefficient_of_key(key);
    if (other != term.coefficient) report(key, &term, term.coefficient, other);
  }
  for (const auto& [key, term] : b.terms())
    if (!a.terms().count(key)) report(key, &term, Rational(), term.coefficient);
  return out;
}

namespace classes {

TautClass fundamental(int g, int n) {
  TautClass t(g, n);
  t.add_term(DecoratedGraph(trivial_graph(g, n)), Rational(1));
  return t;
}

TautClass psi(int g, int n, int marking) {
  DecoratedGraph dg(trivial_graph(g, n));
  dg.psi[dg.graph.leg_half_edge(marking)] = 1;
  TautClass t(g, n);
  t.add_term(dg, Rational(1));
  return t;
}

TautClass delta_0(int g, int n) {
  TautClass t(g, n);
  t.add_term(DecoratedGraph(loop_graph(g, n)), Rational(1, 2));
  return t;
}

TautClass delta_I(int n, const std::vector<int>& markings) {
  StableGraph G;
  int rational = G.add_vertex(0), elliptic = G.add_vertex(1);
  G.add_edge(rational, elliptic);
  std::vector<bool> in(n + 1, false);
  for (int i : markings) in.at(i) = true;
  for (int i = 1; i <= n; ++i) G.add_leg(in[i] ? rational : elliptic, i);
  if (auto bad = validate(G, 1, n)) throw std::invalid_argument("delta_I: " + *bad);
  TautClass t(1, n);
  t.add_term(DecoratedGraph(G), Rational(1));
  return t;
}

TautClass delta_IJ(int n, const std::vector<int>& markings_I) {
  StableGraph G;
  int a = G.add_vertex(0), b = G.add_vertex(0);
  G.add_edge(a, b);
  std::vector<bool> in(n + 1, false);
  for (int i : markings_I) in.at(i) = true;
  for (int i = 1; i <= n; ++i) G.add_leg(in[i] ? a : b, i);
  if (auto bad = validate(G, 0, n)) throw std::invalid_argument("delta_IJ: " + *bad);
  TautClass t(0, n);
  t.add_term(DecoratedGraph(G), Rational(1));
  return t;
}

TautClass alpha() {
  StableGraph G;
  G.add_vertex(0);
  G.add_edge(0, 0);
  G.add_edge(0, 0);
  TautClass t(2, 0);
  t.add_term(DecoratedGraph(G), Rational(1, 8));
  return t;
}

TautClass beta() {
  DecoratedGraph dg(loop_graph(2, 0));
  dg.psi[0] = 1;
  TautClass t(2, 0);
  t.add_term(dg, Rational(1));
  return t;
}

}  // namespace classes

}  // namespace drc
