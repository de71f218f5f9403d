#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "drc/decorated_graph.hpp"
#include "drc/rational.hpp"

namespace drc {

/// Formal rational combination of decorated stable graphs on M_{g,n}-bar.
///
/// A term with graph G and decoration y stands for the pushforward
/// xi_{G*}[y]; automorphism factors live in the coefficient. Equality of two
/// classes (operator==, formal_equal) compares these formal sums term by
/// term. This is strictly finer than equality in the tautological ring:
/// classes related by tautological relations (for example psi_1 and its
/// boundary expression on M_{0,4}-bar) compare unequal.
class TautClass {
 public:
  struct Term {
    DecoratedGraph graph;  // canonical representative
    Rational coefficient;
  };

  TautClass(int g, int n) : g_(g), n_(n) {}

  int genus() const { return g_; }
  int marking_count() const { return n_; }
  const std::map<std::string, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Accumulator entry point: canonicalizes and merges. Terms whose
  /// decoration degree at some vertex exceeds the dimension of that vertex's
  /// moduli space are zero classes and are dropped. Throws
  /// std::invalid_argument when the graph is not a stable graph of the
  /// ambient (g, n) or the decorations do not fit it.
  void add_term(const DecoratedGraph& dg, const Rational& c);
  /// Merge of accumulators; associative and commutative.
  void merge(const TautClass& other);

  Rational coefficient(const DecoratedGraph& dg) const;
  Rational coefficient_of_key(const std::string& key) const;

  TautClass degree_part(int d) const;
  std::set<int> degrees() const;

  TautClass& operator+=(const TautClass& o);
  TautClass& operator*=(const Rational& c);
  friend TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
  friend TautClass operator*(const Rational& c, TautClass a) { return a *= c; }
  TautClass operator-() const { return Rational(-1) * *this; }
  friend TautClass operator-(TautClass a, const TautClass& b) { return a += -b; }
  friend bool operator==(const TautClass& a, const TautClass& b);

  /// One line per term, e.g. `-1/24 * G[v0:g0; e0(v0^0,v0^0)] psi{} kappa{}`.
  std::string render() const;

 private:
  void require_same_ambient(const TautClass& o) const;
  int g_;
  int n_;
  std::map<std::string, Term> terms_;
};

TautClass add(const TautClass& a, const TautClass& b);
TautClass scale(const Rational& c, const TautClass& t);
TautClass degree_part(const TautClass& t, int d);
bool formal_equal(const TautClass& a, const TautClass& b);

/// Term-by-term differences "key: lhs vs rhs"; empty when formally equal.
std::vector<std::string> formal_diff(const TautClass& a, const TautClass& b);

std::string render_term(const DecoratedGraph& dg);

/// Named classes with the usual normalizations.
namespace classes {
/// 1 * [trivial graph].
TautClass fundamental(int g, int n);
/// psi_i on the trivial graph.
TautClass psi(int g, int n, int marking);
/// delta_0 = 1/2 xi_*[genus g-1 vertex with a loop].
TautClass delta_0(int g, int n);
/// Genus-1 delta_I: rational component with markings I, elliptic with the rest.
TautClass delta_I(int n, const std::vector<int>& markings);
/// Genus-0 delta_{I,J}: two genus-0 vertices with markings I and J.
TautClass delta_IJ(int n, const std::vector<int>& markings_I);
/// alpha = 1/8 xi_*[genus-0 vertex with two loops] on M_2-bar.
TautClass alpha();
/// beta = xi_*[psi on one branch of a loop at a genus-1 vertex] on M_2-bar.
TautClass beta();
}  // namespace classes

}  // namespace drc
