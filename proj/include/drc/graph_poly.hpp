#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "drc/decorated_graph.hpp"
#include "drc/rational.hpp"

namespace drc {

/// Variables of a decoration polynomial on a fixed graph: psi_h for every
/// half-edge and kappa_m(v) for every vertex and 1 <= m <= max_kappa.
struct DecorationLayout {
  int half_edges = 0;
  int vertices = 0;
  int max_kappa = 0;

  int variable_count() const { return half_edges + vertices * max_kappa; }
  int psi(int h) const { return h; }
  int kappa(int v, int m) const { return half_edges + v * max_kappa + (m - 1); }
  int weight(int var) const { return var < half_edges ? 1 : (var - half_edges) % max_kappa + 1; }
};

/// Truncated polynomial in psi/kappa variables with rational coefficients.
class DecorationPoly {
 public:
  using Monomial = std::vector<std::uint8_t>;

  explicit DecorationPoly(DecorationLayout layout) : layout_(layout) {}
  static DecorationPoly constant(DecorationLayout layout, const Rational& c);
  static DecorationPoly variable(DecorationLayout layout, int var, const Rational& c = Rational(1));

  const DecorationLayout& layout() const { return layout_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int weighted_degree(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  DecorationPoly& operator+=(const DecorationPoly& o);
  DecorationPoly& operator*=(const Rational& c);
  /// Product with all terms of weighted degree > max_degree dropped.
  DecorationPoly multiply(const DecorationPoly& o, int max_degree) const;
  /// exp(*this) truncated at max_degree; requires zero constant term.
  DecorationPoly exp(int max_degree) const;
  DecorationPoly degree_part(int d) const;

  /// Decorations on `graph` described by a monomial.
  DecoratedGraph decorate(const StableGraph& graph, const Monomial& m) const;

 private:
  DecorationLayout layout_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace drc
