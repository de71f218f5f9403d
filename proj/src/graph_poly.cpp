#include "drc/graph_poly.hpp"

#include <stdexcept>

namespace drc {

DecorationPoly DecorationPoly::constant(DecorationLayout layout, const Rational& c) {
  DecorationPoly p(layout);
  p.add_term(Monomial(layout.variable_count(), 0), c);
  return p;
}

DecorationPoly DecorationPoly::variable(DecorationLayout layout, int var, const Rational& c) {
  DecorationPoly p(layout);
  Monomial m(layout.variable_count(), 0);
  m.at(var) = 1;
  p.add_term(m, c);
  return p;
}

int DecorationPoly::weighted_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * layout_.weight(static_cast<int>(i));
  return d;
}

void DecorationPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DecorationPoly& DecorationPoly::operator+=(const DecorationPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DecorationPoly& DecorationPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

DecorationPoly DecorationPoly::multiply(const DecorationPoly& o, int max_degree) const {
  DecorationPoly out(layout_);
  const std::size_t nvars = static_cast<std::size_t>(layout_.variable_count());
  for (const auto& [a, ca] : terms_) {
    const int da = weighted_degree(a);
    if (da > max_degree) continue;
    for (const auto& [b, cb] : o.terms_) {
      if (da + weighted_degree(b) > max_degree) continue;
      Monomial m(nvars);
      for (std::size_t i = 0; i < nvars; ++i) m[i] = static_cast<std::uint8_t>(a[i] + b[i]);
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

DecorationPoly DecorationPoly::exp(int max_degree) const {
  for (const auto& [m, c] : terms_)
    if (weighted_degree(m) == 0) throw std::invalid_argument("exp of a series with constant term");
  DecorationPoly result = constant(layout_, Rational(1));
  DecorationPoly power = constant(layout_, Rational(1));
  for (int j = 1; j <= max_degree; ++j) {
    power = power.multiply(*this, max_degree);
    if (power.is_zero()) break;
    DecorationPoly term = power;
    term *= Rational(Integer(1), factorial(static_cast<unsigned>(j)));
    result += term;
  }
  return result;
}

DecorationPoly DecorationPoly::degree_part(int d) const {
  DecorationPoly out(layout_);
  for (const auto& [m, c] : terms_)
    if (weighted_degree(m) == d) out.add_term(m, c);
  return out;
}

DecoratedGraph DecorationPoly::decorate(const StableGraph& graph, const Monomial& m) const {
  std::vector<int> psi(layout_.half_edges);
  for (int h = 0; h < layout_.half_edges; ++h) psi[h] = m[layout_.psi(h)];
  std::vector<std::vector<int>> kappa(layout_.vertices);
  for (int v = 0; v < layout_.vertices; ++v)
    for (int k = 1; k <= layout_.max_kappa; ++k)
      for (int i = 0; i < m[layout_.kappa(v, k)]; ++i) kappa[v].push_back(k);
  return DecoratedGraph(graph, std::move(psi), std::move(kappa));
}

}  // namespace drc
