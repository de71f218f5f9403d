#include "drc/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace drc {

Rational bernoulli_number(unsigned m) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  // sum_{j=0}^{i} C(i+1, j) B_j = 0
  while (table.size() <= m) {
    unsigned i = static_cast<unsigned>(table.size());
    Rational acc;
    for (unsigned j = 0; j < i; ++j) acc += Rational(binomial(i + 1, j)) * table[j];
    table.push_back(-acc / Rational(static_cast<long>(i) + 1));
  }
  return table[m];
}

Rational bernoulli_poly(unsigned m, const Rational& x) {
  // Horner in x over the coefficients C(m, j) B_j of x^(m-j).
  Rational acc;
  for (unsigned j = 0; j <= m; ++j) acc = acc * x + Rational(binomial(m, j)) * bernoulli_number(j);
  return acc;
}

}  // namespace drc
