#pragma once

#include "drc/rational.hpp"

namespace drc {

/// B_m from t/(e^t - 1), so B_1 = -1/2. Memoized and thread-safe.
Rational bernoulli_number(unsigned m);

/// B_m(x) = sum_j C(m, j) B_j x^(m - j).
Rational bernoulli_poly(unsigned m, const Rational& x);

}  // namespace drc
