#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drc/rational.hpp"

namespace drc {

/// Univariate polynomial in the regularization parameter r. coefficient(i)
/// multiplies r^i; trailing zeros are always trimmed.
class RPoly {
 public:
  RPoly() = default;
  explicit RPoly(std::vector<Rational> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational constant_term() const { return coefficient(0); }

  Rational operator()(const Rational& r) const;

  /// True when r^k divides the polynomial.
  bool divisible_by_r_power(unsigned k) const;
  /// Quotient by r^k; throws std::domain_error when not divisible.
  RPoly divide_by_r_power(unsigned k) const;

  RPoly& operator+=(const RPoly& o);
  RPoly& operator*=(const Rational& c);
  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator*(RPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const RPoly&, const RPoly&) = default;

  std::string str(const std::string& variable = "r") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct Sample {
  Rational r;
  Rational value;
};

/// Unique polynomial of degree < samples.size() through the samples (Newton
/// divided differences, exact). Throws std::invalid_argument on duplicate nodes.
RPoly interpolate(std::span<const Sample> samples);

}  // namespace drc
