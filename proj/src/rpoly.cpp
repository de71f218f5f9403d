#include "drc/rpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace drc {

RPoly::RPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void RPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RPoly::operator()(const Rational& r) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
  return acc;
}

bool RPoly::divisible_by_r_power(unsigned k) const {
  for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

RPoly RPoly::divide_by_r_power(unsigned k) const {
  if (!divisible_by_r_power(k)) throw std::domain_error("polynomial not divisible by r^" + std::to_string(k));
  if (coeffs_.size() <= k) return RPoly();
  return RPoly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

RPoly& RPoly::operator+=(const RPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RPoly& RPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string RPoly::str(const std::string& variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i] << ")";
    if (i > 0) os << "*" << variable << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

RPoly interpolate(std::span<const Sample> samples) {
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (samples[i].r == samples[j].r)
        throw std::invalid_argument("interpolate: duplicate node r = " + samples[i].r.str());

  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = samples[i].value;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].r - samples[i - level].r);

  // Expand the Newton form from the innermost factor outwards.
  std::vector<Rational> coeffs;
  for (std::size_t i = n; i-- > 0;) {
    // coeffs <- coeffs * (r - x_i) + dd[i]
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * samples[i].r;
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return RPoly(std::move(coeffs));
}

}  // namespace drc
