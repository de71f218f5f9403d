#pragma once

#include <functional>
#include <string>
#include <vector>

#include "drc/tautclass.hpp"
#include "drc/weightings.hpp"

namespace drc {

/// Bernoulli polynomial evaluator B_m(x); replaceable so tests can perturb it.
using BernoulliFn = std::function<Rational(unsigned m, const Rational& x)>;

struct ChiodoOptions {
  BernoulliFn bernoulli;  // empty: bernoulli_poly
  TreePolicy policy{};
  int truncation = -1;  // total degree at which the series are cut; -1 or < d: d
};

/// Degree-d part of the pushforward of c(-R pi_* L) from the moduli of r-th
/// roots, as a graph sum over stable graphs with at most d edges and their
/// k-weightings mod r. Parts a_i are reduced into [0, r) before entering the
/// Bernoulli polynomials. Throws std::invalid_argument ("no r-th roots exist")
/// unless k(2g-2+n) = sum a_i mod r.
TautClass chiodo_pushforward(const DRVector& dr, int d, long r, const ChiodoOptions& options = {});

/// Constant term in r of r^{2d-2g+1} chiodo_pushforward, fitted coefficient by
/// coefficient. Requires sum a_i = k(2g-2+n) exactly so that every r is
/// admissible.
TautClass chiodo_constant(const DRVector& dr, int d, const SampleSpec& spec = {}, FitLog* log = nullptr,
                          const ChiodoOptions& options = {});

struct SameFreeTermReport {
  bool equal = false;
  TautClass chiodo;  // chiodo_constant
  TautClass pixton;  // 2^{-d} pixton_class
  std::vector<std::string> diff;
};

/// Compares chiodo_constant(dr, d) with 2^{-d} pixton_class(dr, d) formally.
SameFreeTermReport verify_samefreeterm(const DRVector& dr, int d, const SampleSpec& spec = {},
                                       FitLog* log = nullptr, const ChiodoOptions& options = {});

}  // namespace drc
