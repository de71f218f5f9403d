#pragma once

#include <string>
#include <vector>

#include "drc/tautclass.hpp"
#include "drc/weightings.hpp"

namespace drc {

/// <tau_{d_1} ... tau_{d_n}>_g, zero unless sum d_i = 3g - 3 + n and the
/// space is stable. Memoized; safe to call concurrently.
Rational witten_correlator(int g, std::vector<int> exponents);

/// Integral over M_{g,n}-bar of prod psi_i^{psi[i]} prod_j kappa_{kappa[j]}.
Rational integrate_vertex(int g, int n, const std::vector<int>& psi, std::vector<int> kappa);

/// Integral of T * prod psi_i^{b_i}. Terms are pushforwards, so each term
/// contributes coefficient * prod over vertices of integrate_vertex.
Rational pair_with_psi(const TautClass& t, const std::vector<int>& b);

struct ProbeResult {
  std::vector<int> exponents;
  Rational value;
};

/// Pairings of pixton_class(dr, d) with psi monomials of complementary degree.
/// An empty `exponent_sets` means all of them.
std::vector<ProbeResult> vanishing_probe(const DRVector& dr, int d, std::vector<std::vector<int>> exponent_sets = {},
                                         FitLog* log = nullptr);

/// All psi exponent vectors of length n with the given sum.
std::vector<std::vector<int>> psi_monomials(int n, int degree);

/// Integral of psi_1^p psi_2^q lambda_g lambda_{g-1} over M_{g,2}-bar.
Rational socle_integral(int g, int p, int q);

/// Result of an operation evaluated along independent routes.
struct Routes {
  Rational value;
  std::vector<std::pair<std::string, Rational>> routes;
  std::vector<std::string> problems;  // side conditions that failed
  bool agree() const;
  std::string describe() const;
};

/// Integral of (psi_1 + psi_2)^g lambda_g lambda_{g-1} over M_{g,2}-bar.
Routes psi_sum_lambda(int g);
/// Integral of lambda_{g+1} lambda_g lambda_{g-1} over M_{g+1}-bar.
Routes hodge_triple(int g, FitLog* log = nullptr);
/// Integral of DR_g(a, -a) lambda_g lambda_{g-1} over M_{g,2}-bar.
Routes dr_ab_integral(int g, long a, FitLog* log = nullptr);

}  // namespace drc
