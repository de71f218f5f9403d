#pragma once

#include <map>
#include <string>
#include <vector>

#include "drc/tautclass.hpp"
#include "drc/weightings.hpp"

namespace drc {

/// Degree-d part of Pixton's graph sum at a fixed modulus r: for every stable
/// graph with at most d edges and every k-weighting w mod r,
///   1/|Aut| * r^{-h1} * xi_*[ prod_v exp(-k^2 kappa_1(v)) prod_i exp(a_i^2 psi_i)
///                              prod_e (1 - exp(-w(h)w(h')(psi_h + psi_h'))) / (psi_h + psi_h') ].
TautClass pixton_fixed_r(const DRVector& dr, int d, long r, TreePolicy policy = {});

/// Constant term in r of pixton_fixed_r. Each graph's edge-weight sums are
/// fitted as polynomials in r (see fit_r_polynomials); every fit is recorded
/// in `log` when given.
TautClass pixton_class(const DRVector& dr, int d, const SampleSpec& spec = {}, FitLog* log = nullptr);

/// The terms of pixton_class(dr, d) supported on one graph.
TautClass pixton_graph_terms(const DRVector& dr, int d, const StableGraph& graph, const SampleSpec& spec = {},
                             FitLog* log = nullptr);

/// DR_g(A) = 2^{-g} P_g^g(A). Throws std::invalid_argument when k != 0.
TautClass dr_cycle(const DRVector& dr, const SampleSpec& spec = {}, FitLog* log = nullptr);

/// lambda_g = (-1)^g DR_g(0, ..., 0) on M_{g,n}-bar. Throws std::logic_error if
/// a term with a separating edge survives.
TautClass lambda_expression(int g, int n, FitLog* log = nullptr);

struct PolynomialityReport {
  bool ok = true;
  int genus = 0;
  std::vector<long> fit_points;  // values of a used for fitting
  std::vector<long> held_out;    // values of a checked against the fit
  std::map<std::string, RPoly> fits;  // canonical key -> coefficient as a polynomial in a
  std::vector<std::string> failures;
};

/// Fits every coefficient of dr_cycle(g, (a, -a)) as a polynomial in a over
/// a = 0..2g, checks it at a = 2g+1, 2g+2, and requires it to be even of
/// degree <= 2g.
PolynomialityReport check_dr_polynomiality(int g, FitLog* log = nullptr);

/// Degree-d part of exp[sum a_i^2 psi_i - 1/2 sum_{(I,J) ordered} a_I^2 delta_{I,J}]
/// on M_{0,n}-bar, expanded with the genus-0 boundary intersection rules.
TautClass genus0_closed(const std::vector<long>& a, int d);

/// sum a_i^2 psi_i - sum_{|I| >= 2} a_I^2 delta_I - 1/6 delta_0 on M_{1,n}-bar.
TautClass genus1_closed(const std::vector<long>& a);

}  // namespace drc
