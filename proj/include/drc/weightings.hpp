#pragma once

#include <functional>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "drc/rational.hpp"
#include "drc/rpoly.hpp"
#include "drc/stable_graph.hpp"

namespace drc {

/// k-twisted double ramification data: sum a_i = k(2g - 2 + n).
class DRVector {
 public:
  /// Throws std::invalid_argument when unstable or unbalanced.
  DRVector(int g, std::vector<long> parts, int k = 0);
  /// No balance check; for Chiodo-style data where only a congruence holds.
  static DRVector unchecked(int g, std::vector<long> parts, int k);

  int genus() const { return g_; }
  int twist() const { return k_; }
  int marking_count() const { return static_cast<int>(parts_.size()); }
  const std::vector<long>& parts() const { return parts_; }
  long part(int marking) const { return parts_[marking - 1]; }
  /// k(2g - 2 + n) - sum a_i; zero for valid data.
  long imbalance() const;

  /// Positive parts (mu) and negated negative parts (nu).
  std::vector<long> mu() const;
  std::vector<long> nu() const;
  /// |mu| = |nu| for untwisted data.
  long degree() const;

 private:
  DRVector() = default;
  int g_ = 0;
  int k_ = 0;
  std::vector<long> parts_;
};

struct Weighting {
  std::vector<long> values;  // per half-edge, in [0, r)
  long modulus = 1;
};

/// Choice of spanning tree: BFS from `root`, scanning edges in reverse order
/// when `reverse_edges` is set.
struct TreePolicy {
  int root = 0;
  bool reverse_edges = false;
};

/// Enumerates k-weightings mod r by fixing the h^1 non-tree edges freely and
/// solving the tree edges leaf-to-root.
class WeightingSolver {
 public:
  WeightingSolver(const StableGraph& graph, TreePolicy policy = {});

  /// Calls visit(values) for each weighting; returns the number visited.
  long for_each(long r, const DRVector& dr, const std::function<void(const std::vector<long>&)>& visit) const;

  const StableGraph& graph() const { return graph_; }

 private:
  StableGraph graph_;
  std::vector<std::pair<int, int>> free_edges_;      // (h, h'), w(h) free
  std::vector<int> solve_order_;                      // non-root vertices, leaves first
  std::vector<std::pair<int, int>> parent_edge_;      // per vertex: (half at v, half at parent)
  int root_ = 0;
};

std::vector<Weighting> enumerate_weightings(const StableGraph& graph, long r, const DRVector& dr,
                                            TreePolicy policy = {});

/// Polynomial in half-edge weight variables: sum of coeff * prod_h w(h)^exps[h].
struct HalfEdgeMonomial {
  std::vector<int> exponents;
  Rational coefficient;
};
using HalfEdgePoly = std::vector<HalfEdgeMonomial>;

int total_degree(const HalfEdgePoly& q);

/// F(r) = sum over k-weightings mod r of Q(w), exact.
Rational lattice_sum(const StableGraph& graph, long r, const DRVector& dr, const HalfEdgePoly& q,
                     TreePolicy policy = {});
/// Several sums sharing one pass over the weightings.
std::vector<Rational> lattice_sums(const StableGraph& graph, long r, const DRVector& dr,
                                   std::span<const HalfEdgePoly> qs, TreePolicy policy = {});

struct SampleSpec {
  long r_min = 0;           // 0: max(2, sum|a_i| + |k|(2g-2+n)) + 1
  int degree_bound = -1;    // -1: deg(Q) + h^1
  int verification_nodes = 2;
  bool retry_on_mismatch = true;
  TreePolicy policy{};
};

long default_r_min(const DRVector& dr);

struct FitResult {
  RPoly poly;
  bool divisible_by_r_betti = false;
  int betti = 0;
  int degree_bound = 0;
  std::vector<long> nodes;  // interpolation nodes followed by verification nodes
};

/// Raised when verification nodes disagree with the fitted polynomial even
/// after one retry with doubled sample count.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FitResult fit_r_polynomial(const StableGraph& graph, const DRVector& dr, const HalfEdgePoly& q,
                           const SampleSpec& spec = {});
std::vector<FitResult> fit_r_polynomials(const StableGraph& graph, const DRVector& dr,
                                         std::span<const HalfEdgePoly> qs, const SampleSpec& spec = {});

/// Record of every certified fit, for the divisibility sweep.
struct FitRecord {
  std::string context;
  int betti = 0;
  int degree = 0;
  bool divisibility_checked = true;
  bool divisible = true;
  bool verified = true;
};

class FitLog {
 public:
  void add(FitRecord rec);
  std::vector<FitRecord> records() const;
  std::size_t failures() const;

 private:
  mutable std::mutex mutex_;
  std::vector<FitRecord> records_;
};

}  // namespace drc
