#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace maglab {

/// Points P_0..P_{n-1} with an exact distance matrix. The constructor checks
/// only the shape; metric axioms are reported by validate_metric.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::vector<std::vector<Scalar>> dist, std::string label = {},
                    std::optional<Witness> witness = std::nullopt);

  int n() const { return static_cast<int>(dist_.size()); }
  const Scalar& d(int i, int j) const { return dist_[i][j]; }
  const std::vector<std::vector<Scalar>>& matrix() const { return dist_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::optional<Witness>& witness() const { return witness_; }
  const Witness* witness_ptr() const { return witness_ ? &*witness_ : nullptr; }

  /// Largest off-diagonal entry (needs a witness for formal entries).
  Scalar max_distance() const;

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) { return a.dist_ == b.dist_; }

 private:
  std::vector<std::vector<Scalar>> dist_;
  std::string label_;
  std::optional<Witness> witness_;
};

/// min over l of |i - l n|.
int index_abs(long long i, int n);

/// All axiom violations, with 1-based point indices. A triangle violation
/// (i, j, k) means d(i,k) > d(i,j) + d(j,k).
struct MetricReport {
  std::vector<std::pair<int, int>> asymmetric;
  std::vector<int> nonzero_diagonal;
  std::vector<std::pair<int, int>> nonpositive;
  std::vector<std::array<int, 3>> triangle;
  bool ok() const { return asymmetric.empty() && nonzero_diagonal.empty() && nonpositive.empty() && triangle.empty(); }
};

/// Uses the space's own witness when `witness` is null. Throws NoWitness.
MetricReport validate_metric(const FiniteMetricSpace& x, const Witness* witness = nullptr);

/// Sorted (value, multiplicity) list; order is ScalarLess.
class EdgeMultiset {
 public:
  EdgeMultiset() = default;
  explicit EdgeMultiset(std::vector<Scalar> values);

  const std::vector<std::pair<Scalar, int>>& entries() const { return entries_; }
  int total() const;
  friend bool operator==(const EdgeMultiset& a, const EdgeMultiset& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<std::pair<Scalar, int>> entries_;
};

EdgeMultiset row_multiset(const FiniteMetricSpace& x, int i);
EdgeMultiset edge_multiset(const FiniteMetricSpace& x);

/// Common row multiset of a quasi-homogeneous space.
std::optional<EdgeMultiset> quasi_homog_type(const FiniteMetricSpace& x);

struct CircularType {
  int n = 0;
  std::vector<Scalar> d;  // d_1 .. d_{floor(n/2)}
  /// d_{|i|_n}, with d_0 = 0.
  Scalar at(long long i) const;
  friend bool operator==(const CircularType&, const CircularType&) = default;
};

/// Checks strict monotonicity and the circular triangle inequality
/// d_|i| + d_|j| >= d_|i+j|. Returns the first violating (i, j) or nullopt.
/// A monotonicity failure is reported as (i, 0) with d_i >= d_{i+1}.
std::optional<std::pair<int, int>> circular_type_violation(const CircularType& t, const Witness* witness = nullptr);

constexpr int kCircularTypeCap = 16;
constexpr int kIsometryCap = 14;

/// Relabeling search for a circulant presentation. Throws TooLarge above cap.
std::optional<CircularType> circular_type(const FiniteMetricSpace& x, int cap = kCircularTypeCap);

/// Lexicographically least permutation p with d_Y(p(i), p(j)) = d_X(i, j),
/// or nullopt. Invariant checks run first; the cap only applies when a
/// backtracking search is actually needed. Throws TooLarge.
std::optional<std::vector<int>> are_isometric(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                              int cap = kIsometryCap);

/// Assigns dense integer ids to values so that equal values share an id and
/// ids follow ScalarLess order.
std::vector<int> intern_values(const std::vector<Scalar>& values, std::vector<Scalar>* distinct = nullptr);

}  // namespace maglab
