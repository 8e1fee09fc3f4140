#pragma once

#include <array>
#include <set>
#include <vector>

#include "scalar.hpp"

namespace maglab {

using Triple = std::array<int, 3>;

/// The symmetric sin^2 expression at theta = pi/n. Throws OutOfRange.
Scalar F_n(int n, int i, int j, int k);

constexpr int kFsolveCap = 60;

struct FnSolutionSet {
  int n = 0;
  std::vector<Triple> solutions;  // i <= j <= k, sorted
};

/// Exact zero test over all 1 <= i <= j <= k <= floor(n/2).
FnSolutionSet enumerate_solutions(int n, int cap = kFsolveCap);

/// Known solutions: (n/3-1, n/3, n/3+1) for multiples of 3, (1,1,2) at n = 6,
/// (n/6-1, n/6, n/6) and (n/6, n/6, n/6+1) for multiples of 6 from 12 on,
/// and (8,10,11) at n = 24.
std::vector<Triple> expected_solutions(int n);

struct SolutionDiff {
  std::vector<Triple> missing;     // expected, not found
  std::vector<Triple> unexpected;  // found, not expected
  /// Missing is always a failure; unexpected only where the list is
  /// claimed complete (6 <= n <= 30).
  bool ok(int n) const { return missing.empty() && (unexpected.empty() || n < 6 || n > 30); }
};

SolutionDiff diff_solutions(const FnSolutionSet& s);

/// Point P with PA = delta_i, PB = delta_j, PC = delta_k for the unit
/// triangle B = (0,0), C = (1,0), A = (1/2, sqrt3/2). The y coordinate is
/// exact: sqrt3 * y = |PB|^2-style identity gives y = R / sqrt3.
struct TrianglePoint {
  Scalar x;
  Scalar y;
  Scalar y_squared;
  int y_sign = 0;
  Triple dist_indices{};  // (i, j, k)
};

/// Every point whose distances to A, B, C lie in {delta_a : a in allowed}.
std::vector<TrianglePoint> triangle_points(int n, const std::set<int>& allowed);

/// The triangle vertices A, B, C as TrianglePoints with empty indices.
std::vector<TrianglePoint> triangle_vertices();

Scalar point_pair_distance_squared(const TrianglePoint& p, const TrianglePoint& q);

}  // namespace maglab
