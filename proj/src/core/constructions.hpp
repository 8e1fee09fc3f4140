#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "metric_space.hpp"

namespace maglab {

CircularType cycle_type(int n);
CircularType polygon_type(int n);

FiniteMetricSpace cycle_graph(int n);
FiniteMetricSpace regular_polygon(int n);

/// Circulant space d_{|j-i|_n}. Throws TypeInvalid naming the violating pair.
FiniteMetricSpace circular_space(const CircularType& type);

/// m-point space Q_i with d(Q_i, Q_j) = d_{|j-i|_m}, 3 <= m < n.
FiniteMetricSpace restricted_polygon(const CircularType& type, int m);

/// Two-gon construction for even n >= 6. With `verify`, the result is checked
/// to be a metric with the source's row type and not isometric to the
/// circular space (MetricViolation / Internal otherwise).
FiniteMetricSpace mutant_even(const CircularType& type, bool verify = true);

/// Three-triangle mutant of the regular nonagon.
FiniteMetricSpace mutant_nonagon(bool verify = true);

/// Edge-multiset twin of circular_space(type), n >= 4.
FiniteMetricSpace isomer(const CircularType& type, bool verify = true);

/// Index of d in d(A_i, B_j) for the two-gon isomers; i and j are 1-based.
/// n = 4k+1 uses a 2k-gon A and a (2k+1)-gon B; n = 4k+3 a (2k+1)-gon and a
/// (2k+2)-gon.
int isomer_suffix_4k1(int k, int i, int j);
int isomer_suffix_4k3(int k, int i, int j);

/// Star tree with edges a, b, c, and the paths with edge lengths (a, b, c)
/// and (b, a, c), over formal symbols. The witness is attached if given.
std::array<FiniteMetricSpace, 3> fig2_family(const std::string& a = "a", const std::string& b = "b",
                                             const std::string& c = "c",
                                             std::optional<Witness> witness = std::nullopt);

struct PointConfig {
  std::vector<std::vector<Scalar>> points;
  int dimension() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
};

std::vector<std::vector<Scalar>> squared_distances(const PointConfig& p);

struct Fixture {
  std::string name;
  std::optional<PointConfig> points;
  /// Squared distances; for the coordinate-free fixture these are the
  /// squares of the given distances.
  std::vector<std::vector<Scalar>> squared;
  /// Distances, when they are known exactly.
  std::optional<FiniteMetricSpace> space;
};

const std::vector<std::string>& fixture_names();
/// Throws UnknownName.
Fixture euclidean_fixture(const std::string& name);

/// The fixture as a distance space: square roots of rational squares, or of
/// squares matching some delta_i(k)^2. Nullopt when a root is not found.
std::optional<FiniteMetricSpace> fixture_space(const Fixture& f);

struct Embedding {
  bool euclidean = false;  // Gram matrix positive semidefinite
  int dimension = -1;      // minimal embedding dimension when euclidean
  bool within(int max_dim) const { return euclidean && dimension <= max_dim; }
};

/// Exact Cayley-Menger test on a squared-distance matrix, decided through the
/// Gram matrix based at point 0.
Embedding cayley_menger_embeddable(const std::vector<std::vector<Scalar>>& squared, const Witness* witness = nullptr);

/// Bordered Cayley-Menger determinant of the points listed in `subset`.
Scalar cayley_menger_determinant(const std::vector<std::vector<Scalar>>& squared, const std::vector<int>& subset);

}  // namespace maglab
