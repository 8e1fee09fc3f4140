#pragma once

#include <string>
#include <vector>

#include "genpoly.hpp"
#include "metric_space.hpp"

namespace maglab {

using SimilarityMatrix = std::vector<std::vector<GenPolynomial>>;

/// Entry (i, j) is q^{d(P_i, P_j)}.
SimilarityMatrix similarity_matrix(const FiniteMetricSpace& x);

constexpr int kSolverCap = 12;

enum class SolveMethod { Elimination, ConstantWeighting };

/// Weighting w_i = weights[i] / det, with z_X(q) w = 1.
struct FormalMagnitude {
  GenRational value;
  GenPolynomial det;
  std::vector<GenPolynomial> weights;
  SolveMethod method = SolveMethod::Elimination;
};

enum class SolvePolicy {
  /// Constant weighting when the similarity matrix has constant row sums
  /// (unique, since det has constant term 1), elimination otherwise.
  Auto,
  Elimination,
};

/// Fraction-free elimination over generalized polynomials. Elimination is
/// limited to n <= cap; above it only the constant weighting is available
/// and anything else throws TooLarge.
FormalMagnitude formal_magnitude_full(const FiniteMetricSpace& x, SolvePolicy policy = SolvePolicy::Auto,
                                      int cap = kSolverCap);
GenRational formal_magnitude(const FiniteMetricSpace& x, int cap = kSolverCap);

/// z_X(q) * weights - det * 1; all entries zero iff the weighting is exact.
std::vector<GenPolynomial> weighting_residual(const FiniteMetricSpace& x, const FormalMagnitude& m);

/// n / (1 + sum over the row type of q^d).
GenRational formal_magnitude_qh(const EdgeMultiset& type, int n);

/// Signed count of k-paths of length <= L, summed over k.
GenPolynomial path_expansion(const FiniteMetricSpace& x, const Scalar& L, const Witness* witness = nullptr);

/// Interval for the magnitude of tX. Throws PossiblySingular.
Interval magnitude_at(const FiniteMetricSpace& x, const Rational& t, int precision_bits,
                      const Witness* witness = nullptr);

}  // namespace maglab
