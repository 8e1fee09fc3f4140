#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "metric_space.hpp"

namespace maglab {

/// sum over ordered pairs i != j of d(P_i, P_j)^z.
Scalar riesz_at(const FiniteMetricSpace& x, int z);

struct ComplexInterval {
  Interval re;
  Interval im;
};

/// Enclosure of sum_{i != j} exp(z log d) for z = re + i*im.
ComplexInterval riesz_numeric(const FiniteMetricSpace& x, const Rational& re, const Rational& im,
                              int precision_bits, const Witness* witness = nullptr);

/// B_X(1), ..., B_X(N) with N = n(n-1)/2.
std::vector<Scalar> power_sum_vector(const FiniteMetricSpace& x);

/// e_1..e_N from the power sums p_1..p_N of a multiset (Newton's identities).
std::vector<Scalar> newton_elementary(const std::vector<Scalar>& power_sums);

struct RieszComparison {
  bool equal = false;
  /// Values whose multiplicities differ: (value, count in X, count in Y).
  std::vector<std::tuple<Scalar, int, int>> diff;
};

RieszComparison riesz_equal(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

}  // namespace maglab
