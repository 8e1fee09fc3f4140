#include "riesz.hpp"

#include <cmath>

#include "error.hpp"

namespace maglab {

Scalar riesz_at(const FiniteMetricSpace& x, int z) {
  Scalar acc(0);
  for (int i = 0; i < x.n(); ++i)
    for (int j = i + 1; j < x.n(); ++j) acc += pow(x.d(i, j), z);
  return acc * Scalar(2);
}

ComplexInterval riesz_numeric(const FiniteMetricSpace& x, const Rational& re, const Rational& im,
                              int precision_bits, const Witness* witness) {
  const Witness* w = witness ? witness : x.witness_ptr();
  double target = std::ldexp(1.0, -precision_bits);
  for (mpfr_prec_t prec = precision_bits + 64; prec <= 16384; prec *= 2) {
    Interval sr = Interval::point(0, prec), si = Interval::point(0, prec);
    Interval zr(re, prec), zi(im, prec);
    for (int i = 0; i < x.n(); ++i)
      for (int j = i + 1; j < x.n(); ++j) {
        Interval ld = enclose(x.d(i, j), prec, w).log();
        Interval mag = (zr * ld).exp();
        Interval ang = zi * ld;
        sr = sr + mag * ang.cos();
        si = si + mag * ang.sin();
      }
    Interval two = Interval::point(2, prec);
    ComplexInterval out{sr * two, si * two};
    if (out.re.width() <= target && out.im.width() <= target) return out;
  }
  fail(ErrorCode::Internal, "Riesz enclosure did not reach the requested precision");
}

std::vector<Scalar> power_sum_vector(const FiniteMetricSpace& x) {
  std::vector<Scalar> edges;
  for (int i = 0; i < x.n(); ++i)
    for (int j = i + 1; j < x.n(); ++j) edges.push_back(x.d(i, j));
  std::vector<Scalar> powers = edges, out;
  for (std::size_t k = 1; k <= edges.size(); ++k) {
    Scalar acc(0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      acc += powers[e];
      powers[e] = powers[e] * edges[e];
    }
    out.push_back(acc * Scalar(2));
  }
  return out;
}

std::vector<Scalar> newton_elementary(const std::vector<Scalar>& p) {
  if (p.empty()) fail(ErrorCode::BadLength, "need at least one power sum");
  std::vector<Scalar> e{Scalar(1)};
  for (std::size_t k = 1; k <= p.size(); ++k) {
    Scalar acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      Scalar t = e[k - i] * p[i - 1];
      acc = (i % 2 == 1) ? acc + t : acc - t;
    }
    e.push_back(acc / Scalar(static_cast<std::int64_t>(k)));
  }
  e.erase(e.begin());
  return e;
}

RieszComparison riesz_equal(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  std::vector<Scalar> values;
  std::size_t nx = 0;
  for (int which = 0; which < 2; ++which) {
    const FiniteMetricSpace& s = which == 0 ? x : y;
    for (int i = 0; i < s.n(); ++i)
      for (int j = i + 1; j < s.n(); ++j) values.push_back(s.d(i, j));
    if (which == 0) nx = values.size();
  }
  std::vector<Scalar> distinct;
  std::vector<int> ids = intern_values(values, &distinct);
  std::vector<int> cx(distinct.size(), 0), cy(distinct.size(), 0);
  for (std::size_t k = 0; k < ids.size(); ++k) ++(k < nx ? cx : cy)[ids[k]];
  RieszComparison out;
  for (std::size_t k = 0; k < distinct.size(); ++k)
    if (cx[k] != cy[k]) out.diff.emplace_back(distinct[k], cx[k], cy[k]);
  out.equal = out.diff.empty();
  return out;
}

}  // namespace maglab
