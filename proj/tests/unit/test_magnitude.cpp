#include <doctest.h>

#include <cmath>

#include "constructions.hpp"
#include "error.hpp"
#include "magnitude.hpp"

using namespace maglab;

namespace {
GenPolynomial q(const Scalar& e, std::int64_t c = 1) { return GenPolynomial::monomial(e, Rational(c)); }
GenPolynomial one() { return GenPolynomial(Rational(1)); }
FiniteMetricSpace point() { return FiniteMetricSpace({{Scalar(0)}}, "point"); }
}  // namespace

TEST_CASE("similarity matrix") {
  auto z = similarity_matrix(point());
  CHECK(z.size() == 1);
  CHECK(z[0][0] == one());
  auto c4 = similarity_matrix(cycle_graph(4));
  CHECK(c4[0][1] == q(1));
  CHECK(c4[0][2] == q(2));
  CHECK(c4[0][3] == q(1));
  auto fig = fig2_family();
  auto zf = similarity_matrix(fig[0]);
  // star tree: leaves meet through the centre
  CHECK(zf[1][2] == q(Scalar::symbol("a") + Scalar::symbol("b")));
}

TEST_CASE("formal magnitude") {
  CHECK(gr_equal(formal_magnitude(point()), GenRational(one(), one())));
  GenRational c4(GenPolynomial(Rational(4)), one() + q(1, 2) + q(2));
  CHECK(gr_equal(formal_magnitude(cycle_graph(4)), c4));
  CHECK(gr_equal(formal_magnitude_full(cycle_graph(4), SolvePolicy::Elimination).value, c4));
  auto fig = fig2_family();
  GenRational m0 = formal_magnitude(fig[0]);
  CHECK(gr_equal(m0, formal_magnitude(fig[1])));
  CHECK(gr_equal(m0, formal_magnitude(fig[2])));
}

TEST_CASE("closed form for quasi-homogeneous spaces") {
  GenRational c5(GenPolynomial(Rational(5)), one() + q(1, 2) + q(2, 2));
  CHECK(gr_equal(formal_magnitude_qh(row_multiset(cycle_graph(5), 0), 5), c5));
  GenRational d6(GenPolynomial(Rational(6)), one() + q(1, 2) + q(sqrt_rational(3), 2) + q(2));
  CHECK(gr_equal(formal_magnitude_qh(row_multiset(regular_polygon(6), 0), 6), d6));
  CHECK(gr_equal(formal_magnitude_qh(EdgeMultiset{}, 1), GenRational(one(), one())));
  for (int n = 3; n <= 8; ++n)
    for (const auto& x : {cycle_graph(n), regular_polygon(n)}) {
      auto t = quasi_homog_type(x);
      REQUIRE(t);
      GenRational closed = formal_magnitude_qh(*t, n);
      CHECK(gr_equal(formal_magnitude_full(x, SolvePolicy::Elimination).value, closed));
      CHECK(gr_equal(formal_magnitude(x), closed));
    }
}

TEST_CASE("solver cap") {
  CHECK_THROWS_AS(formal_magnitude_full(isomer(polygon_type(13), false), SolvePolicy::Elimination), Error);
  // Constant row sums are solved directly at any size.
  CHECK(formal_magnitude_full(regular_polygon(30)).method == SolveMethod::ConstantWeighting);
}

TEST_CASE("weighting residual is zero") {
  for (const auto& x : {cycle_graph(5), isomer(polygon_type(5)), isomer(cycle_type(7)), fig2_family()[1]}) {
    FormalMagnitude m = formal_magnitude_full(x);
    for (const auto& r : weighting_residual(x, m)) CHECK(r.is_zero());
  }
}

TEST_CASE("path expansion") {
  CHECK(path_expansion(point(), Scalar(5)) == one());
  CHECK(path_expansion(cycle_graph(4), Scalar(3)) ==
        GenPolynomial(Rational(4)) + q(1, -8) + q(2, 12) + q(3, -16));
  // the coefficient of the minimal distance is -2 times its multiplicity
  FiniteMetricSpace x = isomer(polygon_type(7));
  GenPolynomial p = path_expansion(x, Scalar(2));
  CHECK(p.coeff(0) == Rational(7));
  CHECK(p.coeff(1) == Rational(-2 * edge_multiset(x).entries().front().second));
}

TEST_CASE("series of the solve equals the path expansion") {
  for (const auto& x : {cycle_graph(6), regular_polygon(5), isomer(cycle_type(5)), mutant_even(polygon_type(6))}) {
    Scalar L = Scalar(3) * x.max_distance();
    CHECK(series(formal_magnitude_full(x, SolvePolicy::Elimination).value, L) == path_expansion(x, L));
  }
}

TEST_CASE("numeric magnitude") {
  Interval p = magnitude_at(point(), Rational(1), 64);
  CHECK(p.lo_double() <= 1.0);
  CHECK(p.hi_double() >= 1.0);
  double qv = std::exp(-1.0);
  double c4 = 4 / ((1 + qv) * (1 + qv));
  Interval v = magnitude_at(cycle_graph(4), Rational(1), 80);
  CHECK(v.lo_double() <= c4 + 1e-12);
  CHECK(v.hi_double() >= c4 - 1e-12);
  CHECK(v.width() < 1e-15);
  Interval d5 = magnitude_at(regular_polygon(5), Rational(20), 80);
  CHECK(std::abs(d5.mid_double() - 5) < 1e-6);
  // agrees with evaluating the exact formal magnitude
  FiniteMetricSpace x = isomer(polygon_type(6));
  Interval a = magnitude_at(x, Rational(1, 2), 100);
  Interval b = formal_magnitude(x).evaluate_at(Rational(1, 2), 100);
  CHECK(a.intersects(b));
}
