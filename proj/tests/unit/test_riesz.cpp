#include <doctest.h>

#include "constructions.hpp"
#include "riesz.hpp"

using namespace maglab;

TEST_CASE("riesz_at") {
  for (int n = 3; n <= 7; ++n) CHECK(riesz_at(regular_polygon(n), 0) == Scalar(n * (n - 1)));
  CHECK(riesz_at(cycle_graph(4), 2) == Scalar(24));
  for (int z = 1; z <= 3; ++z) {
    FiniteMetricSpace x = regular_polygon(7);
    Scalar row(0);
    for (int j = 1; j < 7; ++j) row += pow(x.d(0, j), z);
    CHECK(riesz_at(x, z) == Scalar(7) * row);
  }
  CHECK(riesz_at(cycle_graph(4), -1) == Scalar(2) * (Scalar(4) + Scalar(2) / Scalar(2)));
}

TEST_CASE("riesz_numeric") {
  ComplexInterval z0 = riesz_numeric(cycle_graph(5), Rational(0), Rational(0), 64);
  CHECK(z0.re.lo_double() <= 20);
  CHECK(z0.re.hi_double() >= 20);
  ComplexInterval c4 = riesz_numeric(cycle_graph(4), Rational(1), Rational(0), 64);
  CHECK(c4.re.lo_double() <= 16);
  CHECK(c4.re.hi_double() >= 16);
  CHECK(c4.im.contains_zero());
  Scalar b = delta(2, 5);
  Interval expect = approx(Scalar(10) * (Scalar(1) + b * b), 60);
  ComplexInterval d5 = riesz_numeric(regular_polygon(5), Rational(2), Rational(0), 64);
  CHECK(d5.re.intersects(expect));
  for (int z = 0; z <= 2; ++z) {
    FiniteMetricSpace x = isomer(polygon_type(9));
    ComplexInterval n = riesz_numeric(x, Rational(z), Rational(0), 64);
    CHECK(n.re.intersects(approx(riesz_at(x, z), 60)));
  }
  ComplexInterval im = riesz_numeric(cycle_graph(4), Rational(0), Rational(1), 64);
  CHECK(!im.im.contains_zero());
}

TEST_CASE("riesz_equal") {
  CHECK(riesz_equal(regular_polygon(9), mutant_nonagon()).equal);
  CHECK(riesz_equal(cycle_graph(4), isomer(cycle_type(4))).equal);
  RieszComparison c = riesz_equal(cycle_graph(4), cycle_graph(5));
  CHECK(!c.equal);
  CHECK(!c.diff.empty());
}

TEST_CASE("newton_elementary") {
  auto e = newton_elementary({Scalar(2), Scalar(2)});
  CHECK(e == std::vector<Scalar>{2, 1});
  std::vector<Scalar> p;
  for (const auto& b : power_sum_vector(cycle_graph(4))) p.push_back(b / Scalar(2));
  auto c4 = newton_elementary(p);
  REQUIRE(c4.size() == 6);
  CHECK(c4[0] == Scalar(8));
  CHECK(c4[5] == Scalar(4));
}

TEST_CASE("elementary vectors agree exactly when multisets do") {
  std::vector<FiniteMetricSpace> pool{cycle_graph(5), regular_polygon(5), isomer(polygon_type(5)),
                                      isomer(cycle_type(5)), mutant_even(cycle_type(6)), cycle_graph(6)};
  auto elem = [](const FiniteMetricSpace& x) {
    std::vector<Scalar> p;
    for (const auto& b : power_sum_vector(x)) p.push_back(b / Scalar(2));
    return newton_elementary(p);
  };
  for (const auto& x : pool)
    for (const auto& y : pool) {
      if (x.n() != y.n()) continue;
      bool ms = edge_multiset(x) == edge_multiset(y);
      CHECK(riesz_equal(x, y).equal == ms);
      CHECK((elem(x) == elem(y)) == ms);
    }
}
