#include <doctest.h>

#include "constructions.hpp"
#include "error.hpp"
#include "magnitude.hpp"
#include "riesz.hpp"

using namespace maglab;

namespace {
bool throws_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}
}  // namespace

TEST_CASE("cycle graphs and polygons") {
  FiniteMetricSpace c3 = cycle_graph(3);
  CHECK(c3.d(0, 1) == Scalar(1));
  CHECK(c3.d(0, 2) == Scalar(1));
  CHECK(row_multiset(cycle_graph(7), 0) == EdgeMultiset({1, 1, 2, 2, 3, 3}));
  CHECK(cycle_graph(4).d(0, 2) == Scalar(2));
  CHECK(polygon_type(4).d == std::vector<Scalar>{1, sqrt_rational(2)});
  CHECK(polygon_type(6).d == std::vector<Scalar>{1, sqrt_rational(3), 2});
  CHECK(polygon_type(5).d[1] == (Scalar(1) + sqrt_rational(5)) / Scalar(2));
  CHECK(throws_code(ErrorCode::BadN, [] { cycle_graph(2); }));
  CHECK(cycle_graph(5).label() == "C5");
  CHECK(regular_polygon(5).label() == "Delta5");
}

TEST_CASE("circular spaces") {
  CircularType t{7, {1, 2, 3}};
  CHECK(circular_space(t) == cycle_graph(7));
  CircularType ok{4, {1, Scalar(Rational(3, 2))}};
  CHECK(validate_metric(circular_space(ok)).ok());
  CircularType bad{4, {1, 5}};
  CHECK(throws_code(ErrorCode::TypeInvalid, [&] { circular_space(bad); }));
  auto v = circular_type_violation(bad);
  REQUIRE(v);
  CHECK(*v == std::pair<int, int>{1, 1});
}

TEST_CASE("restricted polygons") {
  CHECK(validate_metric(restricted_polygon(polygon_type(8), 5)).ok());
  for (int n = 4; n <= 12; ++n) CHECK(validate_metric(restricted_polygon(polygon_type(n), n - 1)).ok());
  FiniteMetricSpace tri = restricted_polygon(polygon_type(8), 3);
  CHECK(edge_multiset(tri) == EdgeMultiset({1, 1, 1}));
}

TEST_CASE("even mutants") {
  for (int n = 6; n <= 12; n += 2)
    for (const auto& t : {cycle_type(n), polygon_type(n)}) {
      FiniteMetricSpace x = mutant_even(t);
      FiniteMetricSpace s = circular_space(t);
      CHECK(validate_metric(x).ok());
      CHECK(quasi_homog_type(x) == quasi_homog_type(s));
      CHECK(!are_isometric(x, s));
      CHECK(gr_equal(formal_magnitude(x), formal_magnitude(s)));
      CHECK(riesz_equal(x, s).equal);
    }
  CHECK(throws_code(ErrorCode::BadN, [] { mutant_even(polygon_type(4)); }));
  CHECK(throws_code(ErrorCode::BadN, [] { mutant_even(polygon_type(7)); }));
}

TEST_CASE("hexagon mutant matches the coordinate fixture") {
  Fixture f = euclidean_fixture("hexagon_mutant_r3");
  FiniteMetricSpace m = mutant_even(polygon_type(6));
  std::vector<std::vector<Scalar>> sq(6, std::vector<Scalar>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) sq[i][j] = m.d(i, j) * m.d(i, j);
  CHECK(are_isometric(FiniteMetricSpace(sq), FiniteMetricSpace(f.squared)).has_value());
}

TEST_CASE("nonagon mutant") {
  FiniteMetricSpace x = mutant_nonagon();
  std::vector<Scalar> row;
  for (int i = 1; i <= 4; ++i) row.insert(row.end(), 2, delta(i, 9));
  for (int i = 0; i < 9; ++i) CHECK(row_multiset(x, i) == EdgeMultiset(row));
  Scalar d3 = delta(3, 9);
  int bad = 0;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      for (int k = 0; k < 9; ++k)
        if (i != j && j != k && i != k && x.d(i, j) == Scalar(1) && x.d(j, k) == Scalar(1) && x.d(i, k) == d3) ++bad;
  CHECK(bad == 0);
  CHECK(!are_isometric(x, regular_polygon(9)));
}

TEST_CASE("isomers") {
  FiniteMetricSpace c4 = isomer(cycle_type(4));
  CHECK(edge_multiset(c4) == EdgeMultiset({1, 1, 1, 1, 2, 2}));
  CHECK(!are_isometric(c4, cycle_graph(4)));
  for (int n : {5, 7, 9, 11, 13, 15}) {
    for (const auto& t : {cycle_type(n), polygon_type(n)}) {
      FiniteMetricSpace x = isomer(t);
      FiniteMetricSpace s = circular_space(t);
      CHECK(validate_metric(x).ok());
      CHECK(edge_multiset(x) == edge_multiset(s));
      CHECK(riesz_equal(x, s).equal);
      if (n >= 9) {
        auto qt = quasi_homog_type(x);
        CHECK((!qt || !(*qt == row_multiset(s, 0))));
      }
    }
  }
  CHECK(throws_code(ErrorCode::BadN, [] { isomer(polygon_type(3)); }));
}

TEST_CASE("fig2 family") {
  Witness w{{"a", 1}, {"b", 2}, {"c", 3}};
  auto f = fig2_family("a", "b", "c", w);
  Scalar a = Scalar::symbol("a"), b = Scalar::symbol("b"), c = Scalar::symbol("c");
  CHECK(f[1].d(0, 3) == a + b + c);
  for (int i = 0; i < 3; ++i) {
    CHECK(validate_metric(f[i]).ok());
    for (int j = i + 1; j < 3; ++j) {
      CHECK(!are_isometric(f[i], f[j]));
      CHECK(gr_equal(formal_magnitude(f[i]), formal_magnitude(f[j])));
    }
  }
  CHECK(!(edge_multiset(f[1]) == edge_multiset(f[2])));
  CHECK(!riesz_equal(f[1], f[2]).equal);
}

TEST_CASE("squared distances and Cayley-Menger") {
  PointConfig seg{{{0}, {1}}};
  CHECK(squared_distances(seg) == std::vector<std::vector<Scalar>>{{0, 1}, {1, 0}});
  PointConfig tri{{{0, 0}, {1, 0}, {Scalar(Rational(1, 2)), sqrt_rational(3) / Scalar(2)}}};
  auto t = squared_distances(tri);
  CHECK(t[0][1] == Scalar(1));
  CHECK(t[0][2] == Scalar(1));
  CHECK(t[1][2] == Scalar(1));
  PointConfig square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  Embedding e = cayley_menger_embeddable(squared_distances(square));
  CHECK(e.euclidean);
  CHECK(e.dimension == 2);
  CHECK(edge_multiset(FiniteMetricSpace(euclidean_fixture("square_isomer_r3").squared)) ==
        EdgeMultiset({1, 1, 1, 1, 2, 2}));
  Embedding h = cayley_menger_embeddable(euclidean_fixture("hexagon_mutant_r3").squared);
  CHECK(h.within(3));
  CHECK(!cayley_menger_embeddable(euclidean_fixture("hexagon_mutant_nonembeddable").squared).euclidean);
  CHECK(throws_code(ErrorCode::UnknownName, [] { euclidean_fixture("nope"); }));
}

TEST_CASE("fixture spaces recover exact distances") {
  for (const auto& name : fixture_names()) {
    Fixture f = euclidean_fixture(name);
    auto s = fixture_space(f);
    REQUIRE(s);
    for (int i = 0; i < s->n(); ++i)
      for (int j = 0; j < s->n(); ++j) CHECK(s->d(i, j) * s->d(i, j) == f.squared[i][j]);
  }
}
