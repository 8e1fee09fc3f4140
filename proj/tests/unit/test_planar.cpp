#include <doctest.h>

#include <algorithm>

#include "planar.hpp"

using namespace maglab;

TEST_CASE("F_n symmetry and known zeros") {
  for (int n : {9, 12, 13}) {
    Triple t{1, 2, 3};
    Scalar base = F_n(n, t[0], t[1], t[2]);
    std::sort(t.begin(), t.end());
    do CHECK(F_n(n, t[0], t[1], t[2]) == base);
    while (std::next_permutation(t.begin(), t.end()));
  }
  for (int n = 6; n <= 60; n += 3) CHECK(F_n(n, n / 3 - 1, n / 3, n / 3 + 1).is_zero());
  for (int n = 12; n <= 60; n += 6) {
    CHECK(F_n(n, n / 6 - 1, n / 6, n / 6).is_zero());
    CHECK(F_n(n, n / 6, n / 6, n / 6 + 1).is_zero());
  }
  CHECK(F_n(24, 8, 10, 11).is_zero());
  CHECK(F_n(6, 1, 1, 2).is_zero());
}

TEST_CASE("enumeration") {
  CHECK(enumerate_solutions(24).solutions == std::vector<Triple>{{3, 4, 4}, {4, 4, 5}, {7, 8, 9}, {8, 10, 11}});
  CHECK(enumerate_solutions(7).solutions.empty());
  CHECK(enumerate_solutions(6).solutions == std::vector<Triple>{{1, 1, 2}, {1, 2, 3}});
  for (int n = 6; n <= 30; ++n) CHECK(diff_solutions(enumerate_solutions(n)).ok(n));
  CHECK_THROWS(enumerate_solutions(61));
}

TEST_CASE("expected sets") {
  CHECK(expected_solutions(7).empty());
  CHECK(expected_solutions(24) == std::vector<Triple>{{3, 4, 4}, {4, 4, 5}, {7, 8, 9}, {8, 10, 11}});
  CHECK(expected_solutions(15) == std::vector<Triple>{{4, 5, 6}});
}

TEST_CASE("triangle points") {
  auto v = triangle_vertices();
  REQUIRE(v.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(point_pair_distance_squared(v[i], v[j]) == Scalar(1));
  auto p12 = triangle_points(12, {1, 2, 3, 4, 5, 6});
  CHECK(p12.size() == 12);
  auto p9 = triangle_points(9, {2, 3, 4});
  CHECK(p9.size() == 6);
  for (const auto& p : p9) {
    CHECK(p.y * p.y == p.y_squared);
    for (int k = 0; k < 3; ++k)
      CHECK(point_pair_distance_squared(p, v[k]) == delta(p.dist_indices[k], 9) * delta(p.dist_indices[k], 9));
  }
  // reflections across the base line sit at distance 2|y|
  for (const auto& a : p9)
    for (const auto& b : p9)
      if (a.x == b.x && a.y_sign == -b.y_sign && a.y_sign != 0)
        CHECK(point_pair_distance_squared(a, b) == Scalar(4) * a.y_squared);
}
