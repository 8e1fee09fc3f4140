#include "planar.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace maglab {

namespace {

struct SinTable {
  Scalar s;                 // sin^2 theta
  std::vector<Scalar> v;    // v[a] = sin^2(a theta)
  explicit SinTable(int n) : s(sin_squared(1, n)) {
    v.push_back(Scalar(0));
    for (int a = 1; a <= n / 2; ++a) v.push_back(sin_squared(a, n));
  }
};

Scalar f_value(const SinTable& t, int i, int j, int k) {
  const Scalar &a = t.v[i], &b = t.v[j], &c = t.v[k];
  Scalar quad = t.s * t.s + a * a + b * b + c * c;
  Scalar mixed = a * b + a * c + b * c;
  return quad - mixed - t.s * (a + b + c);
}

}  // namespace

Scalar F_n(int n, int i, int j, int k) {
  if (n < 3) fail(ErrorCode::OutOfRange, "F_n needs n >= 3");
  for (int a : {i, j, k})
    if (a < 1 || a > n / 2) fail(ErrorCode::OutOfRange, "F_n indices must lie in 1..floor(n/2)");
  return f_value(SinTable(n), i, j, k);
}

FnSolutionSet enumerate_solutions(int n, int cap) {
  if (n < 3) fail(ErrorCode::OutOfRange, "enumeration needs n >= 3");
  if (n > cap) fail(ErrorCode::TooLarge, "enumeration is capped at n=" + std::to_string(cap));
  SinTable t(n);
  int h = n / 2;
  // Pairwise products are shared across triples.
  std::vector<std::vector<Scalar>> prod(h + 1, std::vector<Scalar>(h + 1));
  for (int a = 1; a <= h; ++a)
    for (int b = a; b <= h; ++b) prod[a][b] = prod[b][a] = t.v[a] * t.v[b];
  Scalar s2 = t.s * t.s;
  FnSolutionSet out{n, {}};
  for (int i = 1; i <= h; ++i)
    for (int j = i; j <= h; ++j)
      for (int k = j; k <= h; ++k) {
        Scalar f = s2 + prod[i][i] + prod[j][j] + prod[k][k] - prod[i][j] - prod[i][k] - prod[j][k] -
                   t.s * (t.v[i] + t.v[j] + t.v[k]);
        if (f.is_zero()) out.solutions.push_back({i, j, k});
      }
  return out;
}

std::vector<Triple> expected_solutions(int n) {
  std::set<Triple> s;
  if (n % 3 == 0 && n / 3 - 1 >= 1) s.insert({n / 3 - 1, n / 3, n / 3 + 1});
  if (n == 6) s.insert({1, 1, 2});
  if (n % 6 == 0 && n >= 12) {
    s.insert({n / 6 - 1, n / 6, n / 6});
    s.insert({n / 6, n / 6, n / 6 + 1});
  }
  if (n == 24) s.insert({8, 10, 11});
  return {s.begin(), s.end()};
}

SolutionDiff diff_solutions(const FnSolutionSet& s) {
  std::vector<Triple> expected = expected_solutions(s.n);
  SolutionDiff d;
  std::set_difference(expected.begin(), expected.end(), s.solutions.begin(), s.solutions.end(),
                      std::back_inserter(d.missing));
  std::set_difference(s.solutions.begin(), s.solutions.end(), expected.begin(), expected.end(),
                      std::back_inserter(d.unexpected));
  return d;
}

std::vector<TrianglePoint> triangle_vertices() {
  Scalar s3 = sqrt_rational(3);
  Scalar h3 = s3 / Scalar(2);
  auto make = [](Scalar x, Scalar y) {
    TrianglePoint p;
    p.y_squared = y * y;
    p.y_sign = sign(y);
    p.x = std::move(x);
    p.y = std::move(y);
    return p;
  };
  return {make(Scalar(Rational(1, 2)), h3), make(Scalar(0), Scalar(0)), make(Scalar(1), Scalar(0))};
}

std::vector<TrianglePoint> triangle_points(int n, const std::set<int>& allowed) {
  if (n < 3) fail(ErrorCode::OutOfRange, "triangle points need n >= 3");
  for (int a : allowed)
    if (a < 1 || a > n / 2) fail(ErrorCode::OutOfRange, "allowed indices must lie in 1..floor(n/2)");
  std::map<int, Scalar> dsq;
  for (int a : allowed) {
    Scalar d = delta(a, n);
    dsq.emplace(a, d * d);
  }
  Scalar s3 = sqrt_rational(3);
  Scalar one(1), half(Rational(1, 2));
  std::vector<TrianglePoint> out;
  for (int j : allowed)
    for (int k : allowed) {
      // PB = delta_j, PC = delta_k.
      Scalar x = (dsq[j] - dsq[k] + one) * half;
      Scalar y2 = dsq[j] - x * x;
      int s2 = sign(y2);
      if (s2 < 0) continue;
      for (int ys : s2 == 0 ? std::vector<int>{0} : std::vector<int>{1, -1}) {
        // PA^2 = delta_i^2  <=>  sqrt3 * y = R with R = x^2 - x + 1 + y^2 - delta_i^2.
        Scalar base = x * x - x + one + y2;
        for (int i : allowed) {
          Scalar r = base - dsq[i];
          if (sign(r) != ys || !(r * r == Scalar(3) * y2)) continue;
          TrianglePoint p;
          p.x = x;
          p.y = r * s3 / Scalar(3);
          p.y_squared = y2;
          p.y_sign = ys;
          p.dist_indices = {i, j, k};
          bool seen = false;
          for (const auto& q : out) seen = seen || (q.x == p.x && q.y == p.y);
          if (!seen) out.push_back(std::move(p));
        }
      }
    }
  std::sort(out.begin(), out.end(), [](const TrianglePoint& a, const TrianglePoint& b) {
    int c = compare(a.x, b.x);
    return c != 0 ? c < 0 : compare(a.y, b.y) < 0;
  });
  return out;
}

Scalar point_pair_distance_squared(const TrianglePoint& p, const TrianglePoint& q) {
  Scalar dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

}  // namespace maglab
