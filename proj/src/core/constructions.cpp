#include "constructions.hpp"

#include <cstdlib>

#include "error.hpp"

namespace maglab {

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix zero_matrix(int n) { return Matrix(n, std::vector<Scalar>(n, Scalar(0))); }

void set_sym(Matrix& m, int i, int j, const Scalar& v) {
  m[i][j] = v;
  m[j][i] = v;
}

std::string type_label(const CircularType& t) { return "circular" + std::to_string(t.n); }

void require_metric(const FiniteMetricSpace& x) {
  if (!validate_metric(x).ok()) fail(ErrorCode::MetricViolation, x.label() + " violates the metric axioms");
}

}  // namespace

CircularType cycle_type(int n) {
  if (n < 3) fail(ErrorCode::BadN, "cycle graph needs n >= 3");
  CircularType t{n, {}};
  for (int i = 1; i <= n / 2; ++i) t.d.push_back(Scalar(i));
  return t;
}

CircularType polygon_type(int n) {
  if (n < 3) fail(ErrorCode::BadN, "regular polygon needs n >= 3");
  CircularType t{n, {}};
  for (int i = 1; i <= n / 2; ++i) t.d.push_back(delta(i, n));
  return t;
}

FiniteMetricSpace circular_space(const CircularType& type) {
  if (type.n < 3) fail(ErrorCode::BadN, "circular space needs n >= 3");
  if (auto bad = circular_type_violation(type)) {
    std::string where = bad->second == 0 ? "monotonicity at i=" + std::to_string(bad->first)
                                          : "(i, j) = (" + std::to_string(bad->first) + ", " +
                                                std::to_string(bad->second) + ")";
    fail(ErrorCode::TypeInvalid, "circular type is invalid: " + where);
  }
  int n = type.n;
  Matrix m = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) set_sym(m, i, j, type.at(j - i));
  return FiniteMetricSpace(std::move(m), type_label(type));
}

FiniteMetricSpace cycle_graph(int n) {
  FiniteMetricSpace x = circular_space(cycle_type(n));
  x.set_label("C" + std::to_string(n));
  return x;
}

FiniteMetricSpace regular_polygon(int n) {
  FiniteMetricSpace x = circular_space(polygon_type(n));
  x.set_label("Delta" + std::to_string(n));
  return x;
}

FiniteMetricSpace restricted_polygon(const CircularType& type, int m) {
  if (auto bad = circular_type_violation(type)) fail(ErrorCode::TypeInvalid, "circular type is invalid");
  if (m < 1 || m >= type.n) fail(ErrorCode::OutOfRange, "restriction needs 1 <= m < n");
  Matrix d = zero_matrix(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) set_sym(d, i, j, type.at(index_abs(j - i, m)));
  FiniteMetricSpace x(std::move(d), type_label(type) + "|" + std::to_string(m));
  require_metric(x);
  return x;
}

namespace {

void verify_mutant(const FiniteMetricSpace& x, const CircularType& type) {
  require_metric(x);
  FiniteMetricSpace source = circular_space(type);
  auto t = quasi_homog_type(x);
  if (!t || !(*t == row_multiset(source, 0)))
    fail(ErrorCode::Internal, x.label() + " does not share the row type of its source");
  if (are_isometric(x, source, x.n())) fail(ErrorCode::Internal, x.label() + " is isometric to its source");
}

void verify_isomer(const FiniteMetricSpace& x, const CircularType& type) {
  require_metric(x);
  FiniteMetricSpace source = circular_space(type);
  if (!(edge_multiset(x) == edge_multiset(source)))
    fail(ErrorCode::Internal, x.label() + " does not share the edge multiset of its source");
  if (are_isometric(x, source, x.n())) fail(ErrorCode::Internal, x.label() + " is isometric to its source");
}

}  // namespace

FiniteMetricSpace mutant_even(const CircularType& type, bool verify) {
  int n = type.n;
  if (n < 6 || n % 2 != 0) fail(ErrorCode::BadN, "mutant construction needs an even n >= 6");
  if (circular_type_violation(type)) fail(ErrorCode::TypeInvalid, "circular type is invalid");
  int h = n / 2;  // points per gon
  Matrix m = zero_matrix(n);
  auto d = [&](int idx) { return type.d.at(idx - 1); };
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      int within = index_abs(j - i, h);
      if (i < j) {
        set_sym(m, i, j, d(within));
        set_sym(m, h + i, h + j, d(within));
      }
      int cross = (n % 4 == 0) ? h / 2 + within : h - within;
      set_sym(m, i, h + j, d(cross));
    }
  FiniteMetricSpace x(std::move(m), "mutant(" + type_label(type) + ")");
  if (verify) verify_mutant(x, type);
  return x;
}

FiniteMetricSpace mutant_nonagon(bool verify) {
  CircularType type = polygon_type(9);
  Matrix m = zero_matrix(9);
  // Triples A = 0..2, B = 3..5, C = 6..8; X_i -> Y_{i+s} has length delta_{2+s}.
  for (int g = 0; g < 3; ++g) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) set_sym(m, 3 * g + i, 3 * g + j, Scalar(1));
    int h = (g + 1) % 3;
    for (int i = 0; i < 3; ++i)
      for (int s = 0; s < 3; ++s) set_sym(m, 3 * g + i, 3 * h + (i + s) % 3, type.d[1 + s]);
  }
  FiniteMetricSpace x(std::move(m), "mutant(Delta9)");
  if (verify) verify_mutant(x, type);
  return x;
}

int isomer_suffix_4k1(int k, int i, int j) {
  if (k < 2 || i < 1 || i > 2 * k || j < 1 || j > 2 * k + 1) fail(ErrorCode::OutOfRange, "isomer index out of range");
  std::vector<int> hits;
  if (j <= k) hits.push_back(k + j);
  if (j == k + 1 || (i == 2 * k && j == k + 2)) hits.push_back(2 * k);
  for (int l = 1; l <= k - 1; ++l)
    if ((j == k + l + 1 && i <= 2 * k - l) || (j == k + l + 2 && i >= 2 * k - l)) hits.push_back(2 * k - l);
  if (j == 2 * k + 1 && i <= k) hits.push_back(k);
  if (hits.size() != 1) fail(ErrorCode::Internal, "isomer suffix rules are not a partition");
  return hits.front();
}

int isomer_suffix_4k3(int k, int i, int j) {
  if (k < 1 || i < 1 || i > 2 * k + 1 || j < 1 || j > 2 * k + 2)
    fail(ErrorCode::OutOfRange, "isomer index out of range");
  std::vector<int> hits;
  if (j <= k + 1) hits.push_back(k + j);
  if (j == k + 2 || (i == 2 * k + 1 && j == k + 3)) hits.push_back(2 * k + 1);
  for (int l = 1; l <= k - 1; ++l)
    if ((j == k + l + 2 && i <= 2 * k + 1 - l) || (j == k + l + 3 && i >= 2 * k + 1 - l)) hits.push_back(2 * k + 1 - l);
  if (j == 2 * k + 2 && i <= k + 1) hits.push_back(k + 1);
  if (hits.size() != 1) fail(ErrorCode::Internal, "isomer suffix rules are not a partition");
  return hits.front();
}

FiniteMetricSpace isomer(const CircularType& type, bool verify) {
  int n = type.n;
  if (n < 4) fail(ErrorCode::BadN, "isomer construction needs n >= 4");
  if (circular_type_violation(type)) fail(ErrorCode::TypeInvalid, "circular type is invalid");
  if (n % 2 == 0 && n >= 6) {
    FiniteMetricSpace x = mutant_even(type, false);
    x.set_label("isomer(" + type_label(type) + ")");
    if (verify) verify_isomer(x, type);
    return x;
  }
  auto d = [&](int idx) { return type.d.at(idx - 1); };
  Matrix m = zero_matrix(n);
  if (n == 4) {
    // 1-based A1..A4
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {1, 4}, {3, 4}}) set_sym(m, i - 1, j - 1, d(1));
    for (auto [i, j] : {std::pair{2, 3}, {2, 4}}) set_sym(m, i - 1, j - 1, d(2));
  } else if (n == 5) {
    for (auto [i, j] : {std::pair{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}) set_sym(m, i - 1, j - 1, d(1));
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {1, 4}, {1, 5}, {4, 5}}) set_sym(m, i - 1, j - 1, d(2));
  } else {
    int k = (n % 4 == 1) ? (n - 1) / 4 : (n - 3) / 4;
    int a = (n % 4 == 1) ? 2 * k : 2 * k + 1;
    int b = n - a;
    for (int i = 0; i < a; ++i)
      for (int j = i + 1; j < a; ++j) set_sym(m, i, j, d(index_abs(j - i, a)));
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j) set_sym(m, a + i, a + j, d(index_abs(j - i, b)));
    for (int i = 1; i <= a; ++i)
      for (int j = 1; j <= b; ++j) {
        int s = (n % 4 == 1) ? isomer_suffix_4k1(k, i, j) : isomer_suffix_4k3(k, i, j);
        set_sym(m, i - 1, a + j - 1, d(s));
      }
  }
  FiniteMetricSpace x(std::move(m), "isomer(" + type_label(type) + ")");
  if (verify) verify_isomer(x, type);
  return x;
}

std::array<FiniteMetricSpace, 3> fig2_family(const std::string& a, const std::string& b, const std::string& c,
                                             std::optional<Witness> witness) {
  if (a == b || b == c || a == c) fail(ErrorCode::InvalidArgument, "fig2 family needs three distinct symbols");
  Scalar A = Scalar::symbol(a), B = Scalar::symbol(b), C = Scalar::symbol(c);
  // Star: centre 0, leaves 1, 2, 3 on edges a, b, c.
  Matrix star = zero_matrix(4);
  set_sym(star, 0, 1, A);
  set_sym(star, 0, 2, B);
  set_sym(star, 0, 3, C);
  set_sym(star, 1, 2, A + B);
  set_sym(star, 1, 3, A + C);
  set_sym(star, 2, 3, B + C);
  auto path = [&](const Scalar& e1, const Scalar& e2, const Scalar& e3) {
    Matrix m = zero_matrix(4);
    set_sym(m, 0, 1, e1);
    set_sym(m, 1, 2, e2);
    set_sym(m, 2, 3, e3);
    set_sym(m, 0, 2, e1 + e2);
    set_sym(m, 1, 3, e2 + e3);
    set_sym(m, 0, 3, e1 + e2 + e3);
    return m;
  };
  return {FiniteMetricSpace(std::move(star), "fig2-star", witness),
          FiniteMetricSpace(path(A, B, C), "fig2-path-abc", witness),
          FiniteMetricSpace(path(B, A, C), "fig2-path-bac", witness)};
}

std::vector<std::vector<Scalar>> squared_distances(const PointConfig& p) {
  int n = static_cast<int>(p.points.size());
  for (const auto& v : p.points)
    if (static_cast<int>(v.size()) != p.dimension()) fail(ErrorCode::BadLength, "points have different dimensions");
  Matrix m = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar s(0);
      for (int k = 0; k < p.dimension(); ++k) {
        Scalar diff = p.points[i][k] - p.points[j][k];
        s += diff * diff;
      }
      set_sym(m, i, j, s);
    }
  return m;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"square_isomer_r3", "pentagon_isomer_r4", "hexagon_mutant_r3",
                                              "hexagon_mutant_nonembeddable"};
  return names;
}

Fixture euclidean_fixture(const std::string& name) {
  Fixture f{name, std::nullopt, {}, std::nullopt};
  Scalar zero(0), half(Rational(1, 2));
  if (name == "square_isomer_r3") {
    Scalar h3 = sqrt_rational(Rational(3, 4));
    f.points = PointConfig{{{zero, zero, zero}, {Scalar(1), zero, zero}, {half, h3, zero}, {zero, zero, Scalar(1)}}};
  } else if (name == "pentagon_isomer_r4") {
    Scalar s5 = sqrt_rational(5);
    Scalar p = (s5 + Scalar(1)) / Scalar(4), m = (s5 - Scalar(1)) / Scalar(4), t = (s5 + Scalar(3)) / Scalar(4);
    f.points = PointConfig{{{zero, zero, p, t},
                            {zero, half, zero, zero},
                            {zero, -half, zero, zero},
                            {p, zero, m, zero},
                            {-p, zero, m, zero}}};
  } else if (name == "hexagon_mutant_r3") {
    Scalar r = sqrt_rational(Rational(1, 3));    // 1/sqrt3
    Scalar r2 = sqrt_rational(Rational(1, 12));  // 1/(2 sqrt3)
    Scalar h = sqrt_rational(Rational(8, 3));    // 2 sqrt2/sqrt3
    f.points = PointConfig{{{r, zero, zero},
                            {-r2, half, zero},
                            {-r2, -half, zero},
                            {-r, zero, h},
                            {r2, half, h},
                            {r2, -half, h}}};
  } else if (name == "hexagon_mutant_nonembeddable") {
    Scalar s3 = sqrt_rational(3);
    Matrix m = zero_matrix(6);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) set_sym(m, i, j, s3);
    for (int i = 0; i < 6; ++i) set_sym(m, i, (i + 1) % 6, Scalar(1));
    for (auto [i, j] : {std::pair{0, 3}, {1, 5}, {2, 4}}) set_sym(m, i, j, Scalar(2));
    Matrix sq = zero_matrix(6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) sq[i][j] = m[i][j] * m[i][j];
    f.squared = std::move(sq);
    f.space = FiniteMetricSpace(std::move(m), name);
    return f;
  } else {
    fail(ErrorCode::UnknownName, "unknown fixture '" + name + "'");
  }
  f.squared = squared_distances(*f.points);
  return f;
}

Embedding cayley_menger_embeddable(const std::vector<std::vector<Scalar>>& squared, const Witness* witness) {
  int n = static_cast<int>(squared.size());
  for (const auto& row : squared)
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::BadLength, "squared-distance matrix is not square");
  Embedding out;
  if (n == 0) fail(ErrorCode::BadN, "need at least one point");
  int g = n - 1;
  Matrix G(g, std::vector<Scalar>(g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      G[i][j] = (squared[0][i + 1] + squared[0][j + 1] - squared[i + 1][j + 1]) / Scalar(2);
  std::vector<char> done(g, 0);
  int rank = 0;
  while (true) {
    int pivot = -1;
    for (int i = 0; i < g; ++i) {
      if (done[i]) continue;
      int s = sign(G[i][i], witness);
      if (s < 0) return out;
      if (s > 0 && pivot < 0) pivot = i;
    }
    if (pivot < 0) {
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
          if (!done[i] && !done[j] && !G[i][j].is_zero()) return out;
      break;
    }
    done[pivot] = 1;
    ++rank;
    for (int i = 0; i < g; ++i) {
      if (done[i]) continue;
      Scalar f = G[i][pivot] / G[pivot][pivot];
      if (f.is_zero()) continue;
      for (int j = 0; j < g; ++j)
        if (!done[j]) G[i][j] -= f * G[pivot][j];
    }
  }
  out.euclidean = true;
  out.dimension = rank;
  return out;
}

Scalar cayley_menger_determinant(const std::vector<std::vector<Scalar>>& squared, const std::vector<int>& subset) {
  int k = static_cast<int>(subset.size()) + 1;
  Matrix m(k, std::vector<Scalar>(k, Scalar(1)));
  m[0][0] = Scalar(0);
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < k; ++j) m[i][j] = squared.at(subset[i - 1]).at(subset[j - 1]);
  // Gaussian elimination with exact pivots.
  Scalar det(1);
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (p < k && m[p][c].is_zero()) ++p;
    if (p == k) return Scalar(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < k; ++r) {
      if (m[r][c].is_zero()) continue;
      Scalar f = m[r][c] / m[c][c];
      for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

namespace {

std::optional<Scalar> known_root(const Scalar& s) {
  if (s.is_rational()) {
    if (s.rational().sign() < 0) return std::nullopt;
    return sqrt_rational(s.rational());
  }
  if (!s.is_cyclotomic()) return std::nullopt;
  int m = s.cyclotomic().conductor();
  for (int k = 3; k <= 2 * m; ++k)
    for (int i = 2; i <= k / 2; ++i) {
      Scalar d = delta(i, k);
      if (d * d == s) return d;
    }
  return std::nullopt;
}

}  // namespace

std::optional<FiniteMetricSpace> fixture_space(const Fixture& f) {
  if (f.space) return f.space;
  std::size_t n = f.squared.size();
  std::vector<std::vector<Scalar>> dist(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto r = known_root(f.squared[i][j]);
      if (!r) return std::nullopt;
      dist[i][j] = dist[j][i] = *r;
    }
  return FiniteMetricSpace(std::move(dist), f.name);
}

}  // namespace maglab
