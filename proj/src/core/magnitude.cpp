#include "magnitude.hpp"

#include <cmath>

#include "error.hpp"

namespace maglab {

SimilarityMatrix similarity_matrix(const FiniteMetricSpace& x) {
  SimilarityMatrix z(x.n(), std::vector<GenPolynomial>(x.n()));
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) z[i][j] = GenPolynomial::monomial(x.d(i, j));
  return z;
}

namespace {

FormalMagnitude finish(std::vector<GenPolynomial> y, GenPolynomial det, SolveMethod method) {
  GenPolynomial total;
  for (const auto& w : y) total += w;
  FormalMagnitude out{GenRational(total, det), {}, std::move(y), method};
  Rational c = det.constant_term();
  if (c.is_zero()) fail(ErrorCode::Internal, "similarity determinant lacks a constant term");
  out.det = det.scaled(c.inverse());
  for (auto& w : out.weights) w = w.scaled(c.inverse());
  return out;
}

std::optional<GenPolynomial> constant_row_sum(const SimilarityMatrix& z) {
  GenPolynomial first;
  for (const auto& e : z[0]) first += e;
  for (std::size_t i = 1; i < z.size(); ++i) {
    GenPolynomial s;
    for (const auto& e : z[i]) s += e;
    if (!(s == first)) return std::nullopt;
  }
  return first;
}

FormalMagnitude eliminate(SimilarityMatrix z) {
  int n = static_cast<int>(z.size());
  for (auto& row : z) row.push_back(GenPolynomial(Rational(1)));
  GenPolynomial prev(Rational(1));
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (z[r][k].is_zero()) continue;
      if (pivot < 0 || z[r][k].size() < z[pivot][k].size()) pivot = r;
    }
    if (pivot < 0) fail(ErrorCode::Internal, "similarity matrix is singular");
    std::swap(z[k], z[pivot]);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j <= n; ++j)
        z[i][j] = exact_divide(z[k][k] * z[i][j] - z[i][k] * z[k][j], prev);
      z[i][k] = GenPolynomial();
    }
    prev = z[k][k];
  }
  const GenPolynomial& det = z[n - 1][n - 1];
  std::vector<GenPolynomial> y(n);
  for (int i = n - 1; i >= 0; --i) {
    GenPolynomial acc = det * z[i][n];
    for (int j = i + 1; j < n; ++j) acc -= z[i][j] * y[j];
    y[i] = exact_divide(acc, z[i][i]);
  }
  return finish(std::move(y), det, SolveMethod::Elimination);
}

}  // namespace

FormalMagnitude formal_magnitude_full(const FiniteMetricSpace& x, SolvePolicy policy, int cap) {
  SimilarityMatrix z = similarity_matrix(x);
  if (policy == SolvePolicy::Auto) {
    if (auto s = constant_row_sum(z))
      return finish(std::vector<GenPolynomial>(x.n(), GenPolynomial(Rational(1))), *s,
                    SolveMethod::ConstantWeighting);
  }
  if (x.n() > cap) fail(ErrorCode::TooLarge, "formal magnitude elimination is capped at n=" + std::to_string(cap));
  return eliminate(std::move(z));
}

GenRational formal_magnitude(const FiniteMetricSpace& x, int cap) {
  return formal_magnitude_full(x, SolvePolicy::Auto, cap).value;
}

std::vector<GenPolynomial> weighting_residual(const FiniteMetricSpace& x, const FormalMagnitude& m) {
  SimilarityMatrix z = similarity_matrix(x);
  std::vector<GenPolynomial> r(x.n());
  for (int i = 0; i < x.n(); ++i) {
    GenPolynomial acc = -m.det;
    for (int j = 0; j < x.n(); ++j) acc += z[i][j] * m.weights[j];
    r[i] = std::move(acc);
  }
  return r;
}

GenRational formal_magnitude_qh(const EdgeMultiset& type, int n) {
  if (n < 1) fail(ErrorCode::BadN, "n must be positive");
  if (type.total() != n - 1) fail(ErrorCode::BadLength, "quasi-homogeneous type needs n-1 entries");
  GenPolynomial den(Rational(1));
  for (const auto& [d, mult] : type.entries()) den += GenPolynomial::monomial(d, Rational(mult));
  return GenRational(GenPolynomial(Rational(n)), den);
}

GenPolynomial path_expansion(const FiniteMetricSpace& x, const Scalar& L, const Witness* witness) {
  const Witness* w = witness ? witness : x.witness_ptr();
  int n = x.n();
  if (sign(L, w) < 0) fail(ErrorCode::OutOfRange, "threshold must be non-negative");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sign(x.d(i, j), w) <= 0) fail(ErrorCode::MetricViolation, "path expansion needs positive distances");
  // layer[p]: signed sum over k-paths ending at p of q^length.
  std::vector<GenPolynomial> layer(n, GenPolynomial(Rational(1)));
  GenPolynomial total{Rational(n)};
  bool any = n > 1;
  while (any) {
    any = false;
    std::vector<GenPolynomial> next(n);
    for (int p = 0; p < n; ++p) {
      for (int r = 0; r < n; ++r) {
        if (r == p || layer[r].is_zero()) continue;
        next[p] -= layer[r].shifted(x.d(r, p)).truncated(L, w);
      }
      if (!next[p].is_zero()) {
        any = true;
        total += next[p];
      }
    }
    layer = std::move(next);
  }
  return total;
}

Interval magnitude_at(const FiniteMetricSpace& x, const Rational& t, int precision_bits, const Witness* witness) {
  const Witness* w = witness ? witness : x.witness_ptr();
  if (t.sign() <= 0) fail(ErrorCode::OutOfRange, "scale t must be positive");
  int n = x.n();
  double target = std::ldexp(1.0, -precision_bits);
  for (mpfr_prec_t prec = precision_bits + 64; prec <= 8192; prec *= 2) {
    Interval tt(t, prec);
    std::vector<std::vector<Interval>> a(n, std::vector<Interval>(n + 1, Interval(prec)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = (-(enclose(x.d(i, j), prec, w) * tt)).exp();
      a[i][n] = Interval::point(1, prec);
    }
    bool singular = false;
    for (int k = 0; k < n && !singular; ++k) {
      int pivot = -1;
      double best = -1;
      for (int r = k; r < n; ++r) {
        if (a[r][k].contains_zero()) continue;
        double mag = std::min(std::fabs(a[r][k].lo_double()), std::fabs(a[r][k].hi_double()));
        if (mag > best) {
          best = mag;
          pivot = r;
        }
      }
      if (pivot < 0) {
        singular = true;
        break;
      }
      std::swap(a[k], a[pivot]);
      for (int i = k + 1; i < n; ++i) {
        Interval f = a[i][k] / a[k][k];
        for (int j = k; j <= n; ++j) a[i][j] = a[i][j] - f * a[k][j];
      }
    }
    if (singular) continue;
    std::vector<Interval> sol(n, Interval(prec));
    Interval sum = Interval::point(0, prec);
    for (int i = n - 1; i >= 0; --i) {
      Interval acc = a[i][n];
      for (int j = i + 1; j < n; ++j) acc = acc - a[i][j] * sol[j];
      sol[i] = acc / a[i][i];
      sum = sum + sol[i];
    }
    if (sum.width() <= target) return sum;
  }
  fail(ErrorCode::PossiblySingular, "similarity matrix is not certifiably invertible at this scale");
}

}  // namespace maglab
