#include "metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "error.hpp"

namespace maglab {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::vector<Scalar>> dist, std::string label,
                                     std::optional<Witness> witness)
    : dist_(std::move(dist)), label_(std::move(label)), witness_(std::move(witness)) {
  if (dist_.empty()) fail(ErrorCode::BadN, "a metric space needs at least one point");
  for (const auto& row : dist_)
    if (row.size() != dist_.size()) fail(ErrorCode::BadLength, "distance matrix is not square");
  if (witness_)
    for (const auto& [name, value] : *witness_)
      if (value.sign() <= 0) fail(ErrorCode::InvalidArgument, "witness value for '" + name + "' must be positive");
}

Scalar FiniteMetricSpace::max_distance() const {
  Scalar best(0);
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (compare(dist_[i][j], best, witness_ptr()) > 0) best = dist_[i][j];
  return best;
}

int index_abs(long long i, int n) {
  if (n <= 0) fail(ErrorCode::BadN, "index_abs needs n > 0");
  long long r = ((i % n) + n) % n;
  return static_cast<int>(std::min<long long>(r, n - r));
}

namespace {

// a <= b + c
bool le_sum(const Scalar& a, const Scalar& b, const Scalar& c, const Witness* w) {
  if (!a.is_formal() && !b.is_formal() && !c.is_formal()) {
    double s = b.lo() + c.lo();
    if (a.hi() < std::nextafter(s, -1e300)) return true;
    double t = b.hi() + c.hi();
    if (a.lo() > std::nextafter(t, 1e300)) return false;
  }
  return compare(a, b + c, w) <= 0;
}

}  // namespace

MetricReport validate_metric(const FiniteMetricSpace& x, const Witness* witness) {
  const Witness* w = witness ? witness : x.witness_ptr();
  MetricReport r;
  int n = x.n();
  for (int i = 0; i < n; ++i) {
    if (!x.d(i, i).is_zero()) r.nonzero_diagonal.push_back(i + 1);
    for (int j = i + 1; j < n; ++j) {
      if (!(x.d(i, j) == x.d(j, i))) r.asymmetric.emplace_back(i + 1, j + 1);
      if (sign(x.d(i, j), w) <= 0) r.nonpositive.emplace_back(i + 1, j + 1);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (!le_sum(x.d(i, k), x.d(i, j), x.d(j, k), w)) r.triangle.push_back({i + 1, j + 1, k + 1});
      }
  return r;
}

std::vector<int> intern_values(const std::vector<Scalar>& values, std::vector<Scalar>* distinct) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return canonical_compare(values[a], values[b]) < 0; });
  std::vector<int> ids(values.size());
  int next = -1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || !(values[order[k]] == values[order[k - 1]])) {
      ++next;
      if (distinct) distinct->push_back(values[order[k]]);
    }
    ids[order[k]] = next;
  }
  return ids;
}

EdgeMultiset::EdgeMultiset(std::vector<Scalar> values) {
  std::vector<Scalar> distinct;
  std::vector<int> ids = intern_values(values, &distinct);
  std::vector<int> counts(distinct.size(), 0);
  for (int id : ids) ++counts[id];
  for (std::size_t k = 0; k < distinct.size(); ++k) entries_.emplace_back(distinct[k], counts[k]);
}

int EdgeMultiset::total() const {
  int t = 0;
  for (const auto& e : entries_) t += e.second;
  return t;
}

EdgeMultiset row_multiset(const FiniteMetricSpace& x, int i) {
  if (i < 0 || i >= x.n()) fail(ErrorCode::OutOfRange, "row index out of range");
  std::vector<Scalar> v;
  for (int j = 0; j < x.n(); ++j)
    if (j != i) v.push_back(x.d(i, j));
  return EdgeMultiset(std::move(v));
}

EdgeMultiset edge_multiset(const FiniteMetricSpace& x) {
  std::vector<Scalar> v;
  for (int i = 0; i < x.n(); ++i)
    for (int j = i + 1; j < x.n(); ++j) v.push_back(x.d(i, j));
  return EdgeMultiset(std::move(v));
}

namespace {

// Off-diagonal distance ids for one or two spaces sharing a value table.
struct IdMatrix {
  int n;
  std::vector<int> ids;
  int at(int i, int j) const { return ids[i * n + j]; }
};

std::vector<IdMatrix> intern_spaces(const std::vector<const FiniteMetricSpace*>& spaces) {
  std::vector<Scalar> all;
  for (auto* s : spaces)
    for (int i = 0; i < s->n(); ++i)
      for (int j = 0; j < s->n(); ++j) all.push_back(s->d(i, j));
  std::vector<int> ids = intern_values(all);
  std::vector<IdMatrix> out;
  std::size_t pos = 0;
  for (auto* s : spaces) {
    IdMatrix m{s->n(), {}};
    m.ids.assign(ids.begin() + pos, ids.begin() + pos + s->n() * s->n());
    pos += s->n() * s->n();
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<int> row_signature(const IdMatrix& m, int i) {
  std::vector<int> r;
  for (int j = 0; j < m.n; ++j)
    if (j != i) r.push_back(m.at(i, j));
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<std::array<int, 3>> triangle_types(const IdMatrix& m) {
  std::vector<std::array<int, 3>> t;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      for (int k = j + 1; k < m.n; ++k) {
        std::array<int, 3> a{m.at(i, j), m.at(i, k), m.at(j, k)};
        std::sort(a.begin(), a.end());
        t.push_back(a);
      }
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

std::optional<EdgeMultiset> quasi_homog_type(const FiniteMetricSpace& x) {
  if (x.n() == 1) return EdgeMultiset();
  auto m = intern_spaces({&x}).front();
  auto first = row_signature(m, 0);
  for (int i = 1; i < x.n(); ++i)
    if (row_signature(m, i) != first) return std::nullopt;
  return row_multiset(x, 0);
}

Scalar CircularType::at(long long i) const {
  int k = index_abs(i, n);
  return k == 0 ? Scalar(0) : d.at(k - 1);
}

std::optional<std::pair<int, int>> circular_type_violation(const CircularType& t, const Witness* witness) {
  int h = t.n / 2;
  if (static_cast<int>(t.d.size()) != h) fail(ErrorCode::BadLength, "circular type needs floor(n/2) entries");
  if (h >= 1 && sign(t.d[0], witness) <= 0) return std::make_pair(0, 0);
  for (int i = 1; i < h; ++i)
    if (compare(t.d[i - 1], t.d[i], witness) >= 0) return std::make_pair(i, 0);
  for (int i = 1; i <= h; ++i)
    for (int j = i; j <= h; ++j)
      if (!le_sum(t.at(i + j), t.at(i), t.at(j), witness)) return std::make_pair(i, j);
  return std::nullopt;
}

std::optional<CircularType> circular_type(const FiniteMetricSpace& x, int cap) {
  int n = x.n();
  if (n > cap) fail(ErrorCode::TooLarge, "circular_type search is capped at n=" + std::to_string(cap));
  if (n < 3) return std::nullopt;
  std::vector<Scalar> all;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) all.push_back(x.d(i, j));
  std::vector<Scalar> distinct;
  std::vector<int> flat = intern_values(all, &distinct);
  IdMatrix m{n, flat};
  auto sig = row_signature(m, 0);
  for (int i = 1; i < n; ++i)
    if (row_signature(m, i) != sig) return std::nullopt;

  // Row pattern: each d_1..d_{h'} twice, plus d_{n/2} once when n is even.
  int h = n / 2;
  std::vector<int> type_ids;
  std::map<int, int> counts;
  for (int id : sig) ++counts[id];
  for (auto [id, c] : counts) type_ids.push_back(id);
  if (static_cast<int>(type_ids.size()) != h) return std::nullopt;
  for (int k = 0; k < h; ++k) {
    int want = (n % 2 == 0 && k == h - 1) ? 1 : 2;
    if (counts[type_ids[k]] != want) return std::nullopt;
  }
  // ids follow numeric order, so type_ids[k] is d_{k+1}.
  std::vector<int> order{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  auto type_id = [&](int diff) { return type_ids[index_abs(diff, n) - 1]; };
  std::function<bool()> dfs = [&]() {
    int pos = static_cast<int>(order.size());
    if (pos == n) return true;
    for (int p = 0; p < n; ++p) {
      if (used[p]) continue;
      bool fits = true;
      for (int q = 0; q < pos && fits; ++q) fits = m.at(order[q], p) == type_id(pos - q);
      if (!fits) continue;
      used[p] = 1;
      order.push_back(p);
      if (dfs()) return true;
      order.pop_back();
      used[p] = 0;
    }
    return false;
  };
  if (!dfs()) return std::nullopt;
  CircularType t{n, {}};
  for (int k = 0; k < h; ++k) t.d.push_back(distinct[type_ids[k]]);
  return t;
}

std::optional<std::vector<int>> are_isometric(const FiniteMetricSpace& x, const FiniteMetricSpace& y, int cap) {
  if (x.n() != y.n()) return std::nullopt;
  int n = x.n();
  auto ms = intern_spaces({&x, &y});
  const IdMatrix& a = ms[0];
  const IdMatrix& b = ms[1];
  std::vector<std::vector<int>> sa(n), sb(n);
  for (int i = 0; i < n; ++i) {
    sa[i] = row_signature(a, i);
    sb[i] = row_signature(b, i);
  }
  {
    auto ra = sa, rb = sb;
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    if (ra != rb) return std::nullopt;
  }
  if (triangle_types(a) != triangle_types(b)) return std::nullopt;
  if (n > cap) fail(ErrorCode::TooLarge, "isometry search is capped at n=" + std::to_string(cap));

  std::vector<int> perm;
  std::vector<char> used(n, 0);
  std::function<bool()> dfs = [&]() {
    int i = static_cast<int>(perm.size());
    if (i == n) return true;
    for (int p = 0; p < n; ++p) {
      if (used[p] || sa[i] != sb[p]) continue;
      bool fits = true;
      for (int q = 0; q < i && fits; ++q) fits = a.at(q, i) == b.at(perm[q], p);
      if (!fits) continue;
      used[p] = 1;
      perm.push_back(p);
      if (dfs()) return true;
      perm.pop_back();
      used[p] = 0;
    }
    return false;
  };
  if (!dfs()) return std::nullopt;
  return perm;
}

}  // namespace maglab
