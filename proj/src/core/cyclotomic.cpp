#include "cyclotomic.hpp"

#include <atomic>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

#include "error.hpp"

namespace maglab {

namespace {

int initial_cap() {
  if (const char* env = std::getenv("MAGLAB_CONDUCTOR_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000000) return static_cast<int>(v);
  }
  return 1000;
}

std::atomic<int>& cap_storage() {
  static std::atomic<int> cap{initial_cap()};
  return cap;
}

void check_cap(int m) {
  if (m > conductor_cap())
    fail(ErrorCode::ConductorCap, "conductor " + std::to_string(m) + " exceeds cap " +
                                      std::to_string(conductor_cap()));
}

// Memo table keyed by int with stable value addresses; concurrent readers,
// idempotent inserts.
template <class V>
class Memo {
 public:
  template <class Make>
  const V& get(int key, Make make) {
    {
      std::shared_lock lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return *it->second;
    }
    auto value = std::make_unique<V>(make());
    std::unique_lock lock(mu_);
    auto [it, inserted] = table_.try_emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<int, std::unique_ptr<V>> table_;
};

using IntPoly = std::vector<std::int64_t>;

IntPoly exact_divide(IntPoly num, const IntPoly& den) {
  // den is monic.
  std::size_t dn = den.size() - 1;
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

struct PowerTable {
  int m = 1;
  int phi = 1;
  // powers[k] = z^k mod Phi_m, k in [0, m).
  std::vector<IntPoly> powers;
};

const PowerTable& power_table(int m) {
  static Memo<PowerTable> memo;
  return memo.get(m, [m] {
    PowerTable t;
    t.m = m;
    const IntPoly& phi_poly = cyclotomic_polynomial(m);
    t.phi = static_cast<int>(phi_poly.size()) - 1;
    t.powers.reserve(static_cast<std::size_t>(m));
    IntPoly cur(static_cast<std::size_t>(t.phi), 0);
    cur[0] = 1;
    for (int k = 0; k < m; ++k) {
      t.powers.push_back(cur);
      // multiply by z and reduce
      std::int64_t top = cur.back();
      for (int i = t.phi - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      cur[0] = 0;
      if (top != 0)
        for (int i = 0; i < t.phi; ++i) cur[static_cast<std::size_t>(i)] -= top * phi_poly[static_cast<std::size_t>(i)];
    }
    return t;
  });
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void add_scaled_power(std::vector<Rational>& acc, const PowerTable& t, std::int64_t k, const Rational& c) {
  if (c.is_zero()) return;
  const IntPoly& p = t.powers[static_cast<std::size_t>(mod(k, t.m))];
  for (int i = 0; i < t.phi; ++i) {
    std::int64_t v = p[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    acc[static_cast<std::size_t>(i)] += c * Rational(v);
  }
}

// Polynomials over Q, lowest degree first, no trailing zeros (empty == 0).
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Rational lead_inv = b.back().inverse();
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

}  // namespace

int conductor_cap() { return cap_storage().load(); }

void set_conductor_cap(int cap) {
  if (cap < 1) fail(ErrorCode::InvalidArgument, "conductor cap must be positive");
  cap_storage().store(cap);
}

int euler_phi(int m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "euler_phi of non-positive integer");
  int result = m;
  int x = m;
  for (int p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      result -= result / p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  static Memo<IntPoly> memo;
  if (m < 1) fail(ErrorCode::InvalidArgument, "cyclotomic polynomial index must be positive");
  check_cap(m);
  return memo.get(m, [m] {
    IntPoly p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d)
      if (m % d == 0) p = exact_divide(p, cyclotomic_polynomial(d));
    return p;
  });
}

int canonical_conductor(int m) { return (m % 4 == 2) ? m / 2 : m; }

int lcm_conductor(int a, int b) {
  int l = std::lcm(a, b);
  check_cap(l);
  return canonical_conductor(l);
}

CyclotomicReal CyclotomicReal::make(int m, std::vector<Rational> coeffs) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "conductor must be positive");
  check_cap(m);
  if (static_cast<int>(coeffs.size()) != euler_phi(m))
    fail(ErrorCode::BadLength, "conductor " + std::to_string(m) + " needs " + std::to_string(euler_phi(m)) +
                                   " coefficients, got " + std::to_string(coeffs.size()));
  CyclotomicReal x(m, std::move(coeffs));
  if (!x.is_real()) fail(ErrorCode::NotReal, "element is not fixed by complex conjugation");
  int c = canonical_conductor(m);
  if (c != m) {
    std::map<std::int64_t, Rational> terms;
    for (std::size_t k = 0; k < x.c_.size(); ++k)
      if (!x.c_[k].is_zero()) terms[static_cast<std::int64_t>(k)] = x.c_[k];
    return from_root_sum(m, terms);
  }
  return x;
}

CyclotomicReal CyclotomicReal::from_root_sum(int m, const std::map<std::int64_t, Rational>& terms) {
  check_cap(m);
  std::map<std::int64_t, Rational> t = terms;
  if (m % 4 == 2) {
    // zeta_m = -zeta_h^((h+1)/2) with h = m/2 odd.
    std::int64_t h = m / 2;
    std::map<std::int64_t, Rational> moved;
    for (auto& [k, c] : t) {
      std::int64_t kk = mod(k, m);
      Rational cc = (kk % 2 == 0) ? c : -c;
      moved[mod(kk * ((h + 1) / 2), h)] += cc;
    }
    t = std::move(moved);
    m = static_cast<int>(h);
  }
  const PowerTable& table = power_table(m);
  std::vector<Rational> acc(static_cast<std::size_t>(table.phi));
  for (auto& [k, c] : t) add_scaled_power(acc, table, k, c);
  return CyclotomicReal(m, std::move(acc));
}

CyclotomicReal CyclotomicReal::two_cos(int m, std::int64_t k) {
  std::map<std::int64_t, Rational> terms;
  terms[mod(k, m)] += Rational(1);
  terms[mod(-k, m)] += Rational(1);
  return from_root_sum(m, terms);
}

bool CyclotomicReal::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool CyclotomicReal::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool CyclotomicReal::is_real() const {
  const PowerTable& t = power_table(m_);
  std::vector<Rational> conj(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) add_scaled_power(conj, t, -static_cast<std::int64_t>(k), c_[k]);
  return conj == c_;
}

CyclotomicReal CyclotomicReal::at_conductor(int M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) fail(ErrorCode::Internal, "conductor " + std::to_string(m_) + " does not divide " + std::to_string(M));
  check_cap(M);
  const PowerTable& t = power_table(M);
  std::vector<Rational> acc(static_cast<std::size_t>(t.phi));
  std::int64_t step = M / m_;
  for (std::size_t k = 0; k < c_.size(); ++k) add_scaled_power(acc, t, static_cast<std::int64_t>(k) * step, c_[k]);
  return CyclotomicReal(M, std::move(acc));
}

CyclotomicReal CyclotomicReal::minimal() const {
  if (is_rational()) return CyclotomicReal(1, {c_.front()});
  const PowerTable& big = power_table(m_);
  for (int d = 3; d < m_; ++d) {
    if (m_ % d != 0 || d % 4 == 2) continue;
    int phi_d = euler_phi(d);
    int step = m_ / d;
    // Solve E y = x where column j of E is z_d^j embedded at conductor m.
    std::size_t rows = static_cast<std::size_t>(big.phi);
    std::size_t cols = static_cast<std::size_t>(phi_d);
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
      const IntPoly& col = big.powers[static_cast<std::size_t>(mod(static_cast<std::int64_t>(j) * step, m_))];
      for (std::size_t i = 0; i < rows; ++i) a[i][j] = Rational(col[i]);
    }
    for (std::size_t i = 0; i < rows; ++i) a[i][cols] = c_[i];
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && a[p][c].is_zero()) ++p;
      if (p == rows) continue;
      std::swap(a[p], a[r]);
      Rational inv = a[r][c].inverse();
      for (std::size_t k = c; k <= cols; ++k) a[r][k] *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || a[i][c].is_zero()) continue;
        Rational f = a[i][c];
        for (std::size_t k = c; k <= cols; ++k) a[i][k] -= f * a[r][k];
      }
      pivot_col.push_back(c);
      ++r;
    }
    bool consistent = true;
    for (std::size_t i = r; i < rows; ++i)
      if (!a[i][cols].is_zero()) consistent = false;
    if (!consistent) continue;
    std::vector<Rational> y(cols);
    for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = a[i][cols];
    return CyclotomicReal(d, std::move(y));
  }
  return *this;
}

std::pair<CyclotomicReal, CyclotomicReal> CyclotomicReal::align(const CyclotomicReal& a, const CyclotomicReal& b) {
  if (a.m_ == b.m_) return {a, b};
  int M = std::lcm(a.m_, b.m_);
  check_cap(M);
  return {a.at_conductor(M), b.at_conductor(M)};
}

CyclotomicReal CyclotomicReal::operator-() const {
  std::vector<Rational> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return CyclotomicReal(m_, std::move(r));
}

CyclotomicReal operator+(const CyclotomicReal& a, const CyclotomicReal& b) {
  if (a.m_ != b.m_) {
    auto [x, y] = CyclotomicReal::align(a, b);
    return x + y;
  }
  std::vector<Rational> r(a.c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] + b.c_[i];
  return CyclotomicReal(a.m_, std::move(r));
}

CyclotomicReal operator-(const CyclotomicReal& a, const CyclotomicReal& b) {
  if (a.m_ != b.m_) {
    auto [x, y] = CyclotomicReal::align(a, b);
    return x - y;
  }
  std::vector<Rational> r(a.c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] - b.c_[i];
  return CyclotomicReal(a.m_, std::move(r));
}

CyclotomicReal operator*(const CyclotomicReal& a, const CyclotomicReal& b) {
  if (a.m_ != b.m_) {
    auto [x, y] = CyclotomicReal::align(a, b);
    return x * y;
  }
  const PowerTable& t = power_table(a.m_);
  std::size_t n = a.c_.size();
  std::vector<Rational> full(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      full[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rational> r(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t k = n; k < full.size(); ++k) add_scaled_power(r, t, static_cast<std::int64_t>(k), full[k]);
  return CyclotomicReal(a.m_, std::move(r));
}

CyclotomicReal CyclotomicReal::scaled(const Rational& s) const {
  std::vector<Rational> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return CyclotomicReal(m_, std::move(r));
}

CyclotomicReal CyclotomicReal::plus(const Rational& s) const {
  CyclotomicReal r = *this;
  r.c_[0] += s;
  return r;
}

CyclotomicReal CyclotomicReal::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero cyclotomic element");
  const IntPoly& phi = cyclotomic_polynomial(m_);
  QPoly modulus;
  for (auto v : phi) modulus.emplace_back(v);
  QPoly a = c_;
  trim(a);
  // Extended Euclid: track s with s * a == r (mod modulus).
  QPoly r0 = modulus, r1 = a;
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, rem;
    divmod(r0, r1, q, rem);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) fail(ErrorCode::Internal, "cyclotomic inverse: gcd is not constant");
  Rational inv_g = r0[0].inverse();
  QPoly q, rem;
  divmod(s0, modulus, q, rem);
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] * inv_g;
  return CyclotomicReal(m_, std::move(out));
}

bool operator==(const CyclotomicReal& a, const CyclotomicReal& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  auto [x, y] = CyclotomicReal::align(a, b);
  return x.c_ == y.c_;
}

namespace {

struct CosKey {
  int m;
  mpfr_prec_t prec;
  bool operator<(const CosKey& o) const { return m != o.m ? m < o.m : prec < o.prec; }
};

const std::vector<Interval>& cos_table(int m, mpfr_prec_t prec) {
  static std::shared_mutex mu;
  static std::map<CosKey, std::unique_ptr<std::vector<Interval>>> table;
  CosKey key{m, prec};
  {
    std::shared_lock lock(mu);
    auto it = table.find(key);
    if (it != table.end()) return *it->second;
  }
  auto values = std::make_unique<std::vector<Interval>>();
  int phi = euler_phi(m);
  mpfr_prec_t work = prec + 16;
  Interval two_pi = Interval::pi(work) * Interval::point(2, work);
  Interval denom = Interval::point(m, work);
  for (int k = 0; k < phi; ++k) {
    Interval arg = two_pi * Interval::point(k, work) / denom;
    values->push_back(arg.cos());
  }
  std::unique_lock lock(mu);
  auto [it, inserted] = table.try_emplace(key, std::move(values));
  return *it->second;
}

}  // namespace

Interval CyclotomicReal::enclose(mpfr_prec_t prec) const {
  const std::vector<Interval>& cs = cos_table(m_, prec);
  Interval acc(Rational(0), prec + 16);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    acc = acc + cs[k] * Interval(c_[k], prec + 16);
  }
  return acc;
}

}  // namespace maglab
