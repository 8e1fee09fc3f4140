#include "scalar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "codec.hpp"
#include "error.hpp"

namespace maglab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

void rational_bounds(const Rational& r, double& lo, double& hi) {
  if (r.is_zero()) {
    lo = hi = 0;
    return;
  }
  if (r.is_small()) {
    double v = static_cast<double>(r.small_num()) / static_cast<double>(r.small_den());
    lo = down(down(v));
    hi = up(up(v));
    return;
  }
  Interval i(r, 64);
  lo = i.lo_double();
  hi = i.hi_double();
}

bool tight(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) return false;
  double scale = std::max({1.0, std::fabs(lo), std::fabs(hi)});
  return hi - lo <= 1e-9 * scale;
}

[[noreturn]] void incompatible(const char* op) {
  fail(ErrorCode::IncompatibleBackends, std::string("cannot ") + op + " cyclotomic and formal values");
}

}  // namespace

Scalar::Scalar(Rational value) : v_(std::move(value)) {
  rational_bounds(rational(), lo_, hi_);
}

Scalar::Scalar(CyclotomicReal value) {
  if (value.is_rational()) {
    v_ = value.constant();
    rational_bounds(rational(), lo_, hi_);
  } else {
    v_ = std::move(value);
    set_enclosure_from_scratch();
  }
}

Scalar::Scalar(CyclotomicReal value, double lo, double hi) {
  if (value.is_rational()) {
    v_ = value.constant();
    rational_bounds(rational(), lo_, hi_);
    return;
  }
  v_ = std::move(value);
  if (tight(lo, hi)) {
    lo_ = lo;
    hi_ = hi;
  } else {
    set_enclosure_from_scratch();
  }
}

Scalar::Scalar(FormalScalar value) {
  if (value.is_constant()) {
    v_ = value.constant();
    rational_bounds(rational(), lo_, hi_);
  } else {
    v_ = std::move(value);
    lo_ = -kInf;
    hi_ = kInf;
  }
}

void Scalar::set_enclosure_from_scratch() {
  Interval i = cyclotomic().enclose(64);
  lo_ = i.lo_double();
  hi_ = i.hi_double();
}

Scalar Scalar::operator-() const {
  switch (backend()) {
    case Backend::Rational: return Scalar(-rational());
    case Backend::Cyclotomic: return Scalar(-cyclotomic(), -hi_, -lo_);
    case Backend::Formal: return Scalar(-formal());
  }
  return {};
}

namespace {

FormalScalar as_formal(const Scalar& s) {
  if (s.is_formal()) return s.formal();
  return FormalScalar(s.rational());
}

void mul_bounds(double alo, double ahi, double blo, double bhi, double& lo, double& hi) {
  double p[4] = {alo * blo, alo * bhi, ahi * blo, ahi * bhi};
  lo = down(*std::min_element(p, p + 4));
  hi = up(*std::max_element(p, p + 4));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return Scalar(a.rational() + b.rational());
  if (a.is_formal() || b.is_formal()) {
    if (a.is_cyclotomic() || b.is_cyclotomic()) incompatible("add");
    return Scalar(as_formal(a) + as_formal(b));
  }
  CyclotomicReal r = a.is_rational()   ? b.cyclotomic().plus(a.rational())
                     : b.is_rational() ? a.cyclotomic().plus(b.rational())
                                       : a.cyclotomic() + b.cyclotomic();
  return Scalar(std::move(r), down(a.lo_ + b.lo_), up(a.hi_ + b.hi_));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return Scalar(a.rational() * b.rational());
  if (a.is_formal() || b.is_formal()) {
    if (a.is_cyclotomic() || b.is_cyclotomic()) incompatible("multiply");
    if (a.is_formal() && b.is_formal())
      fail(ErrorCode::IncompatibleBackends, "product of two non-constant formal values is not linear");
    return a.is_formal() ? Scalar(a.formal().scaled(b.rational())) : Scalar(b.formal().scaled(a.rational()));
  }
  if (a.is_zero() || b.is_zero()) return Scalar(0);
  CyclotomicReal r = a.is_rational()   ? b.cyclotomic().scaled(a.rational())
                     : b.is_rational() ? a.cyclotomic().scaled(b.rational())
                                       : a.cyclotomic() * b.cyclotomic();
  double lo, hi;
  mul_bounds(a.lo_, a.hi_, b.lo_, b.hi_, lo, hi);
  return Scalar(std::move(r), lo, hi);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  if (a.is_rational() && b.is_rational()) return Scalar(a.rational() / b.rational());
  if (a.is_formal() || b.is_formal()) {
    if (a.is_cyclotomic() || b.is_cyclotomic()) incompatible("divide");
    if (b.is_formal()) fail(ErrorCode::IncompatibleBackends, "division by a non-constant formal value");
    return Scalar(a.formal().scaled(b.rational().inverse()));
  }
  if (b.is_rational()) {
    double lo, hi;
    Rational inv = b.rational().inverse();
    Scalar s(inv);
    mul_bounds(a.lo_, a.hi_, s.lo_, s.hi_, lo, hi);
    return Scalar(a.cyclotomic().scaled(inv), lo, hi);
  }
  CyclotomicReal inv = b.cyclotomic().inverse();
  CyclotomicReal r = a.is_rational() ? inv.scaled(a.rational()) : a.cyclotomic() * inv;
  return Scalar(std::move(r));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  switch (a.backend()) {
    case Backend::Rational: return a.rational() == b.rational();
    case Backend::Cyclotomic:
      if (a.hi_ < b.lo_ || b.hi_ < a.lo_) return false;
      return a.cyclotomic() == b.cyclotomic();
    case Backend::Formal: return a.formal() == b.formal();
  }
  return false;
}

Interval enclose(const Scalar& x, mpfr_prec_t prec, const Witness* witness) {
  switch (x.backend()) {
    case Backend::Rational: return Interval(x.rational(), prec);
    case Backend::Cyclotomic: return x.cyclotomic().enclose(prec);
    case Backend::Formal:
      if (!witness) fail(ErrorCode::NoWitness, "formal value needs a witness assignment");
      return Interval(x.formal().evaluate(*witness), prec);
  }
  return Interval(prec);
}

int sign(const Scalar& x, const Witness* witness) {
  switch (x.backend()) {
    case Backend::Rational: return x.rational().sign();
    case Backend::Formal:
      if (!witness) fail(ErrorCode::NoWitness, "sign of a formal value needs a witness assignment");
      return x.formal().evaluate(*witness).sign();
    case Backend::Cyclotomic: break;
  }
  if (x.lo() > 0) return 1;
  if (x.hi() < 0) return -1;
  // Non-zero by normalisation, so refinement terminates.
  for (mpfr_prec_t prec = 128; prec <= (1 << 22); prec *= 2) {
    Interval i = x.cyclotomic().enclose(prec);
    if (i.positive()) return 1;
    if (i.negative()) return -1;
  }
  fail(ErrorCode::Internal, "sign refinement did not terminate");
}

int compare(const Scalar& a, const Scalar& b, const Witness* witness) {
  if (a.is_formal() || b.is_formal()) {
    if (a == b) return 0;
    if (a.is_cyclotomic() || b.is_cyclotomic()) incompatible("compare");
    if (!witness) fail(ErrorCode::NoWitness, "ordering formal values needs a witness assignment");
    Rational x = as_formal(a).evaluate(*witness);
    Rational y = as_formal(b).evaluate(*witness);
    return x == y ? 0 : (x < y ? -1 : 1);
  }
  if (a.hi() < b.lo()) return -1;
  if (b.hi() < a.lo()) return 1;
  if (a.is_rational() && b.is_rational()) {
    auto c = a.rational() <=> b.rational();
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (a == b) return 0;
  return sign(a - b);
}

int canonical_compare(const Scalar& a, const Scalar& b) {
  if (a.is_formal() || b.is_formal()) {
    if (a.is_cyclotomic() || b.is_cyclotomic()) incompatible("order");
    return structural_compare(as_formal(a), as_formal(b));
  }
  return compare(a, b);
}

Interval approx(const Scalar& x, int precision_bits, const Witness* witness) {
  if (precision_bits < 1) fail(ErrorCode::InvalidArgument, "precision must be positive");
  double target = std::ldexp(1.0, -precision_bits);
  for (mpfr_prec_t prec = precision_bits + 32; prec <= (1 << 22); prec *= 2) {
    Interval i = enclose(x, prec, witness);
    if (i.width() <= target) return i;
  }
  fail(ErrorCode::Internal, "approximation did not converge");
}

Scalar pow(const Scalar& x, int z) {
  if (z < 0) return Scalar(1) / pow(x, -z);
  if (z == 0) return Scalar(1);
  if (x.is_formal()) {
    if (z == 1) return x;
    fail(ErrorCode::IncompatibleBackends, "non-linear power of a formal value");
  }
  Scalar result(1), base = x;
  while (z > 0) {
    if (z & 1) result = result * base;
    z >>= 1;
    if (z) base = base * base;
  }
  return result;
}

Scalar delta(int i, int n) {
  if (n < 3) fail(ErrorCode::OutOfRange, "delta needs n >= 3");
  if (i < 1 || i > n / 2) fail(ErrorCode::OutOfRange, "delta index must lie in 1..floor(n/2)");
  // sin(i t)/sin(t) = sum_{k=0}^{i-1} e^{i (i-1-2k) t} with t = pi/n.
  std::map<std::int64_t, Rational> terms;
  for (int k = 0; k < i; ++k) terms[i - 1 - 2 * k] += Rational(1);
  return Scalar(CyclotomicReal::from_root_sum(2 * n, terms));
}

Scalar sin_squared(int k, int n) {
  if (n < 1) fail(ErrorCode::OutOfRange, "sin_squared needs n >= 1");
  // sin^2(k pi/n) = (2 - zeta_n^k - zeta_n^-k) / 4.
  std::map<std::int64_t, Rational> terms;
  terms[0] += Rational(1, 2);
  terms[k] += Rational(-1, 4);
  terms[-k] += Rational(-1, 4);
  return Scalar(CyclotomicReal::from_root_sum(n, terms));
}

namespace {

int legendre(long a, long p) {
  long r = 1, base = ((a % p) + p) % p, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

Scalar sqrt_prime(long p) {
  if (p == 2) return Scalar(CyclotomicReal::two_cos(8, 1));
  std::map<std::int64_t, Rational> terms;
  if (p % 4 == 1) {
    for (long k = 1; k < p; ++k) terms[k] += Rational(legendre(k, p));
    return Scalar(CyclotomicReal::from_root_sum(static_cast<int>(p), terms));
  }
  // p = 3 mod 4: the Gauss sum is i sqrt(p), so sqrt(p) = -i * sum.
  for (long k = 1; k < p; ++k) terms[p + 4 * k] += Rational(-legendre(k, p));
  return Scalar(CyclotomicReal::from_root_sum(static_cast<int>(4 * p), terms));
}

}  // namespace

Scalar sqrt_rational(const Rational& r) {
  if (r.sign() < 0) fail(ErrorCode::OutOfRange, "square root of a negative rational");
  if (r.is_zero()) return Scalar(0);
  mpz_class n = r.numerator() * r.denominator();
  mpz_class den = r.denominator();
  mpz_class square = 1, free = 1;
  mpz_class x = n;
  for (unsigned long p = 2; mpz_class(p) * p <= x; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
      x /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2) free *= p;
    if (p > 1000000) fail(ErrorCode::TooLarge, "square root needs a factorisation beyond the trial bound");
  }
  free *= x;
  Scalar out(Rational(mpq_class(square, den)));
  if (free == 1) return out;
  if (!free.fits_slong_p() || free.get_si() > conductor_cap())
    fail(ErrorCode::ConductorCap, "square root would exceed the conductor cap");
  long f = free.get_si();
  Scalar root(1);
  for (long p = 2; p <= f; ++p) {
    if (f % p == 0) {
      root = root * sqrt_prime(p);
      f /= p;
    }
  }
  return out * root;
}

std::string to_string(const Scalar& x) {
  if (x.is_rational()) return x.rational().to_string();
  return encode_scalar(x).dump();
}

}  // namespace maglab
