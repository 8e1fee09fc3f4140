#include "interval.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "error.hpp"

namespace maglab {

void Interval::init(mpfr_prec_t prec) {
  prec_ = prec;
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(mpfr_prec_t prec) { init(prec); }

Interval::Interval(const Rational& x, mpfr_prec_t prec) {
  init(prec);
  if (x.is_small()) {
    mpfr_set_si(lo_, x.small_num(), MPFR_RNDD);
    mpfr_set_si(hi_, x.small_num(), MPFR_RNDU);
    mpfr_div_si(lo_, lo_, x.small_den(), MPFR_RNDD);
    mpfr_div_si(hi_, hi_, x.small_den(), MPFR_RNDU);
  } else {
    mpq_class q = x.to_mpq();
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
  }
}

Interval::Interval(double lo, double hi, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_d(lo_, lo, MPFR_RNDD);
  mpfr_set_d(hi_, hi, MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  init(other.prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other) {}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  mpfr_set_prec(lo_, other.prec_);
  mpfr_set_prec(hi_, other.prec_);
  prec_ = other.prec_;
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  std::swap(prec_, other.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::point(long value, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, value, MPFR_RNDD);
  mpfr_set_si(r.hi_, value, MPFR_RNDU);
  return r;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}
bool Interval::positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::intersects(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

bool Interval::contains(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.lo_) && mpfr_lessequal_p(other.hi_, hi_);
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_double() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  const mpfr_t* xs[2] = {&a.lo_, &a.hi_};
  const mpfr_t* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (auto* x : xs) {
    for (auto* y : ys) {
      mpfr_mul(t, *x, *y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *x, *y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) fail(ErrorCode::DivisionByZero, "interval division by an interval containing 0");
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  Interval inv(p);
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval Interval::exp() const {
  Interval r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) fail(ErrorCode::OutOfRange, "log of a non-positive interval");
  Interval r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

// Both functions are 1-Lipschitz: f([lo,hi]) lies within f(lo) +- (hi - lo).
Interval Interval::lipschitz_enclosure(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) const {
  Interval r(prec_);
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  fn(r.lo_, lo_, MPFR_RNDD);
  fn(r.hi_, lo_, MPFR_RNDU);
  mpfr_sub(r.lo_, r.lo_, w, MPFR_RNDD);
  mpfr_add(r.hi_, r.hi_, w, MPFR_RNDU);
  if (mpfr_cmp_si(r.lo_, -1) < 0) mpfr_set_si(r.lo_, -1, MPFR_RNDD);
  if (mpfr_cmp_si(r.hi_, 1) > 0) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
  mpfr_clear(w);
  return r;
}

Interval Interval::cos() const { return lipschitz_enclosure(mpfr_cos); }

Interval Interval::sin() const { return lipschitz_enclosure(mpfr_sin); }

Interval Interval::hull(const Interval& other) const {
  Interval r(std::max(prec_, other.prec_));
  mpfr_min(r.lo_, lo_, other.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, hi_, other.hi_, MPFR_RNDU);
  return r;
}

std::string Interval::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  std::string out = "[";
  mpfr_snprintf(buf.data(), buf.size(), "%.*RDg", digits, lo_);
  out += buf.data();
  out += ", ";
  mpfr_snprintf(buf.data(), buf.size(), "%.*RUg", digits, hi_);
  out += buf.data();
  out += "]";
  return out;
}

}  // namespace maglab
