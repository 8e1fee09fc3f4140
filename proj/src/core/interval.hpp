#pragma once

#include <mpfr.h>

#include <string>

#include "rational.hpp"

namespace maglab {

/// Closed real interval [lo, hi] with MPFR endpoints and outward rounding.
/// Every operation returns an enclosure of the exact result set.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Rational& x, mpfr_prec_t prec);
  Interval(double lo, double hi, mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval pi(mpfr_prec_t prec);
  static Interval point(long value, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

  bool contains_zero() const;
  bool positive() const;   // lo > 0
  bool negative() const;   // hi < 0
  bool intersects(const Interval& other) const;
  bool contains(const Interval& other) const;
  /// Upper bound on hi - lo.
  double width() const;
  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up
  double mid_double() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Requires 0 not in b.
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval exp() const;
  /// Requires lo > 0.
  Interval log() const;
  Interval cos() const;
  Interval sin() const;
  /// Convex hull.
  Interval hull(const Interval& other) const;

  /// Decimal rendering of both endpoints with `digits` significant digits.
  std::string to_string(int digits = 20) const;

 private:
  void init(mpfr_prec_t prec);
  Interval lipschitz_enclosure(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) const;
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace maglab
