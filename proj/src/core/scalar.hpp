#pragma once

#include <string>
#include <variant>

#include "cyclotomic.hpp"
#include "formal.hpp"
#include "interval.hpp"
#include "rational.hpp"

namespace maglab {

enum class Backend { Rational, Cyclotomic, Formal };

/// Exact real number: a rational, an element of a real cyclotomic subfield, or
/// a formal linear combination of named symbols.
///
/// Values are normalised on construction (a cyclotomic or formal value that
/// happens to be rational is stored as a Rational), so the backend tag of
/// equal numbers agrees. Each non-formal value also carries a certified
/// double enclosure used to short-cut sign and order decisions.
class Scalar {
 public:
  Scalar() : v_(Rational(0)), lo_(0), hi_(0) {}
  Scalar(std::int64_t value) : Scalar(Rational(value)) {}  // NOLINT
  Scalar(int value) : Scalar(Rational(value)) {}           // NOLINT
  Scalar(Rational value);                                   // NOLINT
  Scalar(CyclotomicReal value);                             // NOLINT
  Scalar(FormalScalar value);                               // NOLINT

  static Scalar symbol(const std::string& name) { return Scalar(FormalScalar::symbol(name)); }

  Backend backend() const { return static_cast<Backend>(v_.index()); }
  bool is_rational() const { return v_.index() == 0; }
  bool is_cyclotomic() const { return v_.index() == 1; }
  bool is_formal() const { return v_.index() == 2; }
  bool is_zero() const { return is_rational() && rational().is_zero(); }

  const Rational& rational() const { return std::get<Rational>(v_); }
  const CyclotomicReal& cyclotomic() const { return std::get<CyclotomicReal>(v_); }
  const FormalScalar& formal() const { return std::get<FormalScalar>(v_); }

  /// Certified double bounds (infinite for formal values).
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Exact equality; values of different backends are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(CyclotomicReal value, double lo, double hi);
  void set_enclosure_from_scratch();

  std::variant<Rational, CyclotomicReal, FormalScalar> v_;
  double lo_;
  double hi_;
};

/// Sign of x. Zero is decided exactly; non-zero cyclotomic signs by interval
/// refinement at doubling precision. Formal values need a witness.
int sign(const Scalar& x, const Witness* witness = nullptr);

/// Numeric comparison: -1, 0 or +1. Formal operands need a witness unless
/// they are exactly equal.
int compare(const Scalar& a, const Scalar& b, const Witness* witness = nullptr);

/// Total order consistent with equality and usable without a witness: the
/// numeric order on rational/cyclotomic values and the structural
/// (lexicographic) order on formal values. Throws IncompatibleBackends when
/// asked to order a cyclotomic against a formal value.
int canonical_compare(const Scalar& a, const Scalar& b);

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return canonical_compare(a, b) < 0; }
};

/// Enclosure at working precision `prec`.
Interval enclose(const Scalar& x, mpfr_prec_t prec, const Witness* witness = nullptr);

/// Certified interval of width at most 2^-precision_bits containing x.
Interval approx(const Scalar& x, int precision_bits, const Witness* witness = nullptr);

/// x^z for integer z; negative z needs an invertible x.
Scalar pow(const Scalar& x, int z);

/// Diagonal length sin(i pi/n)/sin(pi/n) of the unit regular n-gon,
/// 1 <= i <= floor(n/2), n >= 3. Throws OutOfRange.
Scalar delta(int i, int n);

/// sin^2(k pi / n), exact.
Scalar sin_squared(int k, int n);

/// Exact non-negative square root of a non-negative rational, realised in a
/// cyclotomic field via quadratic Gauss sums.
Scalar sqrt_rational(const Rational& r);

/// Canonical compact text (rational "p/q", otherwise compact JSON).
std::string to_string(const Scalar& x);

}  // namespace maglab
