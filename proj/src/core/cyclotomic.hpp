#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "interval.hpp"
#include "rational.hpp"

namespace maglab {

/// Largest conductor any cyclotomic computation may use. Defaults to 1000;
/// the MAGLAB_CONDUCTOR_CAP environment variable overrides the default.
int conductor_cap();
void set_conductor_cap(int cap);

int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree
/// first. Memoised; safe to call concurrently.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

/// Element of the real subfield of the m-th cyclotomic field, stored as its
/// coordinates in the power basis 1, z, ..., z^(phi(m)-1) with z = exp(2 pi i/m)
/// reduced modulo the m-th cyclotomic polynomial.
///
/// The conductor is kept canonical in the sense that m is never 2 mod 4
/// (Q(zeta_2k) = Q(zeta_k) for odd k). Equal values at different conductors
/// compare equal through their common multiple.
class CyclotomicReal {
 public:
  /// Validates the coefficient count and conjugation invariance.
  /// Throws BadLength, NotReal or ConductorCap.
  static CyclotomicReal make(int m, std::vector<Rational> coeffs);

  /// sum_k c_k zeta_m^k for exponents in Z; the caller guarantees the sum is
  /// real (it is checked in debug builds only).
  static CyclotomicReal from_root_sum(int m, const std::map<std::int64_t, Rational>& terms);

  /// 2 cos(2 pi k / m).
  static CyclotomicReal two_cos(int m, std::int64_t k);

  int conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coordinate; equals the value when is_rational().
  const Rational& constant() const { return c_.front(); }

  /// Re-expresses the element at conductor M (m must divide M).
  CyclotomicReal at_conductor(int M) const;
  /// Smallest conductor whose field contains the element.
  CyclotomicReal minimal() const;

  CyclotomicReal operator-() const;
  friend CyclotomicReal operator+(const CyclotomicReal& a, const CyclotomicReal& b);
  friend CyclotomicReal operator-(const CyclotomicReal& a, const CyclotomicReal& b);
  friend CyclotomicReal operator*(const CyclotomicReal& a, const CyclotomicReal& b);
  CyclotomicReal scaled(const Rational& r) const;
  CyclotomicReal plus(const Rational& r) const;
  CyclotomicReal inverse() const;

  friend bool operator==(const CyclotomicReal& a, const CyclotomicReal& b);

  /// Certified enclosure of the real value at the given working precision.
  Interval enclose(mpfr_prec_t prec) const;

 private:
  CyclotomicReal(int m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
  static std::pair<CyclotomicReal, CyclotomicReal> align(const CyclotomicReal& a, const CyclotomicReal& b);
  bool is_real() const;

  int m_ = 1;
  std::vector<Rational> c_{Rational(0)};
};

int lcm_conductor(int a, int b);
/// Drops a 2-mod-4 conductor to its odd half.
int canonical_conductor(int m);

}  // namespace maglab
