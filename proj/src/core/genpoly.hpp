#pragma once

#include <map>
#include <string>
#include <vector>

#include "codec.hpp"
#include "scalar.hpp"

namespace maglab {

/// Finite sum of c * q^e with rational c and Scalar exponents e >= 0.
class GenPolynomial {
 public:
  using Terms = std::map<Scalar, Rational, ScalarLess>;

  GenPolynomial() = default;
  GenPolynomial(Rational constant);  // NOLINT
  static GenPolynomial monomial(const Scalar& exponent, const Rational& coeff = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Scalar& exponent) const;
  Rational constant_term() const { return coeff(Scalar(0)); }
  /// Term with the largest exponent in ScalarLess order. Requires non-zero.
  const std::pair<const Scalar, Rational>& leading() const;

  GenPolynomial operator-() const;
  friend GenPolynomial operator+(const GenPolynomial& a, const GenPolynomial& b);
  friend GenPolynomial operator-(const GenPolynomial& a, const GenPolynomial& b);
  friend GenPolynomial operator*(const GenPolynomial& a, const GenPolynomial& b);
  GenPolynomial& operator+=(const GenPolynomial& o);
  GenPolynomial& operator-=(const GenPolynomial& o);
  GenPolynomial scaled(const Rational& r) const;
  GenPolynomial shifted(const Scalar& e) const;  // q^e * this

  /// Terms with exponent <= L.
  GenPolynomial truncated(const Scalar& L, const Witness* witness = nullptr) const;

  friend bool operator==(const GenPolynomial& a, const GenPolynomial& b);

  /// Enclosure of the value at q = e^{-t}.
  Interval evaluate_at(const Rational& t, mpfr_prec_t prec, const Witness* witness = nullptr) const;

  std::string to_text() const;

 private:
  void add_term(const Scalar& e, const Rational& c);
  Terms terms_;
};

/// a / b when b divides a exactly. Throws Internal otherwise.
GenPolynomial exact_divide(const GenPolynomial& a, const GenPolynomial& b);

/// num / den with den's constant term normalised to 1.
class GenRational {
 public:
  GenRational() : num_(Rational(0)), den_(Rational(1)) {}
  GenRational(GenPolynomial num);  // NOLINT
  /// Throws ZeroConstantTerm when den has no constant term.
  GenRational(GenPolynomial num, GenPolynomial den);

  const GenPolynomial& num() const { return num_; }
  const GenPolynomial& den() const { return den_; }

  friend GenRational operator+(const GenRational& a, const GenRational& b);
  friend GenRational operator-(const GenRational& a, const GenRational& b);
  friend GenRational operator*(const GenRational& a, const GenRational& b);
  friend GenRational operator/(const GenRational& a, const GenRational& b);
  bool is_zero() const { return num_.is_zero(); }

  Interval evaluate_at(const Rational& t, mpfr_prec_t prec, const Witness* witness = nullptr) const;

 private:
  GenPolynomial num_;
  GenPolynomial den_;
};

/// num1 * den2 == num2 * den1.
bool gr_equal(const GenRational& a, const GenRational& b);

/// Truncation at exponent L of num * sum_k (-u)^k where den = 1 + u.
/// Throws ZeroConstantTerm if u has a constant part, NoWitness for formal
/// exponents without a witness.
GenPolynomial series(const GenRational& r, const Scalar& L, const Witness* witness = nullptr);

json encode_genpoly(const GenPolynomial& p);
GenPolynomial decode_genpoly(const json& j);

}  // namespace maglab
