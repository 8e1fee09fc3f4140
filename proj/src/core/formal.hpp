#pragma once

#include <map>
#include <string>

#include "rational.hpp"

namespace maglab {

/// Assignment of positive rational values to formal symbols, used to decide
/// order questions (signs, truncation) on the formal backend.
using Witness = std::map<std::string, Rational>;

/// const + sum_s coeff_s * s over named symbols; a vector in Q^(1 + #symbols).
class FormalScalar {
 public:
  FormalScalar() = default;
  explicit FormalScalar(Rational constant) : const_(std::move(constant)) {}
  static FormalScalar symbol(const std::string& name);
  FormalScalar(Rational constant, std::map<std::string, Rational> syms);

  const Rational& constant() const { return const_; }
  const std::map<std::string, Rational>& syms() const { return syms_; }
  bool is_constant() const { return syms_.empty(); }

  FormalScalar operator-() const;
  friend FormalScalar operator+(const FormalScalar& a, const FormalScalar& b);
  friend FormalScalar operator-(const FormalScalar& a, const FormalScalar& b);
  FormalScalar scaled(const Rational& r) const;

  /// Value under the witness. Throws NoWitness when a symbol is unassigned.
  Rational evaluate(const Witness& w) const;

  friend bool operator==(const FormalScalar& a, const FormalScalar& b) = default;
  /// Lexicographic order on (const, coefficients by symbol name); compatible
  /// with addition, so usable as a monomial order.
  friend int structural_compare(const FormalScalar& a, const FormalScalar& b);

 private:
  Rational const_;
  std::map<std::string, Rational> syms_;
};

}  // namespace maglab
