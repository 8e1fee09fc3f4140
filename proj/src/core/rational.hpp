#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace maglab {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger spills into a shared, immutable GMP rational. Copies are
/// cheap and instances are safe to share across threads.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of literals
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  /// Parses "p", "-p" or "p/q" (whitespace-free). Throws Error(Parse).
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const;

  mpq_class to_mpq() const;
  /// Nearest double; only for diagnostics and seeding enclosures.
  double to_double() const;
  /// Canonical text: "p" when the denominator is 1, "p/q" otherwise.
  std::string to_string() const;

  mpz_class numerator() const;
  mpz_class denominator() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  bool is_small() const { return !big_; }
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Rational abs(const Rational& x);

}  // namespace maglab
