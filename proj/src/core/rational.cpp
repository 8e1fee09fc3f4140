#include "rational.hpp"

#include <limits>

#include "error.hpp"

namespace maglab {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool mpz_fits_int64(const mpz_class& z) {
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return z >= lo && z <= hi;
}

std::int64_t mpz_to_int64(const mpz_class& z) {
  // GMP longs are 64-bit on the supported platforms.
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) {
  mpq_class v(value);
  v.canonicalize();
  if (mpz_fits_int64(v.get_num()) && mpz_fits_int64(v.get_den())) {
    num_ = mpz_to_int64(v.get_num());
    den_ = mpz_to_int64(v.get_den());
  } else {
    big_ = std::make_shared<const mpq_class>(v);
  }
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  Rational r;
  if (fits64(num) && fits64(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
  } else {
    mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
    r.big_ = std::make_shared<const mpq_class>(q);
  }
  return r;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) fail(ErrorCode::Parse, "empty rational");
  auto valid_int = [](std::string_view s) {
    std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view ns = text.substr(0, slash);
  std::string_view ds = slash == std::string_view::npos ? std::string_view("1")
                                                        : text.substr(slash + 1);
  if (!valid_int(ns) || !valid_int(ds) || ds[0] == '-' || ds[0] == '+')
    fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  std::string nstr(ns[0] == '+' ? ns.substr(1) : ns);
  mpz_class n(nstr), d{std::string(ds)};
  if (d == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_from_i128(num_), mpz_from_i128(den_));
  return q;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_from_i128(num_);
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_from_i128(den_);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  return from_wide(-static_cast<i128>(num_), den_);
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (big_) return Rational(mpq_class(1 / *big_));
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return Rational::from_wide(static_cast<i128>(a.num_) - b.num_, a.den_);
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  if (!a.big_ && !b.big_)
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_,
                               static_cast<i128>(a.den_) * b.num_);
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a value fitting 64 bits is never stored big
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace maglab
