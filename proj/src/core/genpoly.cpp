#include "genpoly.hpp"

#include "error.hpp"

namespace maglab {

GenPolynomial::GenPolynomial(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(Scalar(0), std::move(constant));
}

GenPolynomial GenPolynomial::monomial(const Scalar& exponent, const Rational& coeff) {
  GenPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

void GenPolynomial::add_term(const Scalar& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational GenPolynomial::coeff(const Scalar& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Scalar, Rational>& GenPolynomial::leading() const {
  if (terms_.empty()) fail(ErrorCode::Internal, "leading term of the zero polynomial");
  return *terms_.rbegin();
}

GenPolynomial GenPolynomial::operator-() const { return scaled(Rational(-1)); }

GenPolynomial& GenPolynomial::operator+=(const GenPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GenPolynomial& GenPolynomial::operator-=(const GenPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GenPolynomial operator+(const GenPolynomial& a, const GenPolynomial& b) {
  GenPolynomial r = a;
  return r += b;
}

GenPolynomial operator-(const GenPolynomial& a, const GenPolynomial& b) {
  GenPolynomial r = a;
  return r -= b;
}

GenPolynomial operator*(const GenPolynomial& a, const GenPolynomial& b) {
  GenPolynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

GenPolynomial GenPolynomial::scaled(const Rational& r) const {
  GenPolynomial out;
  if (r.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * r);
  return out;
}

GenPolynomial GenPolynomial::shifted(const Scalar& s) const {
  GenPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + s, c);
  return out;
}

GenPolynomial GenPolynomial::truncated(const Scalar& L, const Witness* witness) const {
  GenPolynomial out;
  for (const auto& [e, c] : terms_) {
    if (compare(e, L, witness) > 0) continue;
    out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

bool operator==(const GenPolynomial& a, const GenPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  return true;
}

Interval GenPolynomial::evaluate_at(const Rational& t, mpfr_prec_t prec, const Witness* witness) const {
  Interval acc(Rational(0), prec);
  Interval tt(t, prec);
  for (const auto& [e, c] : terms_) {
    Interval x = (-(enclose(e, prec, witness) * tt)).exp();
    acc = acc + Interval(c, prec) * x;
  }
  return acc;
}

std::string GenPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_string();
    if (first) {
      out += coeff;
    } else if (c.sign() < 0) {
      out += " - " + (-c).to_string();
    } else {
      out += " + " + coeff;
    }
    if (!e.is_zero()) out += "*q^{" + to_string(e) + "}";
    first = false;
  }
  return out;
}

GenPolynomial exact_divide(const GenPolynomial& a, const GenPolynomial& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
  GenPolynomial rest = a, quotient;
  const auto& [eb, cb] = b.leading();
  ScalarLess less;
  for (std::size_t guard = 0; !rest.is_zero(); ++guard) {
    const auto& [er, cr] = rest.leading();
    if (less(er, eb) || guard > 1000000) fail(ErrorCode::Internal, "generalized polynomial division is not exact");
    GenPolynomial t = GenPolynomial::monomial(er - eb, cr / cb);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

GenRational::GenRational(GenPolynomial num) : num_(std::move(num)), den_(Rational(1)) {}

GenRational::GenRational(GenPolynomial num, GenPolynomial den) {
  Rational c = den.constant_term();
  if (c.is_zero()) fail(ErrorCode::ZeroConstantTerm, "denominator needs a non-zero constant term");
  Rational inv = c.inverse();
  num_ = num.scaled(inv);
  den_ = den.scaled(inv);
}

GenRational operator+(const GenRational& a, const GenRational& b) {
  if (a.den_ == b.den_) return GenRational(a.num_ + b.num_, a.den_);
  return GenRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

GenRational operator-(const GenRational& a, const GenRational& b) {
  if (a.den_ == b.den_) return GenRational(a.num_ - b.num_, a.den_);
  return GenRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

GenRational operator*(const GenRational& a, const GenRational& b) {
  return GenRational(a.num_ * b.num_, a.den_ * b.den_);
}

GenRational operator/(const GenRational& a, const GenRational& b) {
  if (b.num_.constant_term().is_zero())
    fail(ErrorCode::ZeroConstantTerm, "divisor numerator needs a non-zero constant term");
  return GenRational(a.num_ * b.den_, a.den_ * b.num_);
}

Interval GenRational::evaluate_at(const Rational& t, mpfr_prec_t prec, const Witness* witness) const {
  Interval d = den_.evaluate_at(t, prec, witness);
  if (d.contains_zero()) fail(ErrorCode::PossiblySingular, "denominator encloses zero");
  return num_.evaluate_at(t, prec, witness) / d;
}

bool gr_equal(const GenRational& a, const GenRational& b) {
  if (a.num() == b.num() && a.den() == b.den()) return true;
  return a.num() * b.den() == b.num() * a.den();
}

GenPolynomial series(const GenRational& r, const Scalar& L, const Witness* witness) {
  GenPolynomial u = r.den() - GenPolynomial(Rational(1));
  for (const auto& [e, c] : u.terms())
    if (sign(e, witness) <= 0) fail(ErrorCode::ZeroConstantTerm, "denominator's non-constant part needs positive exponents");
  GenPolynomial minus_u = -u;
  GenPolynomial acc = r.num().truncated(L, witness);
  GenPolynomial power = acc;
  while (true) {
    power = (power * minus_u).truncated(L, witness);
    if (power.is_zero()) break;
    acc += power;
  }
  return acc;
}

json encode_genpoly(const GenPolynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json{{"e", encode_scalar(e)}, {"c", c.to_string()}});
  return out;
}

GenPolynomial decode_genpoly(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Parse, "generalized polynomial must be a JSON array");
  GenPolynomial p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("e") || !t.contains("c")) fail(ErrorCode::Parse, "term needs \"e\" and \"c\"");
    Scalar c = decode_scalar(t["c"]);
    if (!c.is_rational()) fail(ErrorCode::Parse, "coefficients must be rationals");
    p += GenPolynomial::monomial(decode_scalar(t["e"]), c.rational());
  }
  return p;
}

}  // namespace maglab
