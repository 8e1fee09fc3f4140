#include <doctest.h>

#include <random>

#include "codec.hpp"
#include "error.hpp"
#include "scalar.hpp"

using namespace maglab;

namespace {
Scalar sym(const char* s) { return Scalar::symbol(s); }
bool throws_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}
}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Scalar(Rational(1, 2)) + Scalar(Rational(1, 3)) == Scalar(Rational(5, 6)));
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(throws_code(ErrorCode::DivisionByZero, [] { (void)(Scalar(1) / Scalar(0)); }));
}

TEST_CASE("cyclotomic construction and normalisation") {
  CHECK(Scalar(CyclotomicReal::make(1, {Rational(3, 2)})) == Scalar(Rational(3, 2)));
  CHECK(Scalar(CyclotomicReal::make(1, {Rational(3, 2)})).is_rational());
  // 2cos(2pi/12) = sqrt 3; 2cos(4pi/12) = 1
  Scalar c1 = Scalar(CyclotomicReal::two_cos(12, 1));
  CHECK(c1 * c1 == Scalar(3));
  CHECK(Scalar(CyclotomicReal::two_cos(12, 2)) == Scalar(1));
  Scalar r2 = Scalar(CyclotomicReal::two_cos(8, 1));
  CHECK(r2 * r2 == Scalar(2));
  CHECK(throws_code(ErrorCode::BadLength, [] { CyclotomicReal::make(5, {Rational(1)}); }));
  // zeta_4 alone is not real
  CHECK(throws_code(ErrorCode::NotReal, [] { CyclotomicReal::make(4, {Rational(0), Rational(1)}); }));
}

TEST_CASE("delta values") {
  for (int n = 3; n <= 20; ++n) CHECK(delta(1, n) == Scalar(1));
  CHECK(delta(3, 6) == Scalar(2));
  CHECK(delta(2, 6) * delta(2, 6) == Scalar(3));
  CHECK(delta(4, 9) == Scalar(1) + delta(2, 9));
  CHECK(sign(delta(3, 7) - Scalar(2)) == 1);
  CHECK(sign(delta(2, 5) - (Scalar(1) + sqrt_rational(5)) / Scalar(2)) == 0);
  CHECK(delta(2, 4) == sqrt_rational(2));
  CHECK(throws_code(ErrorCode::OutOfRange, [] { delta(4, 7); }));
  CHECK(throws_code(ErrorCode::OutOfRange, [] { delta(1, 2); }));
}

TEST_CASE("delta sum identity for n = 3k") {
  for (int k = 2; k <= 10; ++k)
    for (int j = 1; j <= (k - 1) / 2; ++j) CHECK(delta(j, 3 * k) + delta(k - j, 3 * k) == delta(k + j, 3 * k));
}

TEST_CASE("sqrt_rational squares back") {
  for (int p : {2, 3, 5, 6, 7, 10, 11, 13, 15}) {
    Scalar s = sqrt_rational(p);
    CHECK(s * s == Scalar(p));
    CHECK(sign(s) == 1);
  }
  Scalar s = sqrt_rational(Rational(2, 3));
  CHECK(s * s == Scalar(Rational(2, 3)));
  CHECK(sqrt_rational(Rational(9, 4)) == Scalar(Rational(3, 2)));
}

TEST_CASE("sin squared") {
  CHECK(sin_squared(1, 6) == Scalar(Rational(1, 4)));
  CHECK(sin_squared(1, 4) == Scalar(Rational(1, 2)));
  CHECK(sin_squared(3, 6) == Scalar(1));
}

TEST_CASE("approx encloses with requested width") {
  Interval i = approx(delta(2, 7), 60);
  CHECK(i.lo_double() <= 1.8019377358048383);
  CHECK(i.hi_double() >= 1.8019377358048383);
  CHECK(i.width() <= std::ldexp(1.0, -60));
  Interval d = approx(delta(3, 7), 40);
  CHECK(d.lo_double() <= 2.2469796037174667);
  CHECK(d.hi_double() >= 2.2469796037174667);
  Interval third = approx(Scalar(Rational(1, 3)), 10);
  CHECK(third.width() <= 1.0 / 1024);
  CHECK(third.lo_double() <= 1.0 / 3);
  CHECK(third.hi_double() >= 1.0 / 3);
}

TEST_CASE("formal scalars") {
  Scalar a = sym("a"), b = sym("b");
  CHECK((a + b) - b == a);
  CHECK(throws_code(ErrorCode::NoWitness, [&] { sign(a); }));
  Witness w{{"a", Rational(1)}, {"b", Rational(2)}};
  CHECK(sign(a - b, &w) == -1);
  CHECK(throws_code(ErrorCode::IncompatibleBackends, [&] { (void)(a + delta(2, 5)); }));
  CHECK(throws_code(ErrorCode::IncompatibleBackends, [&] { canonical_compare(a, delta(2, 5)); }));
  CHECK(Scalar(FormalScalar(Rational(3))) == Scalar(3));
}

TEST_CASE("canonical text encoding") {
  CHECK(to_string(Scalar(Rational(-3, 6))) == "-1/2");
  CHECK(encode_scalar(delta(2, 4)).dump() == R"({"c":["0","1","0","-1"],"m":8})");
  Scalar f = sym("b") * Scalar(2) + sym("a") + Scalar(Rational(1, 3));
  CHECK(encode_scalar(f).dump() == R"({"const":"1/3","syms":{"a":"1","b":"2"}})");
  for (const Scalar& x : {Scalar(Rational(7, 3)), delta(3, 7), f, delta(4, 9) - delta(2, 9)})
    CHECK(decode_scalar(encode_scalar(x)) == x);
  CHECK(decode_scalar(json(5)) == Scalar(5));
}

TEST_CASE("sign is multiplicative on random cyclotomic samples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int t = 0; t < 200; ++t) {
    Scalar x = Scalar(c(rng)) + Scalar(c(rng)) * delta(2, 7) + Scalar(c(rng)) * delta(3, 7);
    Scalar y = Scalar(c(rng)) + Scalar(c(rng)) * delta(2, 7);
    CHECK(sign(x * y) == sign(x) * sign(y));
    if (!x.is_zero()) CHECK(x * (Scalar(1) / x) == Scalar(1));
  }
}

TEST_CASE("conductor cap") {
  int old = conductor_cap();
  CHECK(old == 1000);
  set_conductor_cap(10);
  CHECK(throws_code(ErrorCode::ConductorCap, [] { delta(2, 7); }));
  set_conductor_cap(old);
  CHECK(sign(delta(2, 7)) == 1);
}

TEST_CASE("pow") {
  CHECK(pow(delta(2, 6), 4) == Scalar(9));
  CHECK(pow(Scalar(2), -2) == Scalar(Rational(1, 4)));
  CHECK(pow(delta(2, 5), 0) == Scalar(1));
}
