#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <random>

#include "bergwords/error.hpp"
#include "bergwords/quadratic.hpp"

using namespace bergwords;

namespace {

QuadraticNumber qn(long a_num, long a_den, long b_num, long b_den, long d) {
  return QuadraticNumber(Rational(a_num, a_den), Rational(b_num, b_den), mpz_class(d));
}

// Independent sign oracle: directed-rounding interval evaluation of
// a + b*sqrt(D), refined until the interval excludes zero.  Exact zero is
// decided beforehand (the value is zero iff a = b = 0 in canonical form).
int interval_sign(const QuadraticNumber& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return x.rat().sign();
  for (mpfr_prec_t prec = 256; prec <= 1 << 16; prec *= 2) {
    mpfr_t sqrt_lo, sqrt_hi, term_lo, term_hi, lo, hi;
    mpfr_inits2(prec, sqrt_lo, sqrt_hi, term_lo, term_hi, lo, hi, (mpfr_ptr) nullptr);
    mpfr_set_z(sqrt_lo, x.radicand().get_mpz_t(), MPFR_RNDD);
    mpfr_sqrt(sqrt_lo, sqrt_lo, MPFR_RNDD);
    mpfr_set_z(sqrt_hi, x.radicand().get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(sqrt_hi, sqrt_hi, MPFR_RNDU);
    mpfr_set_q(term_lo, x.surd().raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(term_hi, x.surd().raw().get_mpq_t(), MPFR_RNDU);
    if (x.surd().sign() >= 0) {
      mpfr_mul(term_lo, term_lo, sqrt_lo, MPFR_RNDD);
      mpfr_mul(term_hi, term_hi, sqrt_hi, MPFR_RNDU);
    } else {
      mpfr_mul(term_lo, term_lo, sqrt_hi, MPFR_RNDD);
      mpfr_mul(term_hi, term_hi, sqrt_lo, MPFR_RNDU);
    }
    mpfr_t a_lo, a_hi;
    mpfr_inits2(prec, a_lo, a_hi, (mpfr_ptr) nullptr);
    mpfr_set_q(a_lo, x.rat().raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(a_hi, x.rat().raw().get_mpq_t(), MPFR_RNDU);
    mpfr_add(lo, a_lo, term_lo, MPFR_RNDD);
    mpfr_add(hi, a_hi, term_hi, MPFR_RNDU);
    int lo_sign = mpfr_sgn(lo);
    int hi_sign = mpfr_sgn(hi);
    mpfr_clears(sqrt_lo, sqrt_hi, term_lo, term_hi, lo, hi, a_lo, a_hi, (mpfr_ptr) nullptr);
    if (lo_sign > 0) return 1;
    if (hi_sign < 0) return -1;
  }
  FAIL("interval refinement did not separate the value from zero");
  return 0;
}

} // namespace

TEST_CASE("conjugate products") {
  QuadraticNumber one_plus = qn(1, 1, 1, 1, 5);
  QuadraticNumber one_minus = qn(1, 1, -1, 1, 5);
  CHECK(one_plus * one_minus == QuadraticNumber(-4));

  QuadraticNumber unit = qn(4, 1, 1, 1, 15) * qn(4, 1, -1, 1, 15);
  CHECK(unit == QuadraticNumber(1));
}

TEST_CASE("rationalized inverse") {
  QuadraticNumber x = QuadraticNumber(1) / qn(1, 1, 1, 1, 5);
  CHECK(x == qn(-1, 4, 1, 4, 5));
}

TEST_CASE("exact sign") {
  CHECK(qn(4, 1, -1, 1, 15).sign() == 1);
  CHECK(QuadraticNumber(0).sign() == 0);
  CHECK(qn(3, 1, -2, 1, 3).sign() == -1);
}

TEST_CASE("exact floor") {
  CHECK(QuadraticNumber::sqrt_of(15).floor() == 3);
  CHECK(qn(4, 1, 1, 1, 15).floor() == 7);
  CHECK((-QuadraticNumber::sqrt_of(2)).floor() == -2);
  CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("canonical radicand") {
  QuadraticNumber x = QuadraticNumber::sqrt_of(60);
  CHECK(x.radicand() == 15);
  CHECK(x.surd() == Rational(2));

  CHECK(QuadraticNumber::sqrt_of(9) == QuadraticNumber(3));
  CHECK(qn(1, 1, 1, 1, 4) == QuadraticNumber(3));
  CHECK(QuadraticNumber::sqrt_of(0) == QuadraticNumber(0));

  // Rational values erase the radicand, so they compare equal across fields.
  QuadraticNumber a = qn(1, 2, 0, 1, 7);
  QuadraticNumber b = qn(1, 2, 0, 1, 11);
  CHECK(a == b);
  CHECK(a.radicand() == 1);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(QuadraticNumber(1) / QuadraticNumber(0), Error);
  CHECK_THROWS_AS(QuadraticNumber::sqrt_of(2) + QuadraticNumber::sqrt_of(3), Error);
  try {
    QuadraticNumber::sqrt_of(2) * QuadraticNumber::sqrt_of(3);
    FAIL("expected MixedRadicands");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MixedRadicands);
  }
  try {
    Rational(1) / Rational(0);
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
}

TEST_CASE("field laws on random samples") {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 40);
  const long radicands[] = {2, 3, 5, 15, 837};
  for (int i = 0; i < 400; ++i) {
    long d = radicands[(size_t)(rng() % 5)];
    QuadraticNumber x = qn(num(rng), den(rng), num(rng), den(rng), d);
    QuadraticNumber y = qn(num(rng), den(rng), num(rng), den(rng), d);
    QuadraticNumber z = qn(num(rng), den(rng), num(rng), den(rng), d);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x - x == QuadraticNumber(0));
    if (!y.is_zero()) CHECK(x / y * y == x);
    CHECK(x * x.conjugate() == QuadraticNumber(x.norm()));
  }
}

TEST_CASE("sign agrees with interval evaluation") {
  std::mt19937_64 rng(987654321);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 200);
  const long radicands[] = {2, 3, 5, 7, 13, 15, 21, 60, 837, 9999991};
  for (int i = 0; i < 10000; ++i) {
    long d = radicands[(size_t)(rng() % 10)];
    QuadraticNumber x = qn(num(rng), den(rng), num(rng), den(rng), d);
    CHECK(x.sign() == interval_sign(x));
  }
}

TEST_CASE("floor bracketing via sign") {
  std::mt19937_64 rng(13579);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 60);
  for (int i = 0; i < 2000; ++i) {
    QuadraticNumber x = qn(num(rng), den(rng), num(rng), den(rng), 2 + (long)(rng() % 97));
    QuadraticNumber fl{Rational(x.floor())};
    CHECK((x - fl).sign() >= 0);
    CHECK((x - fl - QuadraticNumber(1)).sign() < 0);
  }
}

TEST_CASE("decimal rendering") {
  CHECK(Rational(1, 8).decimal(2) == "0.12");  // tie to even
  CHECK(Rational(3, 8).decimal(2) == "0.38");
  CHECK(Rational(-1, 8).decimal(2) == "-0.12");
  CHECK(Rational(1, 3).decimal(6) == "0.333333");
  CHECK(Rational(7).decimal(0) == "7");
  CHECK(QuadraticNumber::sqrt_of(2).decimal(8) == "1.41421356");
  CHECK((-QuadraticNumber::sqrt_of(2)).decimal(4) == "-1.4142");
  CHECK(qn(4, 1, 1, 1, 15).decimal(8) == "7.87298335");
}

TEST_CASE("rational basics") {
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational::from_string("-21/14") == r);
  CHECK(Rational::from_string("5") == Rational(5));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 3) < Rational(3, 4));
}

TEST_CASE("string forms") {
  CHECK(qn(4, 1, 1, 1, 15).str() == "4 + sqrt(15)");
  CHECK(qn(3, 2, -1, 2, 5).str() == "3/2 - 1/2*sqrt(5)");
  CHECK(qn(0, 1, -1, 1, 2).str() == "-sqrt(2)");
  CHECK(qn(-2, 3, 0, 1, 2).str() == "-2/3");
}
