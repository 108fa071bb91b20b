#include "bergwords/quadratic.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "bergwords/error.hpp"

namespace bergwords {

namespace {

// Splits d = f^2 * rest with rest square-free, returning f and rewriting d.
// Trial division is bounded; radicands arising from matrix discriminants are
// small, and a perfect-square remainder is still detected exactly.
mpz_class extract_square_part(mpz_class& d) {
  mpz_class f = 1;
  if (d <= 1) return f;
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    d = 1;
    return root;
  }
  for (mpz_class p = 2; p <= 65536; ++p) {
    mpz_class pp = p * p;
    if (pp > d) break;
    while (mpz_divisible_p(d.get_mpz_t(), pp.get_mpz_t())) {
      d /= pp;
      f *= p;
    }
  }
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    d = 1;
    f *= root;
  }
  return f;
}

} // namespace

QuadraticNumber::QuadraticNumber(Rational rat, Rational surd, mpz_class radicand)
    : rat_(std::move(rat)), surd_(std::move(surd)), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw std::invalid_argument("negative radicand");
  if (surd_.is_zero() || radicand_ == 0) {
    if (radicand_ == 0) surd_ = Rational(0);
    radicand_ = 1;
    return;
  }
  mpz_class square_root = extract_square_part(radicand_);
  if (square_root != 1) surd_ = surd_ * Rational(square_root);
  if (radicand_ == 1) {
    rat_ = rat_ + surd_;
    surd_ = Rational(0);
  }
}

QuadraticNumber QuadraticNumber::sqrt_of(const mpz_class& n) {
  return QuadraticNumber(Rational(0), Rational(1), n);
}

const mpz_class& QuadraticNumber::merged_radicand(const QuadraticNumber& x,
                                                  const QuadraticNumber& y) {
  if (x.is_rational()) return y.radicand_;
  if (y.is_rational()) return x.radicand_;
  if (x.radicand_ != y.radicand_)
    fail(Errc::MixedRadicands, "sqrt(" + x.radicand_.get_str() + ") vs sqrt(" +
                                   y.radicand_.get_str() + ")");
  return x.radicand_;
}

int QuadraticNumber::sign() const {
  int sa = rat_.sign();
  int sb = surd_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against D b^2 by exact rational comparison.
  Rational a2 = rat_ * rat_;
  Rational db2 = surd_ * surd_ * Rational(radicand_);
  if (a2 == db2) return 0; // unreachable for square-free D >= 2
  int bigger_rational = a2 > db2 ? 1 : -1;
  return sa > 0 ? bigger_rational : -bigger_rational;
}

mpz_class QuadraticNumber::floor() const {
  if (is_rational()) return rat_.floor();
  // Write the value as (P + R*sqrt(D)) / Q with integers P, R and Q > 0.
  mpz_class q1 = rat_.denominator();
  mpz_class q2 = surd_.denominator();
  mpz_class q;
  mpz_lcm(q.get_mpz_t(), q1.get_mpz_t(), q2.get_mpz_t());
  mpz_class big_p = rat_.numerator() * (q / q1);
  mpz_class big_r = surd_.numerator() * (q / q2);
  // T = floor(sqrt(R^2 D)); sqrt(R^2 D) is irrational here, so the value lies
  // strictly between (U-1)/Q and U/Q resp. U/Q and (U+1)/Q, and the floor is
  // a single exact floor-division.
  mpz_class t;
  mpz_class r2d = big_r * big_r * radicand_;
  mpz_sqrt(t.get_mpz_t(), r2d.get_mpz_t());
  mpz_class u = big_r > 0 ? mpz_class(big_p + t) : mpz_class(big_p - t - 1);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), u.get_mpz_t(), q.get_mpz_t());
  return out;
}

Rational QuadraticNumber::norm() const {
  return rat_ * rat_ - surd_ * surd_ * Rational(radicand_);
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
  const mpz_class& d = merged_radicand(*this, o);
  return QuadraticNumber(raw_tag{}, rat_ + o.rat_, surd_ + o.surd_, d);
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const {
  const mpz_class& d = merged_radicand(*this, o);
  return QuadraticNumber(raw_tag{}, rat_ - o.rat_, surd_ - o.surd_, d);
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
  const mpz_class& d = merged_radicand(*this, o);
  Rational a = rat_ * o.rat_ + surd_ * o.surd_ * Rational(d);
  Rational b = rat_ * o.surd_ + surd_ * o.rat_;
  return QuadraticNumber(raw_tag{}, std::move(a), std::move(b), d);
}

QuadraticNumber QuadraticNumber::operator/(const QuadraticNumber& o) const {
  if (o.is_zero()) fail(Errc::DivisionByZero, "quadratic division by zero");
  if (o.is_rational()) {
    return QuadraticNumber(raw_tag{}, rat_ / o.rat_, surd_ / o.rat_, radicand_);
  }
  // x / y = x * conj(y) / norm(y); norm(y) != 0 because sqrt(D) is irrational.
  QuadraticNumber num = *this * o.conjugate();
  Rational n = o.norm();
  return QuadraticNumber(raw_tag{}, num.rat_ / n, num.surd_ / n, num.radicand_);
}

std::string QuadraticNumber::str() const {
  if (is_rational()) return rat_.str();
  std::string root = "sqrt(" + radicand_.get_str() + ")";
  std::string surd_part;
  Rational b = surd_.abs();
  if (b == Rational(1)) {
    surd_part = root;
  } else {
    surd_part = b.str() + "*" + root;
  }
  if (rat_.is_zero()) return (surd_.sign() < 0 ? "-" : "") + surd_part;
  return rat_.str() + (surd_.sign() < 0 ? " - " : " + ") + surd_part;
}

std::string QuadraticNumber::decimal(int digits) const {
  if (is_rational()) return rat_.decimal(digits);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, (unsigned long)digits);
  QuadraticNumber scaled = *this * QuadraticNumber(Rational(pow10));
  mpz_class n = scaled.floor();
  // Fractional part vs 1/2: never a tie, the value is irrational.
  QuadraticNumber frac = scaled - QuadraticNumber(Rational(n));
  int c = (frac - QuadraticNumber(Rational(1, 2))).sign();
  if (c > 0) n += 1;
  return format_scaled_decimal(n, digits);
}

double QuadraticNumber::to_double() const {
  return rat_.to_double() + surd_.to_double() * std::sqrt(radicand_.get_d());
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& q) {
  return os << q.str();
}

} // namespace bergwords
