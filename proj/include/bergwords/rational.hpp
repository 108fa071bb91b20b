#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace bergwords {

// Exact rational number over arbitrary-precision integers.
//
// Canonical form is maintained after every operation: denominator > 0 and
// gcd(|numerator|, denominator) = 1.  All predicates are exact; no floating
// point is involved anywhere.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {} // NOLINT: implicit by design, embeds integers
  Rational(const mpz_class& n) : q_(n) {}
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  // Parses "p", "-p", or "p/q".
  static Rational from_string(const std::string& s);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  // Greatest integer <= value.
  mpz_class floor() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }
  bool operator<=(const Rational& o) const { return q_ <= o.q_; }
  bool operator>(const Rational& o) const { return q_ > o.q_; }
  bool operator>=(const Rational& o) const { return q_ >= o.q_; }

  // "p" or "p/q".
  std::string str() const;

  // Fixed-point decimal with the given number of fractional digits,
  // round-half-even.  Exact integer arithmetic throughout; the result is
  // platform-independent.
  std::string decimal(int digits) const;

  // Lossy; debug output only.
  double to_double() const { return q_.get_d(); }

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Shared by Rational::decimal and QuadraticNumber::decimal: renders
// scaled / 10^digits with a fixed number of fractional digits.
std::string format_scaled_decimal(const mpz_class& scaled, int digits);

} // namespace bergwords
