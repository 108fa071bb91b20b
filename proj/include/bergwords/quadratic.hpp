#pragma once

#include <string>

#include "bergwords/rational.hpp"

namespace bergwords {

// Exact element a + b*sqrt(D) of a real quadratic field Q(sqrt(D)).
//
// Canonical form:
//   - D is a square-free integer >= 2 whenever b != 0 (square factors of the
//     radicand are extracted at construction, and a perfect-square radicand
//     collapses the value into the rational part);
//   - b == 0 forces D = 1, so rational values compare equal no matter which
//     field they were computed in.
//
// Every predicate (sign, comparison, floor) is decided by integer arithmetic
// alone.  Values are immutable; all operations are pure.
class QuadraticNumber {
public:
  QuadraticNumber() : rat_(0), surd_(0), radicand_(1) {}
  QuadraticNumber(long n) : rat_(n), surd_(0), radicand_(1) {}        // NOLINT
  QuadraticNumber(const Rational& r) : rat_(r), surd_(0), radicand_(1) {} // NOLINT
  QuadraticNumber(Rational rat, Rational surd, mpz_class radicand);

  // sqrt(n) for n >= 0, normalized (e.g. sqrt(60) = 2*sqrt(15), sqrt(9) = 3).
  static QuadraticNumber sqrt_of(const mpz_class& n);

  const Rational& rat() const { return rat_; }
  const Rational& surd() const { return surd_; }
  const mpz_class& radicand() const { return radicand_; }

  bool is_rational() const { return surd_.is_zero(); }
  bool is_zero() const { return rat_.is_zero() && surd_.is_zero(); }

  // Exact sign of the real value, in {-1, 0, +1}.
  int sign() const;

  // Greatest integer <= value, computed exactly.
  mpz_class floor() const;

  QuadraticNumber conjugate() const { return QuadraticNumber(rat_, -surd_, radicand_); }
  Rational norm() const; // a^2 - D b^2

  QuadraticNumber operator-() const { return QuadraticNumber(-rat_, -surd_, radicand_); }
  QuadraticNumber operator+(const QuadraticNumber& o) const;
  QuadraticNumber operator-(const QuadraticNumber& o) const;
  QuadraticNumber operator*(const QuadraticNumber& o) const;
  QuadraticNumber operator/(const QuadraticNumber& o) const;

  bool operator==(const QuadraticNumber& o) const {
    return rat_ == o.rat_ && surd_ == o.surd_ && radicand_ == o.radicand_;
  }
  bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }
  bool operator<(const QuadraticNumber& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const QuadraticNumber& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const QuadraticNumber& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const QuadraticNumber& o) const { return (*this - o).sign() >= 0; }

  // Exact form, e.g. "4 + sqrt(15)", "3/2 + 1/2*sqrt(5)", "-2/3".
  std::string str() const;

  // Fixed-point decimal with `digits` fractional digits.  Rounding is exact:
  // nearest for irrational values (a tie cannot occur), half-even for
  // rational ones.  Intended for logs and final serialization only.
  std::string decimal(int digits) const;

  // Lossy; debug output only.
  double to_double() const;

private:
  struct raw_tag {};
  QuadraticNumber(raw_tag, Rational rat, Rational surd, mpz_class radicand)
      : rat_(std::move(rat)), surd_(std::move(surd)), radicand_(std::move(radicand)) {
    if (surd_.is_zero()) radicand_ = 1;
  }

  // Radicand of the common field of x and y, or MixedRadicands.
  static const mpz_class& merged_radicand(const QuadraticNumber& x, const QuadraticNumber& y);

  Rational rat_;
  Rational surd_;
  mpz_class radicand_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& q);

} // namespace bergwords
