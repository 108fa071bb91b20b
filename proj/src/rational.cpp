#include "bergwords/rational.hpp"

#include <ostream>

#include "bergwords/error.hpp"

namespace bergwords {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedRadicands: return "MixedRadicands";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::NotHyperbolic: return "NotHyperbolic";
    case Errc::SingularBasis: return "SingularBasis";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::OutOfSpine: return "OutOfSpine";
    case Errc::RangeTooSmall: return "RangeTooSmall";
    case Errc::NotPalindromic: return "NotPalindromic";
    case Errc::ContentMismatch: return "ContentMismatch";
    case Errc::ReversalMismatch: return "ReversalMismatch";
    case Errc::IdentityFailed: return "IdentityFailed";
    case Errc::UnsupportedOption: return "UnsupportedOption";
  }
  return "UnknownError";
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
  return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return q;
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) fail(Errc::DivisionByZero, "rational division by zero");
  return Rational(mpq_class(q_ / o.q_));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string format_scaled_decimal(const mpz_class& scaled, int digits) {
  bool neg = scaled < 0;
  mpz_class a = ::abs(scaled);
  std::string s = a.get_str();
  if ((int)s.size() < digits + 1) s.insert(0, digits + 1 - s.size(), '0');
  std::string out;
  if (neg && a != 0) out += '-';
  out += s.substr(0, s.size() - digits);
  if (digits > 0) {
    out += '.';
    out += s.substr(s.size() - digits);
  }
  return out;
}

std::string Rational::decimal(int digits) const {
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, (unsigned long)digits);
  mpz_class num = ::abs(q_.get_num()) * pow10;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), q_.get_den_mpz_t());
  mpz_class twice = 2 * r;
  int c = cmp(twice, mpz_class(q_.get_den()));
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  if (sign() < 0) q = -q;
  return format_scaled_decimal(q, digits);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

} // namespace bergwords
