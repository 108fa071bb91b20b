#include "bergwords/spectral.hpp"

#include "bergwords/error.hpp"

namespace bergwords {

AutomorphismMatrix validate_matrix(long k, long l, long m, long n) {
  if (k < 0 || l < 0 || m < 0 || n < 0)
    fail(Errc::NegativeEntry, "matrix entries must be nonnegative");
  mpz_class det = mpz_class(k) * n - mpz_class(l) * m;
  if (det != 1 && det != -1)
    fail(Errc::NotUnimodular, "det = " + det.get_str());
  mpz_class trace = mpz_class(k) + n;
  mpz_class disc = trace * trace - 4 * det;
  if (disc <= 0 || mpz_perfect_square_p(disc.get_mpz_t()))
    fail(Errc::NotHyperbolic, "discriminant " + disc.get_str());
  AutomorphismMatrix f;
  f.k = k;
  f.l = l;
  f.m = m;
  f.n = n;
  f.det = (int)det.get_si();
  f.trace = k + n;
  f.sigma = k + l + m + n;
  // Hyperbolic nonnegative unimodular matrices are never triangular.
  if (f.l < 1 || f.m < 1) fail(Errc::NotHyperbolic, "triangular matrix");
  return f;
}

EigenData eigen_data(const AutomorphismMatrix& f) {
  EigenData e;
  e.matrix = f;
  mpz_class disc = mpz_class(f.trace) * f.trace - 4 * f.det;
  QuadraticNumber root = QuadraticNumber::sqrt_of(disc);
  QuadraticNumber half(Rational(1, 2));
  e.lambda = (QuadraticNumber(Rational(f.trace)) + root) * half;
  e.lambda_s = (QuadraticNumber(Rational(f.trace)) - root) * half;
  // u ~ (m, lambda - k), s ~ (l, lambda - k); both tails are positive because
  // lambda > max(k, n) for hyperbolic nonnegative matrices.
  QuadraticNumber tail = e.lambda - QuadraticNumber(Rational(f.k));
  QuadraticNumber um(Rational(f.m));
  QuadraticNumber sl(Rational(f.l));
  e.u1 = um / (um + tail);
  e.u2 = tail / (um + tail);
  e.s1 = sl / (sl + tail);
  e.s2 = tail / (sl + tail);
  e.d = e.s1 * e.u1 + e.s2 * e.u2;
  return e;
}

BiPartition BiPartition::from_lengths(const QuadraticNumber& s1, const QuadraticNumber& s2,
                                      const QuadraticNumber& u1, const QuadraticNumber& u2) {
  if (s1.sign() <= 0 || s2.sign() <= 0 || u1.sign() <= 0 || u2.sign() <= 0)
    throw std::invalid_argument("bi-partition side lengths must be positive");
  BiPartition bp;
  QuadraticNumber s_sum = s1 + s2;
  QuadraticNumber u_sum = u1 + u2;
  bp.s1 = s1 / s_sum;
  bp.s2 = s2 / s_sum;
  bp.u1 = u1 / u_sum;
  bp.u2 = u2 / u_sum;
  bp.d = bp.s1 * bp.u1 + bp.s2 * bp.u2;
  return bp;
}

BiPartition bi_partition(const EigenData& e) {
  BiPartition bp;
  bp.s1 = e.s1;
  bp.s2 = e.s2;
  bp.u1 = e.u1;
  bp.u2 = e.u2;
  bp.d = e.d;
  return bp;
}

Vec2q lattice_to_cartesian(const QuadraticNumber& xi, const QuadraticNumber& eta,
                           const BiPartition& bp) {
  return {bp.s2 * xi - bp.s1 * eta, bp.u1 * xi + bp.u2 * eta};
}

std::pair<QuadraticNumber, QuadraticNumber> cartesian_to_lattice(const QuadraticNumber& x,
                                                                 const QuadraticNumber& y,
                                                                 const BiPartition& bp) {
  if (bp.d.is_zero()) fail(Errc::SingularBasis, "degenerate lattice basis");
  QuadraticNumber xi = (bp.u2 * x + bp.s1 * y) / bp.d;
  QuadraticNumber eta = (bp.s2 * y - bp.u1 * x) / bp.d;
  return {xi, eta};
}

Vec2q apply_cartesian(const EigenData& e, const QuadraticNumber& x, const QuadraticNumber& y) {
  return {e.lambda_s * x, e.lambda * y};
}

} // namespace bergwords
