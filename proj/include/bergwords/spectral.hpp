#pragma once

#include <utility>

#include "bergwords/quadratic.hpp"

namespace bergwords {

// Validated hyperbolic nonnegative unimodular 2x2 integer matrix [[k,l],[m,n]].
struct AutomorphismMatrix {
  long k = 0, l = 0, m = 0, n = 0;
  int det = 0;     // +1 or -1
  long trace = 0;  // k + n
  long sigma = 0;  // k + l + m + n

  long p() const { return k + m; } // column-a tile count
  long r() const { return l + n; } // column-b tile count
};

// Checks entries >= 0, |det| = 1, and hyperbolicity (positive non-square
// discriminant).  Throws NegativeEntry / NotUnimodular / NotHyperbolic.
AutomorphismMatrix validate_matrix(long k, long l, long m, long n);

// Exact Perron spectral data.  Normalization: s1 + s2 = 1 and u1 + u2 = 1.
struct EigenData {
  AutomorphismMatrix matrix;
  QuadraticNumber lambda;   // unstable eigenvalue, > 1
  QuadraticNumber lambda_s; // stable eigenvalue, |.| < 1, sign = det
  QuadraticNumber s1, s2;   // column eigenvector (positive entries)
  QuadraticNumber u1, u2;   // row eigenvector (positive entries)
  QuadraticNumber d;        // s1*u1 + s2*u2
};

EigenData eigen_data(const AutomorphismMatrix& f);

struct Vec2q {
  QuadraticNumber x, y;
};

// The two-rectangle fundamental domain of the torus:
//   R1 = [0, s1] x [0, u1],  R2 = [-s2, 0] x [0, u2],
// with lattice basis e0 = (s2, u1), f0 = (-s1, u2).  The horizontal spine is
// [-s2, s1] on the x-axis, the vertical spine [0, u1 + u2] on the y-axis.
struct BiPartition {
  QuadraticNumber s1, s2, u1, u2;
  QuadraticNumber d; // s1*u1 + s2*u2 = |det[e0 f0]|

  Vec2q e0() const { return {s2, u1}; }
  Vec2q f0() const { return {-s1, u2}; }
  QuadraticNumber spine_h_lo() const { return -s2; }
  QuadraticNumber spine_h_hi() const { return s1; }
  QuadraticNumber spine_v_len() const { return u1 + u2; }

  // Accepts any positive side lengths and normalizes both sums to 1; this is
  // the entry point for rational directions, which have no eigen data.
  static BiPartition from_lengths(const QuadraticNumber& s1, const QuadraticNumber& s2,
                                  const QuadraticNumber& u1, const QuadraticNumber& u2);
};

BiPartition bi_partition(const EigenData& e);

// x = s2*xi - s1*eta, y = u1*xi + u2*eta.
Vec2q lattice_to_cartesian(const QuadraticNumber& xi, const QuadraticNumber& eta,
                           const BiPartition& bp);

// Inverse of the above; throws SingularBasis if d = 0 (never for a valid bp).
std::pair<QuadraticNumber, QuadraticNumber> cartesian_to_lattice(const QuadraticNumber& x,
                                                                 const QuadraticNumber& y,
                                                                 const BiPartition& bp);

// The automorphism in Cartesian coordinates: (x, y) -> (lambda_s*x, lambda*y).
Vec2q apply_cartesian(const EigenData& e, const QuadraticNumber& x, const QuadraticNumber& y);

} // namespace bergwords
