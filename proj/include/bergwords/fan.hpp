#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bergwords/spectral.hpp"

namespace bergwords {

// 0/1 steering sequence of the fan recursion.  `terminated` is set when some
// e_i + f_i lands exactly on the vertical axis, which happens precisely for
// rational directions; the tilings are then periodic and the sequence stops.
struct CuttingSequence {
  std::vector<int> bits;
  bool terminated = false;
};

// Bit i is the sign test on the Cartesian x-coordinate of e_i + f_i:
// 1 if x > 0 (e-update), 0 if x < 0 (f-update), termination on x = 0.
CuttingSequence cutting_sequence(const BiPartition& bp, int depth);

// Direction form: the vertical direction is (s1, s2) in lattice coordinates,
// so only the stable pair is needed.  Rational pairs are allowed.
CuttingSequence cutting_sequence(const QuadraticNumber& s1, const QuadraticNumber& s2,
                                 int depth);

// Lattice basis (e_i, f_i) = (e0, f0) * [[k, l], [m, n]]: e = (k, m), f = (l, n).
struct FanBasis {
  int index = 0;
  mpz_class k = 1, l = 0, m = 0, n = 1;

  mpz_class p() const { return k + m; }
  mpz_class r() const { return l + n; }
  long p_long() const;
  long r_long() const;
};

// Basis 0 is the identity; bit 1 multiplies by [[1,0],[1,1]], bit 0 by
// [[1,1],[0,1]].  Returns bases 0 .. bits.size().
std::vector<FanBasis> fan_bases(const CuttingSequence& cs);

struct SailVectors {
  // Distinct e_i = (k, m) in order of appearance (the first-quadrant sail).
  std::vector<std::pair<mpz_class, mpz_class>> first;
  // Distinct f_i = (l, n) in order (the second-quadrant sail).
  std::vector<std::pair<mpz_class, mpz_class>> second;
  // e_i + f_i for each basis, in creation order; both sails merged.  The last
  // entry is the pending vector of the final basis.
  std::vector<std::pair<mpz_class, mpz_class>> creation;
};

SailVectors sail_vectors(const std::vector<FanBasis>& bases);

// Index i with fan matrix equal to F (det = +1) or F^2 (det = -1), searching
// the fan of F's own bi-partition.  nullopt when max_depth is too small.
std::optional<int> locate_in_fan(const AutomorphismMatrix& f, int max_depth = 64);

} // namespace bergwords
