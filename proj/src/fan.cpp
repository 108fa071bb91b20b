#include "bergwords/fan.hpp"

#include "bergwords/error.hpp"

namespace bergwords {

namespace {

long mpz_to_long_checked(const mpz_class& v, const char* what) {
  if (!v.fits_slong_p()) throw std::overflow_error(std::string(what) + " exceeds long range");
  return v.get_si();
}

} // namespace

long FanBasis::p_long() const { return mpz_to_long_checked(p(), "fan p"); }
long FanBasis::r_long() const { return mpz_to_long_checked(r(), "fan r"); }

CuttingSequence cutting_sequence(const QuadraticNumber& s1, const QuadraticNumber& s2,
                                 int depth) {
  if (s1.is_zero() && s2.is_zero()) fail(Errc::ZeroDirection, "direction (0, 0)");
  CuttingSequence cs;
  cs.bits.reserve((size_t)std::max(depth, 0));
  mpz_class k = 1, l = 0, m = 0, n = 1;
  for (int i = 0; i < depth; ++i) {
    // x(e_i + f_i) = s2*(k+l) - s1*(m+n)
    QuadraticNumber x = s2 * QuadraticNumber(Rational(mpz_class(k + l))) -
                        s1 * QuadraticNumber(Rational(mpz_class(m + n)));
    int sg = x.sign();
    if (sg == 0) {
      cs.terminated = true;
      return cs;
    }
    if (sg > 0) {
      k += l;
      m += n;
      cs.bits.push_back(1);
    } else {
      l += k;
      n += m;
      cs.bits.push_back(0);
    }
  }
  return cs;
}

CuttingSequence cutting_sequence(const BiPartition& bp, int depth) {
  return cutting_sequence(bp.s1, bp.s2, depth);
}

std::vector<FanBasis> fan_bases(const CuttingSequence& cs) {
  std::vector<FanBasis> bases;
  bases.reserve(cs.bits.size() + 1);
  FanBasis b;
  bases.push_back(b);
  for (size_t i = 0; i < cs.bits.size(); ++i) {
    if (cs.bits[i] == 1) {
      b.k += b.l;
      b.m += b.n;
    } else {
      b.l += b.k;
      b.n += b.m;
    }
    b.index = (int)i + 1;
    bases.push_back(b);
  }
  return bases;
}

SailVectors sail_vectors(const std::vector<FanBasis>& bases) {
  SailVectors sv;
  for (const FanBasis& b : bases) {
    std::pair<mpz_class, mpz_class> e{b.k, b.m}, f{b.l, b.n};
    if (sv.first.empty() || sv.first.back() != e) sv.first.push_back(e);
    if (sv.second.empty() || sv.second.back() != f) sv.second.push_back(f);
    sv.creation.emplace_back(b.k + b.l, b.m + b.n);
  }
  return sv;
}

std::optional<int> locate_in_fan(const AutomorphismMatrix& f, int max_depth) {
  EigenData e = eigen_data(f);
  BiPartition bp = bi_partition(e);
  mpz_class tk(f.k), tl(f.l), tm(f.m), tn(f.n);
  if (f.det == -1) {
    // F*e0 leaves the first quadrant when lambda_s < 0; search for F^2.
    mpz_class k2 = mpz_class(f.k) * f.k + mpz_class(f.l) * f.m;
    mpz_class l2 = mpz_class(f.k) * f.l + mpz_class(f.l) * f.n;
    mpz_class m2 = mpz_class(f.m) * f.k + mpz_class(f.n) * f.m;
    mpz_class n2 = mpz_class(f.m) * f.l + mpz_class(f.n) * f.n;
    tk = k2;
    tl = l2;
    tm = m2;
    tn = n2;
  }
  CuttingSequence cs = cutting_sequence(bp, max_depth);
  std::vector<FanBasis> bases = fan_bases(cs);
  for (const FanBasis& b : bases) {
    if (b.k == tk && b.l == tl && b.m == tm && b.n == tn) return b.index;
  }
  return std::nullopt;
}

} // namespace bergwords
