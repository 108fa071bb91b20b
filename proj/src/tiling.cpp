#include "bergwords/tiling.hpp"

#include <algorithm>

#include "bergwords/error.hpp"

namespace bergwords {

namespace {

bool in_spine(const QuadraticNumber& t, const BiPartition& bp) {
  return (t + bp.s2).sign() >= 0 && (t - bp.s1).sign() < 0;
}

} // namespace

bool is_palindrome(std::string_view w) {
  size_t i = 0, j = w.size();
  while (i + 1 < j) {
    --j;
    if (w[i] != w[j]) return false;
    ++i;
  }
  return true;
}

char TilingWord::at(long j) const {
  if (j < lo || j > hi) throw std::out_of_range("word index " + std::to_string(j));
  return letters[(size_t)(j - lo)];
}

std::string TilingWord::slice(long j0, long j1) const {
  if (j1 < j0) return {};
  if (j0 < lo || j1 > hi) throw std::out_of_range("word slice out of range");
  return letters.substr((size_t)(j0 - lo), (size_t)(j1 - j0 + 1));
}

long TilingWord::count(char c, long j0, long j1) const {
  std::string s = slice(j0, j1);
  return (long)std::count(s.begin(), s.end(), c);
}

std::string TilingWord::annotated() const {
  std::string out;
  bool mark_lock = lock.has_value() && lo <= 0 && hi >= 1;
  bool mark_origin = !mark_lock && lo <= 0 && hi >= 0;
  for (long j = lo; j <= hi; ++j) {
    if (j == 0 && (mark_lock || mark_origin)) out += '[';
    out += at(j);
    if ((mark_lock && j == 1) || (mark_origin && j == 0)) out += ']';
  }
  return out;
}

QuadraticNumber iet_step(const QuadraticNumber& t, const BiPartition& bp, bool forward) {
  if (!in_spine(t, bp)) fail(Errc::OutOfSpine, "position " + t.str());
  if (forward) {
    if (t.sign() >= 0) return t - bp.s2;
    return t + bp.s1;
  }
  // Backward branches are the exact images of the forward ones:
  // [0, s1) -> [-s2, s1-s2) and [-s2, 0) -> [s1-s2, s1).
  if ((t - (bp.s1 - bp.s2)).sign() < 0) return t + bp.s2;
  return t - bp.s1;
}

Letter letter_at(const QuadraticNumber& t, const BiPartition& bp, Side side) {
  if (!in_spine(t, bp)) fail(Errc::OutOfSpine, "position " + t.str());
  if (side == Side::Left) {
    if (t.is_zero()) return Letter::B;
    if ((t + bp.s2).is_zero()) return Letter::A;
  }
  return t.sign() >= 0 ? Letter::A : Letter::B;
}

QuadraticNumber tile_height(Letter x, const BiPartition& bp) {
  return x == Letter::A ? bp.u1 : bp.u2;
}

TilingWord intersection_word(const LinePosition& pos, const BiPartition& bp, long lo, long hi) {
  if (lo > 0 || hi < 0) throw std::invalid_argument("word range must contain index 0");
  TilingWord word;
  word.lo = lo;
  word.hi = hi;
  word.letters.assign((size_t)(hi - lo + 1), '?');
  QuadraticNumber t = pos.base;
  word.letters[(size_t)(0 - lo)] = letter_char(letter_at(t, bp, pos.side));
  QuadraticNumber fwd = t;
  for (long j = 1; j <= hi; ++j) {
    fwd = iet_step(fwd, bp, true);
    word.letters[(size_t)(j - lo)] = letter_char(letter_at(fwd, bp, pos.side));
  }
  QuadraticNumber bwd = t;
  for (long j = -1; j >= lo; --j) {
    bwd = iet_step(bwd, bp, false);
    word.letters[(size_t)(j - lo)] = letter_char(letter_at(bwd, bp, pos.side));
  }
  return word;
}

TilingWord principal_word(const BiPartition& bp, LockOrientation lock, long lo, long hi) {
  LinePosition pos{QuadraticNumber(0), side_for(lock)};
  TilingWord word = intersection_word(pos, bp, lo, hi);
  word.lock = lock;
  return word;
}

Theorem2Words theorem2_palindromes(const BiPartition& bp, const FanBasis& basis) {
  long p = basis.p_long();
  long r = basis.r_long();
  TilingWord word = principal_word(bp, LockOrientation::AB, 0, p + r - 1);
  Theorem2Words out;
  out.p_word = word.slice(2, p - 1);
  out.r_word = word.slice(2, r - 1);
  out.pr_word = word.slice(2, p + r - 1);
  if (!is_palindrome(out.p_word) || !is_palindrome(out.r_word) || !is_palindrome(out.pr_word))
    fail(Errc::NotPalindromic, "fan basis " + std::to_string(basis.index));
  if (p >= 2 && r >= 2) {
    if (out.pr_word != out.p_word + "ba" + out.r_word ||
        out.pr_word != out.r_word + "ab" + out.p_word)
      fail(Errc::NotPalindromic,
           "concatenation identity at fan basis " + std::to_string(basis.index));
  }
  return out;
}

RecursionResult palindrome_recursion(const CuttingSequence& cs) {
  RecursionResult res;
  res.terminated = cs.terminated;
  std::string word_p, word_r; // P_p and P_r of the current basis
  auto compose = [&]() -> std::string {
    if (res.p == 1 && res.r == 1) return "";
    if (res.r == 1) {
      // Initial run of 1-bits: e = (1, j), so windows of size p carry a
      // single a; the palindrome is all b's and grows one letter per step.
      return word_p + "b";
    }
    if (res.p == 1) return word_r + "a";
    return word_p + "ba" + word_r;
  };
  for (int bit : cs.bits) {
    std::string next = compose();
    if (bit == 1) {
      word_p = next;
      res.p += res.r;
    } else {
      word_r = next;
      res.r += res.p;
    }
    res.steps.push_back(std::move(next));
  }
  if (cs.terminated) res.period_palindrome = compose();
  return res;
}

std::vector<Window> windows_of(const TilingWord& word, long n) {
  if (n < 1) throw std::invalid_argument("window size must be positive");
  if (n == 1) return {}; // a window contains the two-tile lock
  if (word.lo > 2 - n || word.hi < n - 1)
    fail(Errc::RangeTooSmall, "word must cover indices " + std::to_string(2 - n) + ".." +
                                  std::to_string(n - 1));
  std::vector<Window> out;
  out.reserve((size_t)(n - 1));
  for (long j = 0; j >= 2 - n; --j) out.push_back({j, word.slice(j, j + n - 1)});
  return out;
}

std::pair<long, long> window_content(const Window& w) {
  long a = (long)std::count(w.letters.begin(), w.letters.end(), 'a');
  return {a, (long)w.letters.size() - a};
}

CenteredWord center_word(const BiPartition& bp, CenterLine which, long lo, long hi) {
  CenteredWord cw;
  QuadraticNumber half(Rational(1, 2));
  QuadraticNumber base;
  switch (which) {
    case CenterLine::Js:
      base = (bp.s1 - bp.s2) * half;
      cw.sym_k = -1; // rotation center on the tile edge between -1 and 0
      cw.sym_l = 0;
      break;
    case CenterLine::R1:
      base = bp.s1 * half;
      cw.sym_k = 0;
      cw.sym_l = 0;
      break;
    case CenterLine::R2:
      base = -bp.s2 * half;
      cw.sym_k = 0;
      cw.sym_l = 0;
      break;
  }
  cw.word = intersection_word({base, Side::Right}, bp, lo, hi);
  for (long r = 1; cw.sym_k - r >= lo && cw.sym_l + r <= hi; ++r) {
    if (cw.word.at(cw.sym_k - r) != cw.word.at(cw.sym_l + r))
      fail(Errc::NotPalindromic, "center word symmetry violated at r = " + std::to_string(r));
  }
  return cw;
}

} // namespace bergwords
