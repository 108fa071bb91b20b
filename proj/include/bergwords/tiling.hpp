#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bergwords/fan.hpp"
#include "bergwords/spectral.hpp"

namespace bergwords {

// Tile letters: 'a' marks intersection with a translate of R1 (height u1),
// 'b' with a translate of R2 (height u2).
enum class Letter : char { A = 'a', B = 'b' };

inline char letter_char(Letter x) { return static_cast<char>(x); }

// Side convention resolving the ambiguity where a line meets a translate of
// the vertical spine: the two readings of the spine are [a,b] (right) and
// [b,a] (left).  The conventions differ only on the orbit of 0.
enum class Side { Right, Left };

enum class LockOrientation { AB, BA };

inline Side side_for(LockOrientation lock) {
  return lock == LockOrientation::AB ? Side::Right : Side::Left;
}

// Horizontal position of a vertical line within the spine circle [-s2, s1).
struct LinePosition {
  QuadraticNumber base;
  Side side = Side::Right;
};

// A finite indexed window of a bi-infinite intersection tiling.  Index 0 is
// the tile whose lower endpoint lies on the horizontal spine; the lock of a
// principal word sits at indices (0, 1).
struct TilingWord {
  long lo = 0;
  long hi = -1;
  std::string letters; // letters[j - lo]
  std::optional<LockOrientation> lock;

  char at(long j) const;
  // Inclusive slice [j0, j1] as a string; empty when j1 < j0.
  std::string slice(long j0, long j1) const;
  long count(char c, long j0, long j1) const;
  // Serialized form with the origin marked, e.g. "aba[ab]aba" for a principal
  // word (brackets around the lock) or "ab[a]ba" otherwise.
  std::string annotated() const;
};

// One step of the interval exchange on [-s2, s1):
//   forward:  [0, s1) -> t - s2,   [-s2, 0) -> t + s1
// and the exact inverse for backward.  Throws OutOfSpine.
QuadraticNumber iet_step(const QuadraticNumber& t, const BiPartition& bp, bool forward);

// Letter of the tile above canonical position t.  Right: [0, s1) -> a,
// [-s2, 0) -> b.  Left differs exactly at t = 0 (-> b) and t = -s2 (-> a).
Letter letter_at(const QuadraticNumber& t, const BiPartition& bp, Side side);

QuadraticNumber tile_height(Letter x, const BiPartition& bp);

// The word c_lo..c_hi of the vertical line through `pos`, generated by the
// exact orbit: t_{j+1} = iet_step forward, t_{j-1} = backward.
TilingWord intersection_word(const LinePosition& pos, const BiPartition& bp, long lo, long hi);

// Principal tiling (the line through the origin) with the given lock reading.
TilingWord principal_word(const BiPartition& bp, LockOrientation lock, long lo, long hi);

// The three palindromic slices of the principal word for a fan basis:
//   P_p = (c_2..c_{p-1}), P_r = (c_2..c_{r-1}), P_{p+r} = (c_2..c_{p+r-1}),
// verified to be palindromes, with the concatenation identities
//   P_{p+r} = P_p ba P_r = P_r ab P_p  checked when p, r >= 2.
// Throws NotPalindromic on violation (which would be a bug, not an input).
struct Theorem2Words {
  std::string p_word, r_word, pr_word;
};

Theorem2Words theorem2_palindromes(const BiPartition& bp, const FanBasis& basis);

// Builds the palindrome P_{p+r} produced at every fan step from the previous
// palindromes alone, using the concatenation identity (plus the one-letter
// appends of the initial run, where p = 1 or r = 1 and the window contents
// force a constant letter).  steps[i] is the word after bit i; p/r are the
// final tile counts.  Output matches the orbit oracle exactly.
struct RecursionResult {
  std::vector<std::string> steps;
  mpz_class p = 1, r = 1;
  bool terminated = false;
  // Set when terminated: P_{p+r} of the final basis.  The periodic tiling has
  // period p + r and its period word is the lock followed by this palindrome.
  std::optional<std::string> period_palindrome;
};

RecursionResult palindrome_recursion(const CuttingSequence& cs);

// A window: N consecutive tiles of a principal word containing the lock.
struct Window {
  long offset = 0;
  std::string letters;
};

// All N-1 windows of size N, offsets 0 down to 2-N.  The word must cover
// indices 2-N .. N-1; otherwise RangeTooSmall.
std::vector<Window> windows_of(const TilingWord& word, long n);

std::pair<long, long> window_content(const Window& w); // (#a, #b)

// The three palindromic center lines.
enum class CenterLine { Js, R1, R2 };

// Word of the line through the chosen center together with its symmetry pair
// (k, l): c_{k-r} = c_{l+r} for all r >= 1 on the generated range (verified;
// NotPalindromic on violation).  R1/R2 centers sit inside tile 0, so
// (k, l) = (0, 0); the J^s center is a tile endpoint, giving (-1, 0).
struct CenteredWord {
  TilingWord word;
  long sym_k = 0, sym_l = 0;
};

CenteredWord center_word(const BiPartition& bp, CenterLine which, long lo, long hi);

bool is_palindrome(std::string_view w);

} // namespace bergwords
