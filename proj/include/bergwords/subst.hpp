#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bergwords/berg.hpp"

namespace bergwords {

// Letter-count matrix of a substitution (abelianization): entry[x][y] is the
// number of occurrences of letter x in the image of letter y, columns indexed
// by (a, b).  For every Berg rule of F the incidence equals F.
struct IncidenceMatrix {
  long a_in_a = 0, a_in_b = 0;
  long b_in_a = 0, b_in_b = 0;

  bool equals(const AutomorphismMatrix& f) const {
    return a_in_a == f.k && a_in_b == f.l && b_in_a == f.m && b_in_b == f.n;
  }
};

std::string apply_substitution(const SubstitutionRule& rule, std::string_view word);

IncidenceMatrix incidence_matrix(const SubstitutionRule& rule);

// True iff every factor of the iterated image sigma^n(a) of length <= L
// occurs in the principal word of F, where sigma^n(a) is grown to the
// reference window length max(10*L*(p+r), 10^4).  Minimality of the rotation
// makes this finite containment check sound at desk scale.
bool language_preservation_check(const SubstitutionRule& rule, const AutomorphismMatrix& f,
                                 int l_max);

// Shift k such that the substitution image of the principal word segment
// c_{-range}..c_{range}, re-anchored, matches the principal word with the
// image of tile 0 starting at index k.  Among the matches in the inspected
// window, the one minimizing |k| is returned.  For the standard substitution
// k = 0 and the image of the lock contains the lock.
std::optional<long> fixed_word_alignment(const SubstitutionRule& rule,
                                         const AutomorphismMatrix& f, long range);

// sigma - 1, asserted equal to the number of pairwise-distinct window
// substitutions of F, all of which must pass the language check at L = 20.
long seebold_count(const AutomorphismMatrix& f);

// Both images letterwise reversed (an involution).
SubstitutionRule reverse_rule(const SubstitutionRule& rule);

// Exhaustive enumeration of the words of length p+r-2 over {a, b} containing
// both letters whose full word, length-(p-2) prefix and length-(r-2) prefix
// are all palindromes.  For coprime p, r there are exactly two, related by
// the a<->b exchange.  Non-coprime pairs are enumerated with coprime = false
// instead of asserting the cardinality.
struct RobinsonResult {
  std::vector<std::string> words;
  bool coprime = true;
};

RobinsonResult robinson_oracle(int p, int r);

} // namespace bergwords
