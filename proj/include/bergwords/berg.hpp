#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergwords/tiling.hpp"

namespace bergwords {

// The combinatorial face of a Berg partition: a pair of images a -> image_a,
// b -> image_b.  Rules from the window enumeration carry the window offset
// and the det-mandated lock orientation of the underlying principal word.
struct SubstitutionRule {
  std::string image_a;
  std::string image_b;
  long source_offset = 0;
  std::optional<LockOrientation> lock;

  bool same_images(const SubstitutionRule& o) const {
    return image_a == o.image_a && image_b == o.image_b;
  }
};

// All p+r-1 window substitutions of F: the principal word is built with the
// lock [a,b] for det = 1 and [b,a] for det = -1; the window at offset
// j in {2-(p+r), ..., 0} splits into w1 (first p letters) and w2 (last r),
// giving the rule a -> w1, b -> w2.  Results sorted by offset descending.
// Every window split is checked against the Proposition-2 contents
// (k, m) / (l, n); a violation raises ContentMismatch (a bug signal).
std::vector<SubstitutionRule> berg_substitutions(const AutomorphismMatrix& f);

// The offset-0 rule: a -> lock(det) + P_p, b -> reversed-lock + P_r.
SubstitutionRule standard_substitution(const AutomorphismMatrix& f);

// Equivalence class of Berg partitions: offsets j and 2-(p+r)-j carry
// letterwise-reversed rules and are conjugate by the rotation of the spine.
struct BergClass {
  long offset = 0;        // representative offset (the larger of the pair)
  long mirror_offset = 0; // 2-(p+r)-offset
  SubstitutionRule representative;
  bool self_symmetric = false;
};

// Pairs the rules by the reversal symmetry; exactly one self-symmetric class
// exists iff p+r is even.  ReversalMismatch if the pairing law fails.
std::vector<BergClass> equivalence_classes(const std::vector<SubstitutionRule>& rules);

// floor(sigma/2), asserted equal to the enumerated class count.
long count_berg(const AutomorphismMatrix& f);

// Berg partitions of the automorphism given by -F are in 1-1 correspondence
// with those of F; the count is the same and no geometry is constructed.
long negative_automorphism_count(const AutomorphismMatrix& f);

// Exact spine-length identities of a rule:
//   #a(w1)*u1 + #b(w1)*u2 = lambda*u1 and #a(w2)*u1 + #b(w2)*u2 = lambda*u2,
// i.e. the images of the two spine segments tile exactly onto the window
// split.  IdentityFailed on violation (bug signal).
struct LengthReport {
  QuadraticNumber w1_length; // = lambda*u1
  QuadraticNumber w2_length; // = lambda*u2
};

LengthReport verify_berg_lengths(const EigenData& e, const SubstitutionRule& rule);

} // namespace bergwords
