#pragma once

#include <string>
#include <vector>

#include "bergwords/spectral.hpp"

namespace bergwords {

struct VerifyOptions {
  int fan_depth = 12;       // Theorem-2 fan depth
  long law_range = 2000;    // palindromic law c_{-r} = c_{1+r} checked for r <= law_range
  long oracle_length = 1000; // recursion-vs-orbit comparison length
  int language_l = 20;      // factor length for the language check
  bool run_language = true; // the language sweep dominates the runtime
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the per-matrix theorem suite: class count, substitution count and
// distinctness, language preservation, Theorem-2 palindromes and identities,
// window contents, recursion-vs-orbit agreement, the palindromic law for both
// lock orientations, reversal pairing, incidence, spine-length identities and
// strip counts.  Every check is exact; failures carry a diagnostic.
std::vector<CheckResult> verify_matrix(const AutomorphismMatrix& f, const VerifyOptions& opt);

} // namespace bergwords
