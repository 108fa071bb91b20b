#include "bergwords/subst.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "bergwords/error.hpp"

namespace bergwords {

namespace {

constexpr long kReferenceFloor = 10000;
constexpr int kMaxImageIterations = 64;

LockOrientation lock_for(const AutomorphismMatrix& f) {
  return f.det == 1 ? LockOrientation::AB : LockOrientation::BA;
}

// All distinct factors of length exactly `len` (every shorter factor of a
// long word is contained in one of these).
std::unordered_set<std::string> factors_of_length(const std::string& w, size_t len) {
  std::unordered_set<std::string> out;
  if (len == 0 || w.size() < len) return out;
  for (size_t i = 0; i + len <= w.size(); ++i) out.insert(w.substr(i, len));
  return out;
}

std::string grow_image(const SubstitutionRule& rule, long target) {
  std::string img = "a";
  for (int i = 0; i < kMaxImageIterations && (long)img.size() < target; ++i) {
    std::string next = apply_substitution(rule, img);
    bool stalled = next.size() <= img.size();
    img = std::move(next);
    if (stalled) break;
  }
  return img;
}

bool image_factors_contained(const SubstitutionRule& rule, const std::string& reference,
                             int l_max, long target_len) {
  std::string img = grow_image(rule, target_len);
  size_t len = std::min<size_t>((size_t)l_max, img.size());
  if (len == 0) return true;
  std::unordered_set<std::string> ref = factors_of_length(reference, len);
  for (size_t i = 0; i + len <= img.size(); ++i) {
    if (!ref.count(img.substr(i, len))) return false;
  }
  return true;
}

} // namespace

std::string apply_substitution(const SubstitutionRule& rule, std::string_view word) {
  std::string out;
  out.reserve(word.size() * std::max(rule.image_a.size(), rule.image_b.size()));
  for (char c : word) out += (c == 'a') ? rule.image_a : rule.image_b;
  return out;
}

IncidenceMatrix incidence_matrix(const SubstitutionRule& rule) {
  IncidenceMatrix m;
  m.a_in_a = (long)std::count(rule.image_a.begin(), rule.image_a.end(), 'a');
  m.b_in_a = (long)rule.image_a.size() - m.a_in_a;
  m.a_in_b = (long)std::count(rule.image_b.begin(), rule.image_b.end(), 'a');
  m.b_in_b = (long)rule.image_b.size() - m.a_in_b;
  return m;
}

bool language_preservation_check(const SubstitutionRule& rule, const AutomorphismMatrix& f,
                                 int l_max) {
  long ref_len = std::max(10L * l_max * (f.p() + f.r()), kReferenceFloor);
  BiPartition bp = bi_partition(eigen_data(f));
  long half = ref_len / 2 + 1;
  TilingWord word = principal_word(bp, lock_for(f), -half, half);
  return image_factors_contained(rule, word.letters, l_max, ref_len);
}

std::optional<long> fixed_word_alignment(const SubstitutionRule& rule,
                                         const AutomorphismMatrix& f, long range) {
  BiPartition bp = bi_partition(eigen_data(f));
  TilingWord segment = principal_word(bp, lock_for(f), -range, range);
  std::string image = apply_substitution(rule, segment.letters);
  std::string left = apply_substitution(rule, segment.slice(-range, -1));
  long image_of_origin = (long)left.size(); // offset of sigma(c_0) inside image
  long m = (long)image.size() + 2 * (f.p() + f.r()) + 8;
  TilingWord word = principal_word(bp, lock_for(f), -m, m);

  // Words represent the same tiling when they agree outside the lock and the
  // lock block {0, 1} appears in either orientation (for det = -1 the map
  // swaps the side convention there).
  long len = (long)image.size();
  auto matches_at = [&](long start) { // absolute index of image[0]
    bool lock_mismatch = false;
    for (long i = 0; i < len; ++i) {
      long abs = start + i;
      if (image[(size_t)i] == word.at(abs)) continue;
      if (abs != 0 && abs != 1) return false;
      lock_mismatch = true;
    }
    if (!lock_mismatch) return true;
    if (start > 0 || start + len <= 1) return false;
    return image[(size_t)(0 - start)] == word.at(1) && image[(size_t)(1 - start)] == word.at(0);
  };
  std::optional<long> best;
  for (long start = word.lo; start + len - 1 <= word.hi; ++start) {
    if (!matches_at(start)) continue;
    long k = start + image_of_origin;
    if (!best || std::abs(k) < std::abs(*best)) best = k;
  }
  return best;
}

long seebold_count(const AutomorphismMatrix& f) {
  std::vector<SubstitutionRule> rules = berg_substitutions(f);
  std::set<std::pair<std::string, std::string>> distinct;
  for (const SubstitutionRule& rule : rules) distinct.emplace(rule.image_a, rule.image_b);
  if ((long)distinct.size() != f.sigma - 1)
    throw std::logic_error("window substitutions not pairwise distinct");
  // One reference pass over the principal word serves every rule.
  constexpr int l_max = 20;
  long ref_len = std::max(10L * l_max * (f.p() + f.r()), kReferenceFloor);
  BiPartition bp = bi_partition(eigen_data(f));
  long half = ref_len / 2 + 1;
  TilingWord word = principal_word(bp, lock_for(f), -half, half);
  for (const SubstitutionRule& rule : rules) {
    if (!image_factors_contained(rule, word.letters, l_max, ref_len))
      throw std::logic_error("window substitution fails language preservation");
  }
  return f.sigma - 1;
}

SubstitutionRule reverse_rule(const SubstitutionRule& rule) {
  SubstitutionRule rev = rule;
  std::reverse(rev.image_a.begin(), rev.image_a.end());
  std::reverse(rev.image_b.begin(), rev.image_b.end());
  return rev;
}

RobinsonResult robinson_oracle(int p, int r) {
  if (p < 2 || r < 2) throw std::invalid_argument("robinson oracle requires p, r >= 2");
  int n = p + r - 2;
  if (n > 26) throw std::invalid_argument("p + r too large for brute force");
  RobinsonResult res;
  res.coprime = std::gcd(p, r) == 1;
  std::string w((size_t)n, 'a');
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    for (int i = 0; i < n; ++i) w[(size_t)i] = (mask >> i) & 1 ? 'b' : 'a';
    std::string_view sv(w);
    if (w.find('a') == std::string::npos || w.find('b') == std::string::npos) continue;
    if (!is_palindrome(sv)) continue;
    if (!is_palindrome(sv.substr(0, (size_t)(p - 2)))) continue;
    if (!is_palindrome(sv.substr(0, (size_t)(r - 2)))) continue;
    res.words.push_back(w);
  }
  std::sort(res.words.begin(), res.words.end());
  return res;
}

} // namespace bergwords
