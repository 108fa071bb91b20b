#include "bergwords/berg.hpp"

#include <algorithm>

#include "bergwords/error.hpp"

namespace bergwords {

namespace {

long count_letter(const std::string& w, char c) {
  return (long)std::count(w.begin(), w.end(), c);
}

} // namespace

std::vector<SubstitutionRule> berg_substitutions(const AutomorphismMatrix& f) {
  EigenData e = eigen_data(f);
  BiPartition bp = bi_partition(e);
  LockOrientation lock = f.det == 1 ? LockOrientation::AB : LockOrientation::BA;
  long p = f.p();
  long r = f.r();
  long size = p + r;
  TilingWord word = principal_word(bp, lock, 2 - size, size - 1);
  std::vector<SubstitutionRule> rules;
  rules.reserve((size_t)(size - 1));
  for (long j = 0; j >= 2 - size; --j) {
    SubstitutionRule rule;
    rule.image_a = word.slice(j, j + p - 1);
    rule.image_b = word.slice(j + p, j + size - 1);
    rule.source_offset = j;
    rule.lock = lock;
    if (count_letter(rule.image_a, 'a') != f.k || count_letter(rule.image_a, 'b') != f.m ||
        count_letter(rule.image_b, 'a') != f.l || count_letter(rule.image_b, 'b') != f.n)
      fail(Errc::ContentMismatch, "window at offset " + std::to_string(j));
    rules.push_back(std::move(rule));
  }
  return rules;
}

SubstitutionRule standard_substitution(const AutomorphismMatrix& f) {
  return berg_substitutions(f).front();
}

std::vector<BergClass> equivalence_classes(const std::vector<SubstitutionRule>& rules) {
  long size = (long)rules.size() + 1; // p + r
  std::vector<BergClass> classes;
  for (const SubstitutionRule& rule : rules) {
    long j = rule.source_offset;
    long mirror = 2 - size - j;
    if (j < mirror) continue; // counted from the other end
    const SubstitutionRule& partner = rules[(size_t)(-mirror)];
    std::string rev_a(partner.image_a.rbegin(), partner.image_a.rend());
    std::string rev_b(partner.image_b.rbegin(), partner.image_b.rend());
    if (rev_a != rule.image_a || rev_b != rule.image_b)
      fail(Errc::ReversalMismatch,
           "offsets " + std::to_string(j) + " and " + std::to_string(mirror));
    BergClass cls;
    cls.offset = j;
    cls.mirror_offset = mirror;
    cls.representative = rule;
    cls.self_symmetric = (j == mirror);
    classes.push_back(std::move(cls));
  }
  return classes;
}

long count_berg(const AutomorphismMatrix& f) {
  long expected = f.sigma / 2;
  long enumerated = (long)equivalence_classes(berg_substitutions(f)).size();
  if (enumerated != expected)
    throw std::logic_error("Berg class count " + std::to_string(enumerated) +
                           " != floor(sigma/2) = " + std::to_string(expected));
  return expected;
}

long negative_automorphism_count(const AutomorphismMatrix& f) {
  return count_berg(f);
}

LengthReport verify_berg_lengths(const EigenData& e, const SubstitutionRule& rule) {
  auto segment_length = [&](const std::string& w) {
    return QuadraticNumber(Rational(count_letter(w, 'a'))) * e.u1 +
           QuadraticNumber(Rational(count_letter(w, 'b'))) * e.u2;
  };
  LengthReport report{segment_length(rule.image_a), segment_length(rule.image_b)};
  if (report.w1_length != e.lambda * e.u1 || report.w2_length != e.lambda * e.u2)
    fail(Errc::IdentityFailed, "window split lengths do not match lambda*u1, lambda*u2");
  return report;
}

} // namespace bergwords
