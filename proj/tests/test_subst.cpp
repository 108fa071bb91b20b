#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "bergwords/corpus.hpp"
#include "bergwords/subst.hpp"

using namespace bergwords;

namespace {

SubstitutionRule rule_of(std::string a, std::string b) {
  SubstitutionRule rule;
  rule.image_a = std::move(a);
  rule.image_b = std::move(b);
  return rule;
}

} // namespace

TEST_CASE("apply_substitution") {
  CHECK(apply_substitution(rule_of("ab", "a"), "ab") == "aba");
  CHECK(apply_substitution(rule_of("a", "b"), "abba") == "abba");

  // Iterating a -> aba, b -> ba stabilizes a prefix.
  SubstitutionRule golden = rule_of("aba", "ba");
  std::string w = apply_substitution(golden, "a");
  CHECK(w == "aba");
  w = apply_substitution(golden, w); // aba + ba + aba
  CHECK(w == "ababaaba");
  std::string w3 = apply_substitution(golden, w);
  CHECK(w3.substr(0, w.size()) == w);
}

TEST_CASE("length law |sigma(w)| = p*#a + r*#b") {
  SubstitutionRule rule = rule_of("abaab", "aba");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    std::string w;
    for (int j = 0; j < (int)(rng() % 40); ++j) w += (rng() & 1) ? 'a' : 'b';
    long a = (long)std::count(w.begin(), w.end(), 'a');
    long b = (long)w.size() - a;
    CHECK((long)apply_substitution(rule, w).size() == 5 * a + 3 * b);
  }
}

TEST_CASE("incidence matrices") {
  IncidenceMatrix golden = incidence_matrix(rule_of("aba", "ba"));
  CHECK(golden.equals(validate_matrix(2, 1, 1, 1)));

  IncidenceMatrix fib = incidence_matrix(rule_of("ab", "a"));
  CHECK(fib.equals(validate_matrix(1, 1, 1, 0)));

  IncidenceMatrix identity = incidence_matrix(rule_of("a", "b"));
  CHECK(identity.a_in_a == 1);
  CHECK(identity.a_in_b == 0);
  CHECK(identity.b_in_a == 0);
  CHECK(identity.b_in_b == 1);
}

TEST_CASE("incidence of every berg rule equals the matrix") {
  for (const AutomorphismMatrix& f : valid_matrices_up_to_sigma(12)) {
    for (const SubstitutionRule& rule : berg_substitutions(f)) {
      CHECK(incidence_matrix(rule).equals(f));
    }
  }
}

TEST_CASE("language preservation") {
  AutomorphismMatrix golden = validate_matrix(2, 1, 1, 1);
  for (const SubstitutionRule& rule : berg_substitutions(golden)) {
    CHECK(language_preservation_check(rule, golden, 20));
  }
  // Thue-Morse-like images generate the non-Sturmian factor abba.
  CHECK_FALSE(language_preservation_check(rule_of("ab", "ba"), golden, 4));
  CHECK(language_preservation_check(rule_of("a", "b"), golden, 4));
}

TEST_CASE("fixed word alignment") {
  AutomorphismMatrix golden = validate_matrix(2, 1, 1, 1);
  std::vector<SubstitutionRule> rules = berg_substitutions(golden);
  std::optional<long> shift = fixed_word_alignment(rules[0], golden, 20);
  REQUIRE(shift.has_value());
  CHECK(*shift == 0); // the image of the lock contains the lock

  std::optional<long> shifted = fixed_word_alignment(rules[1], golden, 20);
  CHECK(shifted.has_value());

  AutomorphismMatrix fib = validate_matrix(1, 1, 1, 0);
  std::optional<long> fib_shift = fixed_word_alignment(standard_substitution(fib), fib, 20);
  REQUIRE(fib_shift.has_value());
  CHECK(*fib_shift == 0);
}

TEST_CASE("seebold counts") {
  CHECK(seebold_count(validate_matrix(5, 2, 7, 3)) == 16);
  CHECK(seebold_count(validate_matrix(2, 1, 1, 1)) == 4);
  CHECK(seebold_count(validate_matrix(1, 1, 1, 0)) == 2);
}

TEST_CASE("reverse_rule is an involution") {
  CHECK(reverse_rule(rule_of("aba", "ba")).same_images(rule_of("aba", "ab")));
  CHECK(reverse_rule(rule_of("aab", "ab")).same_images(rule_of("baa", "ba")));
  CHECK(reverse_rule(reverse_rule(rule_of("aab", "ab"))).same_images(rule_of("aab", "ab")));
  CHECK(reverse_rule(rule_of("aba", "bab")).same_images(rule_of("aba", "bab")));
}

TEST_CASE("robinson oracle small cases") {
  RobinsonResult r32 = robinson_oracle(3, 2);
  CHECK(r32.coprime);
  CHECK(r32.words == std::vector<std::string>{"aba", "bab"});

  RobinsonResult r53 = robinson_oracle(5, 3);
  CHECK(r53.words == std::vector<std::string>{"abaaba", "babbab"});

  RobinsonResult r42 = robinson_oracle(4, 2);
  CHECK_FALSE(r42.coprime);

  CHECK_THROWS_AS(robinson_oracle(1, 5), std::invalid_argument);
}

TEST_CASE("robinson uniqueness for coprime pairs") {
  for (int p = 2; p <= 16; ++p) {
    for (int r = 2; r <= 16; ++r) {
      if (p + r > 18 || std::gcd(p, r) != 1) continue;
      RobinsonResult res = robinson_oracle(p, r);
      REQUIRE(res.words.size() == 2);
      std::string swapped;
      for (char c : res.words[0]) swapped += (c == 'a') ? 'b' : 'a';
      CHECK(swapped == res.words[1]);
    }
  }
}

TEST_CASE("theorem-2 word lies in the robinson set") {
  BiPartition bp = bi_partition(eigen_data(validate_matrix(2, 1, 1, 1)));
  // Golden fan basis with (p, r) = (3, 5).
  std::vector<FanBasis> bases = fan_bases(cutting_sequence(bp, 3));
  const FanBasis& basis = bases.at(3);
  REQUIRE(basis.p() == 3);
  REQUIRE(basis.r() == 5);
  Theorem2Words words = theorem2_palindromes(bp, basis);
  RobinsonResult res = robinson_oracle(3, 5);
  CHECK(std::count(res.words.begin(), res.words.end(), words.pr_word) == 1);
}

TEST_CASE("factor complexity n + 1 on principal words") {
  for (const AutomorphismMatrix& f : valid_matrices_up_to_sigma(9)) {
    BiPartition bp = bi_partition(eigen_data(f));
    TilingWord word = principal_word(bp, LockOrientation::AB, -5000, 5000);
    for (size_t n : {1, 2, 3, 5, 8, 13, 21, 30}) {
      std::unordered_set<std::string> factors;
      for (size_t i = 0; i + n <= word.letters.size(); ++i)
        factors.insert(word.letters.substr(i, n));
      CHECK(factors.size() == n + 1);
    }
  }
}
