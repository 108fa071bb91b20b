#include "bergwords/verify.hpp"

#include <set>
#include <sstream>

#include "bergwords/berg.hpp"
#include "bergwords/render.hpp"
#include "bergwords/subst.hpp"

namespace bergwords {

namespace {

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    results.push_back({name, pass, detail});
  }

  // Runs `body` and folds any exception into a failed check.
  template <typename Fn>
  void guarded(const std::string& name, Fn&& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      check(name, false, ex.what());
    }
  }
};

} // namespace

std::vector<CheckResult> verify_matrix(const AutomorphismMatrix& f, const VerifyOptions& opt) {
  Suite suite;
  EigenData e = eigen_data(f);
  BiPartition bp = bi_partition(e);
  long p = f.p();
  long r = f.r();

  suite.guarded("berg_class_count", [&] {
    long classes = (long)equivalence_classes(berg_substitutions(f)).size();
    suite.check("berg_class_count", classes == f.sigma / 2,
                "classes = " + std::to_string(classes) + ", floor(sigma/2) = " +
                    std::to_string(f.sigma / 2));
  });

  suite.guarded("substitution_count", [&] {
    std::vector<SubstitutionRule> rules = berg_substitutions(f);
    std::set<std::pair<std::string, std::string>> distinct;
    for (const SubstitutionRule& rule : rules) distinct.emplace(rule.image_a, rule.image_b);
    suite.check("substitution_count",
                (long)rules.size() == f.sigma - 1 && (long)distinct.size() == f.sigma - 1,
                "rules = " + std::to_string(rules.size()));
  });

  if (opt.run_language) {
    suite.guarded("language_preservation", [&] {
      long n = seebold_count(f); // throws if any rule fails the check
      suite.check("language_preservation", n == f.sigma - 1, "");
    });
  }

  suite.guarded("theorem2_palindromes", [&] {
    CuttingSequence cs = cutting_sequence(bp, opt.fan_depth);
    bool ok = true;
    std::string detail;
    for (const FanBasis& basis : fan_bases(cs)) {
      if (basis.p() < 2 || basis.r() < 2) continue;
      theorem2_palindromes(bp, basis); // NotPalindromic on violation
    }
    suite.check("theorem2_palindromes", ok, detail);
  });

  suite.guarded("window_contents", [&] {
    long size = p + r;
    TilingWord word = principal_word(bp, f.det == 1 ? LockOrientation::AB : LockOrientation::BA,
                                     2 - size, size - 1);
    bool ok = true;
    std::string detail;
    auto check_n = [&](long n, long want_a, long want_b) {
      for (const Window& w : windows_of(word, n)) {
        auto [ca, cb] = window_content(w);
        if (ca != want_a || cb != want_b) {
          ok = false;
          std::ostringstream os;
          os << "window N=" << n << " offset=" << w.offset << " content (" << ca << "," << cb
             << ") != (" << want_a << "," << want_b << ")";
          detail = os.str();
        }
      }
    };
    check_n(p, f.k, f.m);
    check_n(r, f.l, f.n);
    check_n(p + r, f.k + f.l, f.m + f.n);
    suite.check("window_contents", ok, detail);
  });

  suite.guarded("recursion_vs_orbit", [&] {
    int depth = opt.fan_depth;
    RecursionResult rec = palindrome_recursion(cutting_sequence(bp, depth));
    while (!rec.terminated && !rec.steps.empty() &&
           (long)rec.steps.back().size() < opt.oracle_length) {
      depth += 8;
      rec = palindrome_recursion(cutting_sequence(bp, depth));
    }
    std::string built = rec.steps.empty() ? std::string() : rec.steps.back();
    TilingWord word = principal_word(bp, LockOrientation::AB, 0, (long)built.size() + 1);
    bool ok = built == word.slice(2, (long)built.size() + 1);
    suite.check("recursion_vs_orbit", ok,
                "compared " + std::to_string(built.size()) + " letters");
  });

  suite.guarded("palindromic_law", [&] {
    for (LockOrientation lock : {LockOrientation::AB, LockOrientation::BA}) {
      TilingWord word = principal_word(bp, lock, -opt.law_range, opt.law_range + 1);
      for (long rr = 1; rr <= opt.law_range; ++rr) {
        if (word.at(-rr) != word.at(1 + rr)) {
          suite.check("palindromic_law", false, "violated at r = " + std::to_string(rr));
          return;
        }
      }
    }
    suite.check("palindromic_law", true, "r <= " + std::to_string(opt.law_range));
  });

  suite.guarded("reversal_pairing", [&] {
    std::vector<SubstitutionRule> rules = berg_substitutions(f);
    long size = p + r;
    bool ok = true;
    long self_symmetric = 0;
    for (const SubstitutionRule& rule : rules) {
      long mirror = 2 - size - rule.source_offset;
      const SubstitutionRule& partner = rules[(size_t)(-mirror)];
      if (!reverse_rule(rule).same_images(partner)) ok = false;
      if (rule.source_offset == mirror) ++self_symmetric;
    }
    bool symmetric_ok = self_symmetric == (f.sigma % 2 == 0 ? 1 : 0);
    suite.check("reversal_pairing", ok && symmetric_ok,
                "self-symmetric rules: " + std::to_string(self_symmetric));
  });

  suite.guarded("incidence_equals_matrix", [&] {
    bool ok = true;
    for (const SubstitutionRule& rule : berg_substitutions(f)) {
      if (!incidence_matrix(rule).equals(f)) ok = false;
    }
    suite.check("incidence_equals_matrix", ok, "");
  });

  suite.guarded("spine_length_identities", [&] {
    for (const SubstitutionRule& rule : berg_substitutions(f)) {
      verify_berg_lengths(e, rule); // IdentityFailed on violation
    }
    suite.check("spine_length_identities", true, "");
  });

  suite.guarded("strip_counts", [&] {
    bool ok = true;
    for (const SubstitutionRule& rule : berg_substitutions(f)) {
      StripDiagram sd = strip_diagram(e, rule);
      long a1 = 0, b1 = 0, a2 = 0, b2 = 0;
      for (const Strip& s : sd.r1) (s.type == Letter::A ? a1 : b1)++;
      for (const Strip& s : sd.r2) (s.type == Letter::A ? a2 : b2)++;
      if (a1 != f.k || b1 != f.m || a2 != f.l || b2 != f.n) ok = false;
    }
    suite.check("strip_counts", ok, "");
  });

  return suite.results;
}

} // namespace bergwords
