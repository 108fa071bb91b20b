#include "bergwords/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergwords/berg.hpp"
#include "bergwords/corpus.hpp"
#include "bergwords/error.hpp"
#include "bergwords/render.hpp"
#include "bergwords/subst.hpp"
#include "bergwords/verify.hpp"

namespace bergwords {

namespace {

using json = nlohmann::ordered_json;


struct CommonOptions {
  std::string format = "text";
  int precision = 8;
  bool json_mode() const { return format == "json"; }
};

json matrix_json(const AutomorphismMatrix& f) {
  return json::array({json::array({f.k, f.l}), json::array({f.m, f.n})});
}

json qn_json(const QuadraticNumber& q, int precision) {
  return json{{"exact", q.str()}, {"decimal", q.decimal(precision)}};
}

std::string qn_text(const QuadraticNumber& q, int precision) {
  return q.str() + " = " + q.decimal(precision);
}

void print_kv(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(18) << key << value << "\n";
}

const char* lock_name(LockOrientation lock) {
  return lock == LockOrientation::AB ? "ab" : "ba";
}

json rule_json(const SubstitutionRule& rule) {
  return json{{"a", rule.image_a},
                      {"b", rule.image_b},
                      {"offset", rule.source_offset},
                      {"lock", rule.lock ? lock_name(*rule.lock) : "ab"}};
}

std::string rule_text(const SubstitutionRule& rule) {
  return "a -> " + rule.image_a + ", b -> " + rule.image_b;
}

AutomorphismMatrix matrix_from(const std::vector<long>& klmn) {
  return validate_matrix(klmn[0], klmn[1], klmn[2], klmn[3]);
}

int cmd_analyze(const std::vector<long>& klmn, const CommonOptions& common, std::ostream& out) {
  AutomorphismMatrix f = matrix_from(klmn);
  EigenData e = eigen_data(f);
  long classes = count_berg(f);
  long substitutions = seebold_count(f);
  if (common.json_mode()) {
    json j{{"matrix", matrix_json(f)},
                   {"det", f.det},
                   {"trace", f.trace},
                   {"sigma", f.sigma},
                   {"p", f.p()},
                   {"r", f.r()},
                   {"lambda", qn_json(e.lambda, common.precision)},
                   {"lambda_s", qn_json(e.lambda_s, common.precision)},
                   {"s1", qn_json(e.s1, common.precision)},
                   {"s2", qn_json(e.s2, common.precision)},
                   {"u1", qn_json(e.u1, common.precision)},
                   {"u2", qn_json(e.u2, common.precision)},
                   {"d", qn_json(e.d, common.precision)},
                   {"berg_classes", classes},
                   {"substitutions", substitutions}};
    out << j.dump(2) << "\n";
  } else {
    print_kv(out, "matrix", matrix_json(f).dump());
    print_kv(out, "det", std::to_string(f.det));
    print_kv(out, "trace", std::to_string(f.trace));
    print_kv(out, "sigma", std::to_string(f.sigma));
    print_kv(out, "p", std::to_string(f.p()));
    print_kv(out, "r", std::to_string(f.r()));
    print_kv(out, "lambda", qn_text(e.lambda, common.precision));
    print_kv(out, "lambda_s", qn_text(e.lambda_s, common.precision));
    print_kv(out, "s1", qn_text(e.s1, common.precision));
    print_kv(out, "s2", qn_text(e.s2, common.precision));
    print_kv(out, "u1", qn_text(e.u1, common.precision));
    print_kv(out, "u2", qn_text(e.u2, common.precision));
    print_kv(out, "d", qn_text(e.d, common.precision));
    print_kv(out, "berg_classes", std::to_string(classes));
    print_kv(out, "substitutions", std::to_string(substitutions));
  }
  return 0;
}

int cmd_word(const std::vector<long>& klmn, const std::string& kind, const std::string& lock_opt,
             const std::string& base, const std::string& side_opt, long lo, long hi,
             const CommonOptions& common, std::ostream& out) {
  AutomorphismMatrix f = matrix_from(klmn);
  BiPartition bp = bi_partition(eigen_data(f));
  json j{{"matrix", matrix_json(f)}, {"kind", kind}, {"lo", lo}, {"hi", hi}};
  TilingWord word;
  if (kind == "principal") {
    LockOrientation lock = lock_opt.empty()
                               ? (f.det == 1 ? LockOrientation::AB : LockOrientation::BA)
                               : (lock_opt == "ab" ? LockOrientation::AB : LockOrientation::BA);
    word = principal_word(bp, lock, lo, hi);
    j["lock"] = lock_name(lock);
  } else if (kind == "js" || kind == "r1" || kind == "r2") {
    CenterLine line = kind == "js" ? CenterLine::Js : kind == "r1" ? CenterLine::R1
                                                                   : CenterLine::R2;
    CenteredWord cw = center_word(bp, line, lo, hi);
    word = cw.word;
    j["symmetry"] = json{{"k", cw.sym_k}, {"l", cw.sym_l}};
  } else if (kind == "line") {
    LinePosition pos;
    pos.base = QuadraticNumber(Rational::from_string(base.empty() ? "0" : base));
    pos.side = side_opt == "left" ? Side::Left : Side::Right;
    word = intersection_word(pos, bp, lo, hi);
    j["base"] = pos.base.str();
    j["side"] = side_opt == "left" ? "left" : "right";
  } else {
    fail(Errc::UnsupportedOption, "word kind " + kind);
  }
  j["word"] = word.annotated();
  if (common.json_mode()) {
    out << j.dump(2) << "\n";
  } else {
    for (auto& [key, value] : j.items())
      print_kv(out, key, value.is_string() ? value.get<std::string>() : value.dump());
  }
  return 0;
}

int cmd_fan(const std::vector<long>& klmn, int depth, const CommonOptions& common,
            std::ostream& out) {
  AutomorphismMatrix f = matrix_from(klmn);
  BiPartition bp = bi_partition(eigen_data(f));
  CuttingSequence cs = cutting_sequence(bp, depth);
  std::vector<FanBasis> bases = fan_bases(cs);
  SailVectors sv = sail_vectors(bases);
  std::optional<int> located = locate_in_fan(f, depth);

  auto vec_list = [](const std::vector<std::pair<mpz_class, mpz_class>>& v) {
    json arr = json::array();
    for (const auto& [x, y] : v) arr.push_back(json::array({x.get_str(), y.get_str()}));
    return arr;
  };
  json j{{"matrix", matrix_json(f)},
                 {"depth", depth},
                 {"bits", cs.bits},
                 {"terminated", cs.terminated},
                 {"sail_first", vec_list(sv.first)},
                 {"sail_second", vec_list(sv.second)},
                 {"sail_creation", vec_list(sv.creation)}};
  json bases_json = json::array();
  for (const FanBasis& b : bases) {
    bases_json.push_back(json{{"index", b.index},
                                      {"k", b.k.get_str()},
                                      {"l", b.l.get_str()},
                                      {"m", b.m.get_str()},
                                      {"n", b.n.get_str()}});
  }
  j["bases"] = bases_json;
  if (located)
    j["fan_index"] = *located;
  else
    j["fan_index"] = nullptr;
  if (common.json_mode()) {
    out << j.dump(2) << "\n";
  } else {
    std::string bits;
    for (int b : cs.bits) bits += b ? '1' : '0';
    print_kv(out, "bits", bits);
    print_kv(out, "terminated", cs.terminated ? "true" : "false");
    print_kv(out, "sail_first", j["sail_first"].dump());
    print_kv(out, "sail_second", j["sail_second"].dump());
    print_kv(out, "sail_creation", j["sail_creation"].dump());
    print_kv(out, "fan_index", located ? std::to_string(*located) : "not found");
  }
  return 0;
}

int cmd_palindromes(const std::vector<long>& klmn, int depth, const CommonOptions& common,
                    std::ostream& out) {
  AutomorphismMatrix f = matrix_from(klmn);
  BiPartition bp = bi_partition(eigen_data(f));
  CuttingSequence cs = cutting_sequence(bp, depth);
  json entries = json::array();
  for (const FanBasis& basis : fan_bases(cs)) {
    if (basis.p() < 2 || basis.r() < 2) continue;
    Theorem2Words words = theorem2_palindromes(bp, basis);
    entries.push_back(json{{"index", basis.index},
                                   {"p", basis.p().get_str()},
                                   {"r", basis.r().get_str()},
                                   {"P_p", words.p_word},
                                   {"P_r", words.r_word},
                                   {"P_pr", words.pr_word}});
  }
  json j{{"matrix", matrix_json(f)}, {"depth", depth}, {"entries", entries}};
  if (common.json_mode()) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& entry : entries) {
      out << "i=" << entry["index"] << " p=" << entry["p"].get<std::string>()
          << " r=" << entry["r"].get<std::string>() << "  P_p=" << entry["P_p"].get<std::string>()
          << "  P_r=" << entry["P_r"].get<std::string>()
          << "  P_pr=" << entry["P_pr"].get<std::string>() << "\n";
    }
  }
  return 0;
}

int cmd_berg(const std::vector<long>& klmn, const CommonOptions& common, std::ostream& out) {
  AutomorphismMatrix f = matrix_from(klmn);
  std::vector<SubstitutionRule> rules = berg_substitutions(f);
  std::vector<BergClass> classes = equivalence_classes(rules);
  long count = count_berg(f);
  json rules_json = json::array();
  for (const SubstitutionRule& rule : rules) rules_json.push_back(rule_json(rule));
  json classes_json = json::array();
  for (const BergClass& cls : classes) {
    classes_json.push_back(json{{"offset", cls.offset},
                                        {"mirror_offset", cls.mirror_offset},
                                        {"self_symmetric", cls.self_symmetric},
                                        {"rule", rule_json(cls.representative)}});
  }
  json j{{"matrix", matrix_json(f)},
                 {"p", f.p()},
                 {"r", f.r()},
                 {"rules", rules_json},
                 {"classes", classes_json},
                 {"berg_classes", count},
                 {"negative_berg_classes", negative_automorphism_count(f)}};
  if (common.json_mode()) {
    out << j.dump(2) << "\n";
  } else {
    for (const SubstitutionRule& rule : rules)
      out << "offset " << std::setw(4) << rule.source_offset << "  " << rule_text(rule) << "\n";
    for (const BergClass& cls : classes)
      out << "class {" << cls.offset << ", " << cls.mirror_offset << "}"
          << (cls.self_symmetric ? " self-symmetric" : "") << "\n";
    print_kv(out, "berg_classes", std::to_string(count));
  }
  return 0;
}

int cmd_substitutions(const std::vector<long>& klmn, int language_l, long alignment_range,
                      const CommonOptions& common, std::ostream& out) {
  AutomorphismMatrix f = matrix_from(klmn);
  std::vector<SubstitutionRule> rules = berg_substitutions(f);
  long seebold = seebold_count(f);
  json rules_json = json::array();
  for (const SubstitutionRule& rule : rules) {
    IncidenceMatrix inc = incidence_matrix(rule);
    json rj = rule_json(rule);
    rj["incidence"] =
        json::array({json::array({inc.a_in_a, inc.a_in_b}), json::array({inc.b_in_a, inc.b_in_b})});
    rj["language_ok"] = language_preservation_check(rule, f, language_l);
    std::optional<long> shift = fixed_word_alignment(rule, f, alignment_range);
    if (shift)
      rj["alignment"] = *shift;
    else
      rj["alignment"] = nullptr;
    rules_json.push_back(rj);
  }
  json j{{"matrix", matrix_json(f)}, {"seebold", seebold}, {"rules", rules_json}};
  if (common.json_mode()) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& rj : rules_json) {
      out << "offset " << std::setw(4) << rj["offset"].get<long>() << "  a -> "
          << rj["a"].get<std::string>() << ", b -> " << rj["b"].get<std::string>()
          << "  incidence " << rj["incidence"].dump()
          << (rj["language_ok"].get<bool>() ? "  preserves-language" : "  LANGUAGE-FAIL")
          << "\n";
    }
    print_kv(out, "seebold", std::to_string(seebold));
  }
  return 0;
}

int cmd_robinson(int p, int r, const CommonOptions& common, std::ostream& out) {
  RobinsonResult res = robinson_oracle(p, r);
  json j{{"p", p}, {"r", r}, {"coprime", res.coprime}, {"words", res.words}};
  if (common.json_mode()) {
    out << j.dump(2) << "\n";
  } else {
    print_kv(out, "coprime", res.coprime ? "true" : "false");
    for (const std::string& w : res.words) out << w << "\n";
  }
  return 0;
}

int cmd_render(const std::vector<long>& klmn, long offset, const std::string& panel,
               int precision, int size, const std::string& output, const CommonOptions& common,
               std::ostream& out) {
  AutomorphismMatrix f = matrix_from(klmn);
  EigenData e = eigen_data(f);
  std::vector<SubstitutionRule> rules = berg_substitutions(f);
  long index = -offset;
  if (offset > 0 || index >= (long)rules.size())
    fail(Errc::UnsupportedOption, "offset must lie in [" + std::to_string(2 - f.sigma) + ", 0]");
  SvgOptions options;
  options.precision = precision;
  options.size = size;
  if (panel == "pre")
    options.panel = SvgOptions::Panel::Pre;
  else if (panel == "post")
    options.panel = SvgOptions::Panel::Post;
  else if (panel == "both")
    options.panel = SvgOptions::Panel::Both;
  else
    fail(Errc::UnsupportedOption, "panel " + panel);
  SvgDocument doc = emit_partition_svg(e, rules[(size_t)index], options);
  std::ofstream file(output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + output);
  file << doc.bytes;
  file.close();
  json j{
      {"path", output}, {"bytes", doc.bytes.size()}, {"panel", panel}, {"offset", offset}};
  if (common.json_mode())
    out << j.dump(2) << "\n";
  else
    print_kv(out, "wrote", output + " (" + std::to_string(doc.bytes.size()) + " bytes)");
  return 0;
}

int cmd_verify(const std::vector<long>& klmn, long sigma_max, const VerifyOptions& vopt,
               const CommonOptions& common, std::ostream& out) {
  std::vector<AutomorphismMatrix> corpus;
  if (!klmn.empty()) {
    corpus.push_back(matrix_from(klmn));
  } else {
    corpus = valid_matrices_up_to_sigma(sigma_max);
  }
  bool all_pass = true;
  json report = json::array();
  for (const AutomorphismMatrix& f : corpus) {
    std::vector<CheckResult> results = verify_matrix(f, vopt);
    json checks = json::array();
    bool matrix_pass = true;
    for (const CheckResult& res : results) {
      matrix_pass = matrix_pass && res.pass;
      checks.push_back(
          json{{"name", res.name}, {"pass", res.pass}, {"detail", res.detail}});
    }
    all_pass = all_pass && matrix_pass;
    report.push_back(
        json{{"matrix", matrix_json(f)}, {"pass", matrix_pass}, {"checks", checks}});
    if (!common.json_mode()) {
      if (corpus.size() == 1) {
        for (const CheckResult& res : results) {
          out << (res.pass ? "PASS " : "FAIL ") << res.name
              << (res.detail.empty() ? "" : "  (" + res.detail + ")") << "\n";
        }
      } else {
        out << (matrix_pass ? "PASS " : "FAIL ") << matrix_json(f).dump() << "\n";
      }
    }
  }
  if (common.json_mode()) {
    out << json{{"pass", all_pass}, {"matrices", report}}.dump(2) << "\n";
  } else {
    print_kv(out, "verified", std::to_string(corpus.size()) + " matrices");
    print_kv(out, "result", all_pass ? "PASS" : "FAIL");
  }
  return all_pass ? 0 : 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Berg partitions, Sturmian intersection tilings and their substitutions"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--format", common.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", common.precision, "Decimal digits for exact values")
      ->check(CLI::Range(1, 64));

  std::vector<long> klmn;
  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("matrix", klmn, "Row-major entries k l m n")->expected(4)->required();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Eigendata, sigma, p, r and the two counts");
  add_matrix(analyze);

  CLI::App* word = app.add_subcommand("word", "Principal, center-line or arbitrary-line words");
  add_matrix(word);
  std::string word_kind = "principal", word_lock, word_base, word_side = "right";
  long word_lo = -2000, word_hi = 2000;
  word->add_option("--kind", word_kind, "principal, js, r1, r2 or line")
      ->check(CLI::IsMember({"principal", "js", "r1", "r2", "line"}));
  word->add_option("--lock", word_lock, "Lock override for principal words: ab or ba")
      ->check(CLI::IsMember({"ab", "ba"}));
  word->add_option("--base", word_base, "Line position as an exact rational, e.g. 1/3");
  word->add_option("--side", word_side, "Side convention for line words")
      ->check(CLI::IsMember({"right", "left"}));
  word->add_option("--lo", word_lo, "Lowest index");
  word->add_option("--hi", word_hi, "Highest index");

  CLI::App* fan = app.add_subcommand("fan", "Cutting sequence, sail vectors, locate-in-fan");
  add_matrix(fan);
  int fan_depth = 12;
  fan->add_option("--depth", fan_depth, "Fan depth")->check(CLI::Range(0, 4096));

  CLI::App* palindromes = app.add_subcommand("palindromes", "Palindrome triples per fan basis");
  add_matrix(palindromes);
  int pal_depth = 12;
  palindromes->add_option("--depth", pal_depth, "Fan depth")->check(CLI::Range(0, 4096));

  CLI::App* berg = app.add_subcommand("berg", "Window substitutions and equivalence classes");
  add_matrix(berg);

  CLI::App* subst = app.add_subcommand("substitutions",
                                       "Rules with incidence, language check and alignment");
  add_matrix(subst);
  int language_l = 20;
  long alignment_range = 50;
  subst->add_option("--length", language_l, "Factor length for the language check")
      ->check(CLI::Range(1, 64));
  subst->add_option("--alignment-range", alignment_range, "Segment radius for alignment search");

  CLI::App* robinson = app.add_subcommand("robinson", "Triple-palindrome brute-force oracle");
  int rob_p = 0, rob_r = 0;
  robinson->add_option("p", rob_p, "First tile count")->required();
  robinson->add_option("r", rob_r, "Second tile count")->required();

  CLI::App* render = app.add_subcommand("render", "SVG of the generating Markov partition");
  add_matrix(render);
  long render_offset = 0;
  std::string render_panel = "both", render_output = "partition.svg";
  int render_precision = 8, render_size = 640;
  render->add_option("--offset", render_offset, "Window offset in [2-(p+r), 0]");
  render->add_option("--panel", render_panel, "pre, post or both")
      ->check(CLI::IsMember({"pre", "post", "both"}));
  render->add_option("--svg-precision", render_precision, "Coordinate decimal digits");
  render->add_option("--size", render_size, "Pixels per unit length");
  render->add_option("-o,--output", render_output, "Output path");

  CLI::App* verify = app.add_subcommand("verify", "Run the full identity suite");
  std::vector<long> verify_klmn;
  verify->add_option("matrix", verify_klmn, "Row-major entries k l m n")->expected(4);
  long sigma_max = 30;
  VerifyOptions vopt;
  bool quick = false;
  verify->add_option("--sigma-max", sigma_max, "Corpus bound when no matrix is given");
  verify->add_option("--fan-depth", vopt.fan_depth, "Theorem-2 fan depth");
  verify->add_option("--law-range", vopt.law_range, "Palindromic-law range");
  verify->add_option("--oracle-len", vopt.oracle_length, "Recursion-vs-orbit length");
  verify->add_option("--length", vopt.language_l, "Language check factor length");
  verify->add_flag("--quick", quick, "Skip the language preservation sweep");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }

  try {
    if (*analyze) return cmd_analyze(klmn, common, out);
    if (*word)
      return cmd_word(klmn, word_kind, word_lock, word_base, word_side, word_lo, word_hi, common,
                      out);
    if (*fan) return cmd_fan(klmn, fan_depth, common, out);
    if (*palindromes) return cmd_palindromes(klmn, pal_depth, common, out);
    if (*berg) return cmd_berg(klmn, common, out);
    if (*subst) return cmd_substitutions(klmn, language_l, alignment_range, common, out);
    if (*robinson) return cmd_robinson(rob_p, rob_r, common, out);
    if (*render)
      return cmd_render(klmn, render_offset, render_panel, render_precision, render_size,
                        render_output, common, out);
    if (*verify) {
      vopt.run_language = !quick;
      return cmd_verify(verify_klmn, sigma_max, vopt, common, out);
    }
  } catch (const Error& ex) {
    err << ex.name() << ": " << ex.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& ex) {
    err << "invalid argument: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << "verification failure: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}

} // namespace bergwords
