#include "bergwords/render.hpp"

#include <sstream>

#include "bergwords/error.hpp"

namespace bergwords {

namespace {

LockOrientation rule_lock(const SubstitutionRule& rule) {
  return rule.lock.value_or(LockOrientation::AB);
}

// Bottom y-coordinate of tile `offset` on the principal line; 0 for offset 0,
// minus the summed heights of tiles offset..-1 below the spine otherwise.
QuadraticNumber tile_bottom(const BiPartition& bp, LockOrientation lock, long offset) {
  QuadraticNumber h(0);
  if (offset >= 0) return h;
  TilingWord below = principal_word(bp, lock, offset, 0);
  for (long j = offset; j <= -1; ++j) {
    h = h - tile_height(below.at(j) == 'a' ? Letter::A : Letter::B, bp);
  }
  return h;
}

} // namespace

StripDiagram strip_diagram(const EigenData& e, const SubstitutionRule& rule) {
  StripDiagram sd;
  sd.rule = rule;
  auto build = [&](const std::string& image, const QuadraticNumber& total) {
    std::vector<Strip> strips;
    QuadraticNumber sum(0);
    for (char c : image) {
      Letter x = c == 'a' ? Letter::A : Letter::B;
      QuadraticNumber h = (x == Letter::A ? e.u1 : e.u2) / e.lambda;
      sum = sum + h;
      strips.push_back({x, h});
    }
    if (sum != total) fail(Errc::IdentityFailed, "strip heights do not sum to the rectangle");
    return strips;
  };
  sd.r1 = build(rule.image_a, e.u1);
  sd.r2 = build(rule.image_b, e.u2);
  return sd;
}

std::vector<HorizontalPiece> wrap_preimage_spine(const EigenData& e,
                                                 const SubstitutionRule& rule) {
  BiPartition bp = bi_partition(e);
  QuadraticNumber circumference = bp.u1 + bp.u2;
  // F^{-1}(J^s) is a horizontal segment at level -h_j/lambda through the line
  // x = 0; its reach to the right/left of that line depends on sign(lambda_s).
  QuadraticNumber y_start = (QuadraticNumber(0) - tile_bottom(bp, rule_lock(rule),
                                                              rule.source_offset)) /
                            e.lambda;
  // Exact reduction into [0, u1+u2).
  QuadraticNumber turns = QuadraticNumber(Rational((y_start / circumference).floor()));
  y_start = y_start - turns * circumference;
  QuadraticNumber right_budget = e.matrix.det == 1 ? e.lambda * bp.s1 : e.lambda * bp.s2;
  QuadraticNumber left_budget = e.matrix.det == 1 ? e.lambda * bp.s2 : e.lambda * bp.s1;

  std::vector<HorizontalPiece> pieces;
  // Rightward: each step runs between consecutive crossings of the x = 0
  // line, so it spans a full rectangle width unless the budget runs out.
  QuadraticNumber y = y_start;
  QuadraticNumber budget = right_budget;
  while (budget.sign() > 0) {
    if ((y - bp.u1).sign() < 0) {
      QuadraticNumber w = budget < bp.s1 ? budget : bp.s1;
      pieces.push_back({true, y, QuadraticNumber(0), w});
      budget = budget - bp.s1;
      y = y + bp.u2;
    } else {
      QuadraticNumber w = budget < bp.s2 ? budget : bp.s2;
      pieces.push_back({false, y - bp.u1, -bp.s2, -bp.s2 + w});
      budget = budget - bp.s2;
      y = y - bp.u1;
    }
  }
  // Leftward, with the inverse crossing rule.
  y = y_start;
  budget = left_budget;
  while (budget.sign() > 0) {
    if ((y - bp.u2).sign() < 0) {
      QuadraticNumber w = budget < bp.s2 ? budget : bp.s2;
      pieces.push_back({false, y, -w, QuadraticNumber(0)});
      budget = budget - bp.s2;
      y = y + bp.u1;
    } else {
      QuadraticNumber w = budget < bp.s1 ? budget : bp.s1;
      pieces.push_back({true, y - bp.u2, bp.s1 - w, bp.s1});
      budget = budget - bp.s1;
      y = y - bp.u2;
    }
  }
  return pieces;
}

std::vector<VerticalPiece> wrap_image_spine(const EigenData& e, const SubstitutionRule& rule) {
  BiPartition bp = bi_partition(e);
  long size = (long)rule.image_a.size() + (long)rule.image_b.size();
  long j0 = rule.source_offset;
  TilingWord word = principal_word(bp, rule_lock(rule), std::min(j0, 0L), j0 + size - 1);
  QuadraticNumber t(0);
  for (long j = 0; j > j0; --j) t = iet_step(t, bp, false);
  std::vector<VerticalPiece> pieces;
  pieces.reserve((size_t)size);
  for (long j = j0; j < j0 + size; ++j) {
    pieces.push_back({word.at(j) == 'a', t});
    t = iet_step(t, bp, true);
  }
  return pieces;
}

namespace {

class SvgBuilder {
public:
  SvgBuilder(const EigenData& e, const SvgOptions& opt)
      : e_(e), bp_(bi_partition(e)), opt_(opt) {
    hmax_ = bp_.u1 > bp_.u2 ? bp_.u1 : bp_.u2;
  }

  // Pixel coordinates of an exact point within a panel.
  std::string px(const QuadraticNumber& x, int panel) const {
    QuadraticNumber v = (x + bp_.s2 + QuadraticNumber(Rational(panel))) *
                        QuadraticNumber(Rational(opt_.size));
    return v.decimal(opt_.precision);
  }
  std::string py(const QuadraticNumber& y) const {
    QuadraticNumber v = (hmax_ - y) * QuadraticNumber(Rational(opt_.size));
    return v.decimal(opt_.precision);
  }

  void rects(std::ostringstream& out, int panel) const {
    rect(out, panel, "r1", QuadraticNumber(0), bp_.s1, bp_.u1);
    rect(out, panel, "r2", -bp_.s2, QuadraticNumber(0), bp_.u2);
  }

  void line(std::ostringstream& out, const char* cls, int panel, const QuadraticNumber& x0,
            const QuadraticNumber& y0, const QuadraticNumber& x1,
            const QuadraticNumber& y1) const {
    out << "<line class=\"" << cls << "\" x1=\"" << px(x0, panel) << "\" y1=\"" << py(y0)
        << "\" x2=\"" << px(x1, panel) << "\" y2=\"" << py(y1) << "\"/>\n";
  }

private:
  void rect(std::ostringstream& out, int panel, const char* cls, const QuadraticNumber& x0,
            const QuadraticNumber& x1, const QuadraticNumber& height) const {
    QuadraticNumber w = (x1 - x0) * QuadraticNumber(Rational(opt_.size));
    QuadraticNumber h = height * QuadraticNumber(Rational(opt_.size));
    out << "<rect class=\"" << cls << "\" x=\"" << px(x0, panel) << "\" y=\"" << py(height)
        << "\" width=\"" << w.decimal(opt_.precision) << "\" height=\""
        << h.decimal(opt_.precision) << "\"/>\n";
  }

  const EigenData& e_;
  BiPartition bp_;
  SvgOptions opt_;
  QuadraticNumber hmax_;
};

} // namespace

SvgDocument emit_partition_svg(const EigenData& e, const SubstitutionRule& rule,
                               const SvgOptions& options) {
  if (options.precision < 4) fail(Errc::UnsupportedOption, "precision must be >= 4");
  if (options.size < 16) fail(Errc::UnsupportedOption, "size must be >= 16");
  BiPartition bp = bi_partition(e);
  SvgBuilder b(e, options);
  bool pre = options.panel != SvgOptions::Panel::Post;
  bool post = options.panel != SvgOptions::Panel::Pre;
  int panels = (pre ? 1 : 0) + (post ? 1 : 0);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size * panels
      << "\" height=\"" << options.size << "\" viewBox=\"0 0 " << options.size * panels << " "
      << options.size << "\">\n";
  out << "<!-- matrix=[[" << e.matrix.k << "," << e.matrix.l << "],[" << e.matrix.m << ","
      << e.matrix.n << "]] offset=" << rule.source_offset << " lock="
      << (rule_lock(rule) == LockOrientation::AB ? "ab" : "ba")
      << " precision=" << options.precision << " -->\n";
  out << "<style>.r1{fill:#dce9f6;stroke:#30506d;stroke-width:1}"
         ".r2{fill:#f6e9d2;stroke:#6d5530;stroke-width:1}"
         ".spine{stroke:#c22020;stroke-width:2.5}"
         ".cut{stroke:#1a6e2e;stroke-width:1.2}"
         ".fiber{stroke:#20309a;stroke-width:1.6}</style>\n";

  int panel = 0;
  if (pre) {
    out << "<g id=\"pre\">\n";
    b.rects(out, panel);
    // J^u: the vertical spine, drawn on its two fundamental-domain copies.
    b.line(out, "spine", panel, QuadraticNumber(0), QuadraticNumber(0), QuadraticNumber(0),
           bp.u1);
    b.line(out, "spine", panel, -bp.s2, QuadraticNumber(0), -bp.s2, bp.u2);
    for (const HorizontalPiece& piece : wrap_preimage_spine(e, rule)) {
      b.line(out, "cut", panel, piece.x0, piece.level, piece.x1, piece.level);
    }
    out << "</g>\n";
    ++panel;
  }
  if (post) {
    out << "<g id=\"post\">\n";
    b.rects(out, panel);
    // J^s: the horizontal spine.
    b.line(out, "spine", panel, -bp.s2, QuadraticNumber(0), bp.s1, QuadraticNumber(0));
    for (const VerticalPiece& piece : wrap_image_spine(e, rule)) {
      b.line(out, "fiber", panel, piece.x, QuadraticNumber(0), piece.x,
             piece.in_r1 ? bp.u1 : bp.u2);
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return {out.str()};
}

} // namespace bergwords
