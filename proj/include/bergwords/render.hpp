#pragma once

#include <string>
#include <vector>

#include "bergwords/berg.hpp"

namespace bergwords {

// Horizontal strips cut out of R1 and R2 by F^{-1}(J^s): bottom-to-top order
// equals the tile order of the images, heights are u1/lambda (type a) and
// u2/lambda (type b), and the counts per rectangle are the entries of F.
struct Strip {
  Letter type;
  QuadraticNumber height;
};

struct StripDiagram {
  std::vector<Strip> r1; // order = image_a
  std::vector<Strip> r2; // order = image_b
  SubstitutionRule rule;
};

// Exact heights summing to u1 resp. u2 (checked; a violation is a bug).
StripDiagram strip_diagram(const EigenData& e, const SubstitutionRule& rule);

// One wrapped piece of the horizontal segment F^{-1}(J^s): a full- or
// partial-width crossing of R1 or R2 at an exact interior level.
struct HorizontalPiece {
  bool in_r1;
  QuadraticNumber level; // y within the rectangle
  QuadraticNumber x0, x1;
};

// Torus wrap of F^{-1}(J^s) for the Berg partition at the rule's offset.
// Total piece length is exactly lambda*(s1+s2).
std::vector<HorizontalPiece> wrap_preimage_spine(const EigenData& e,
                                                 const SubstitutionRule& rule);

// One wrapped fiber of the vertical segment F(J^u): a full-height crossing of
// a rectangle at the orbit position of a window tile.
struct VerticalPiece {
  bool in_r1;
  QuadraticNumber x;
};

// Pieces in window order (tiles offset .. offset + p + r - 1); total length
// is exactly lambda*(u1+u2).
std::vector<VerticalPiece> wrap_image_spine(const EigenData& e, const SubstitutionRule& rule);

struct SvgOptions {
  enum class Panel { Pre, Post, Both };
  Panel panel = Panel::Both;
  int precision = 8; // decimal digits, >= 4
  int size = 640;    // pixels per unit length
};

struct SvgDocument {
  std::string bytes;
};

// Deterministic SVG of the generating Markov partition pictures: the pre
// panel shows the torus partition by J^u and F^{-1}(J^s), the post panel the
// partition by J^s and F(J^u).  Geometry is exact until final decimal
// serialization; identical inputs produce identical bytes.
SvgDocument emit_partition_svg(const EigenData& e, const SubstitutionRule& rule,
                               const SvgOptions& options);

} // namespace bergwords
