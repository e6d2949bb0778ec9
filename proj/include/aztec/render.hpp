#pragma once

// SVG pictures of path families and domino tilings.
//
// One fixed transform is used everywhere: a point (v, h) of the plane, v the
// vertical coordinate (level or row) and h the horizontal one (column), is
// drawn at x = margin + (h - left) * scale, y = margin + (top - v) * scale, so
// larger levels appear higher on the page. Path families are drawn in their
// own (level, column) plane; tilings in the (row, col) plane of their cells.
// When a family is drawn over an Aztec tiling its points are carried to the
// midpoints of their edges, (a, c) -> (a + c + 1/2, c - a).

#include <string>

#include "aztec/pathfam.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

enum class RenderStyle { Paths, Tiling, Overlay, Dual };

// Accepts "paths", "tiling", "overlay", "dual".
bool parse_render_style(const std::string& name, RenderStyle& out);

struct RenderOptions {
  double scale = 24.0;
  double margin = 12.0;
};

// Lattice grid plus one <path> element per path of f. A zero-step path is a
// single moveto with a dot on top. `backdrop`, when given, is drawn first in
// a pale color (used for the stage snapshots of a combing sweep).
std::string render_family(const PathFamily& f, const RenderOptions& opt = {},
                          const PathFamily* backdrop = nullptr);

// One <rect> per domino. With `with_paths`, the edge paths are drawn on top:
// for an Aztec diamond the n paths of its family, otherwise the paths of
// tiling_to_paths on the covered region.
std::string render_tiling(const DominoTiling& t, bool with_paths,
                          const RenderOptions& opt = {});

// f and its dual family, the latter placed back by the central reflection.
std::string render_dual(const PathFamily& f, const RenderOptions& opt = {});

}  // namespace aztec
