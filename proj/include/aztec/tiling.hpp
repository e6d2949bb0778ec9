#pragma once

// Domino tilings of finite regions of unit squares and their path families.
//
// A cell (row, col) is the unit square [row, row+1] x [col, col+1] (row is the
// vertical coordinate); it is black iff row = col (mod 2). A vertical edge is
// identified with the cell to its right. For a region S with black cells B and
// white cells W the edges with a white-colored cell on the left and a
// black-colored cell on the right split into
//
//   entries   E = { b in B     : b - (0,1) not in W }
//   interior  I = { b in B     : b - (0,1) in W }
//   exits     X = { b not in B : b - (0,1) in W }
//
// and the tilings of S correspond to families of edge paths with steps
// (1,1), (0,2), (-1,1) joining every entry to an exit through interior edges,
// no edge being used twice. The domino {b, w} contributes the step from the
// left edge of b to the right edge of w whenever those differ.
//
// Aztec diamond placement: the diamond of order m is the set of cells with
// |2 row + 1 - 2(m+1)| + |2 col + 1| <= 2m, i.e. centered on the lattice point
// (m+1, 0). A lattice point (level a, column c) of a path family maps to the
// edge (a + c, c - a); path P_i then enters at (i, -i) and leaves at (i, i),
// and the zero-step path P_0 sits on the virtual edge (0, 0) below the bottom
// corner of the diamond.

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aztec/pathfam.hpp"

namespace aztec {

struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Color { Black, White };

Color color_of(Cell c);

class Region {
 public:
  Region() = default;
  explicit Region(std::set<Cell> cells) : cells_(std::move(cells)) {}

  const std::set<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(Cell c) const { return cells_.count(c) != 0; }
  bool has_black(Cell c) const { return contains(c) && color_of(c) == Color::Black; }
  bool has_white(Cell c) const { return contains(c) && color_of(c) == Color::White; }
  std::size_t black_count() const;
  std::size_t white_count() const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::set<Cell> cells_;
};

struct EdgeSets {
  std::set<Cell> entries;
  std::set<Cell> interior;
  std::set<Cell> exits;
};

// Two adjacent cells, stored in increasing order.
struct Domino {
  Cell first;
  Cell second;

  static Domino of(Cell a, Cell b);
  bool adjacent() const;
  Cell black() const;
  Cell white() const;

  friend auto operator<=>(const Domino&, const Domino&) = default;
};

class DominoTiling {
 public:
  DominoTiling() = default;
  // Normalizes each domino and sorts them.
  explicit DominoTiling(std::vector<Domino> dominoes);

  const std::vector<Domino>& dominoes() const { return dominoes_; }
  std::size_t size() const { return dominoes_.size(); }

  // Union of the domino cells; throws NotATiling if a cell is covered twice.
  Region covered_region() const;

  friend bool operator==(const DominoTiling&, const DominoTiling&) = default;
  friend auto operator<=>(const DominoTiling&, const DominoTiling&) = default;

 private:
  std::vector<Domino> dominoes_;
};

struct EdgePath {
  std::vector<Cell> edges;

  friend auto operator<=>(const EdgePath&, const EdgePath&) = default;
};

// Paths sorted by their first edge.
struct EdgePathFamily {
  std::vector<EdgePath> paths;

  friend auto operator<=>(const EdgePathFamily&, const EdgePathFamily&) = default;
};

EdgeSets region_edges(const Region& s);

// Throws NotATiling unless t is a perfect domino tiling of s.
void check_tiling(const Region& s, const DominoTiling& t);

EdgePathFamily tiling_to_paths(const Region& s, const DominoTiling& t);

// Throws InvalidEdgeFamily when p is not a valid path family for s.
DominoTiling paths_to_tiling(const Region& s, const EdgePathFamily& p);

Region aztec_region(std::size_t order);

Cell edge_of_point(GridPoint p);
GridPoint point_of_edge(Cell edge);

// Disjoint n-family (n >= 1) to a tiling of the Aztec diamond of order n-1.
DominoTiling family_to_tiling(const PathFamily& f);

// Tiling of an Aztec diamond of order m to the disjoint (m+1)-family.
PathFamily tiling_to_family(const DominoTiling& t);

// The four ways of reading a path family off a tiling. WhiteLeft is the
// convention described above; the others apply it to the region after a
// color- and parity-preserving symmetry of the plane:
//
//   BlackLeft   (y, x) -> (y, 1 - x)   vertical edges, black cell on the left
//   WhiteBelow  (y, x) -> (x, y)       horizontal edges, white cell below
//   BlackBelow  (y, x) -> (x, 1 - y)   horizontal edges, black cell below
enum class Convention { WhiteLeft = 0, BlackLeft = 1, WhiteBelow = 2, BlackBelow = 3 };

Cell transform_cell(Cell c, Convention conv);
Cell inverse_transform_cell(Cell c, Convention conv);
Region transform_region(const Region& s, Convention conv);
DominoTiling transform_tiling(const DominoTiling& t, Convention conv);
DominoTiling inverse_transform_tiling(const DominoTiling& t, Convention conv);

// Path family of t under `conv`, edges in transformed coordinates.
EdgePathFamily extract_paths(const Region& s, const DominoTiling& t, Convention conv);
DominoTiling tiling_from_paths(const Region& s, const EdgePathFamily& p,
                               Convention conv);

// Midpoint of an edge given in transformed coordinates, as doubled
// (vertical, horizontal) coordinates of the original plane.
std::pair<int, int> edge_midpoint_doubled(Cell edge, Convention conv);

// The family read off the same tiling with black cells on the left of the
// edges, carried back to standard position by the central reflection
// p -> (n - 1/2, n - 1/2) - p.
PathFamily dual_family(const PathFamily& f);

struct CrossingReport {
  std::size_t crossings = 0;  // horizontal plus vertical steps of f
  bool matched = false;       // every such step is crossed at its midpoint
};

// Compares the horizontal (vertical) step midpoints of f with the vertical
// (horizontal) step midpoints of `dual` placed back by the central reflection.
CrossingReport midpoint_crossings(const PathFamily& f, const PathFamily& dual);

inline constexpr std::size_t kDefaultTilingCap = 40;

// All perfect domino tilings, sorted. Throws CapExceeded for larger regions.
std::vector<DominoTiling> enumerate_tilings(const Region& s,
                                            std::size_t cap_cells = kDefaultTilingCap);

// Region: one "i j" cell per line, sorted. Tiling: one "i1 j1 i2 j2" domino
// per line, cells and lines sorted.
std::string to_text(const Region& s);
std::string to_text(const DominoTiling& t);
Region region_from_text(std::string_view text);
DominoTiling tiling_from_text(std::string_view text);

}  // namespace aztec
