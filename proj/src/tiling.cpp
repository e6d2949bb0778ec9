#include "aztec/tiling.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "aztec/errors.hpp"
#include "text_reader.hpp"

namespace aztec {

namespace {

std::string cell_name(Cell c) {
  return "(" + std::to_string(c.row) + ", " + std::to_string(c.col) + ")";
}

Cell left_of(Cell c) { return {c.row, c.col - 1}; }
Cell right_of(Cell c) { return {c.row, c.col + 1}; }

bool allowed_step(Cell from, Cell to) {
  const int dr = to.row - from.row;
  const int dc = to.col - from.col;
  return (dr == 1 && dc == 1) || (dr == 0 && dc == 2) || (dr == -1 && dc == 1);
}

// Doubled point maps of the conventions and their inverses.
std::pair<int, int> map_point(std::pair<int, int> p, Convention conv) {
  const auto [y, x] = p;
  switch (conv) {
    case Convention::WhiteLeft:
      return {y, x};
    case Convention::BlackLeft:
      return {y, 2 - x};
    case Convention::WhiteBelow:
      return {x, y};
    case Convention::BlackBelow:
      return {x, 2 - y};
  }
  return p;
}

std::pair<int, int> unmap_point(std::pair<int, int> p, Convention conv) {
  const auto [y, x] = p;
  if (conv == Convention::BlackBelow) return {2 - x, y};
  return map_point(p, conv);  // the other maps are involutions
}

Cell cell_from_center(std::pair<int, int> center) {
  // Centers have odd doubled coordinates.
  return {(center.first - 1) / 2, (center.second - 1) / 2};
}

}  // namespace

Color color_of(Cell c) {
  return ((c.row - c.col) % 2 == 0) ? Color::Black : Color::White;
}

std::size_t Region::black_count() const {
  return static_cast<std::size_t>(std::count_if(
      cells_.begin(), cells_.end(), [](Cell c) { return color_of(c) == Color::Black; }));
}

std::size_t Region::white_count() const { return cells_.size() - black_count(); }

Domino Domino::of(Cell a, Cell b) { return a < b ? Domino{a, b} : Domino{b, a}; }

bool Domino::adjacent() const {
  return std::abs(first.row - second.row) + std::abs(first.col - second.col) == 1;
}

Cell Domino::black() const { return color_of(first) == Color::Black ? first : second; }
Cell Domino::white() const { return color_of(first) == Color::Black ? second : first; }

DominoTiling::DominoTiling(std::vector<Domino> dominoes) : dominoes_(std::move(dominoes)) {
  for (auto& d : dominoes_) d = Domino::of(d.first, d.second);
  std::sort(dominoes_.begin(), dominoes_.end());
}

Region DominoTiling::covered_region() const {
  std::set<Cell> cells;
  for (const auto& d : dominoes_) {
    for (Cell c : {d.first, d.second}) {
      if (!cells.insert(c).second) {
        throw NotATiling("cell " + cell_name(c) + " is covered twice");
      }
    }
  }
  return Region(std::move(cells));
}

EdgeSets region_edges(const Region& s) {
  EdgeSets e;
  for (Cell c : s.cells()) {
    if (color_of(c) == Color::Black) {
      (s.has_white(left_of(c)) ? e.interior : e.entries).insert(c);
    } else {
      const Cell b = right_of(c);
      if (!s.has_black(b)) e.exits.insert(b);
    }
  }
  return e;
}

void check_tiling(const Region& s, const DominoTiling& t) {
  const Region covered = t.covered_region();
  for (const auto& d : t.dominoes()) {
    if (!d.adjacent()) {
      throw NotATiling("cells " + cell_name(d.first) + " and " + cell_name(d.second) +
                       " are not adjacent");
    }
  }
  for (Cell c : covered.cells()) {
    if (!s.contains(c)) throw NotATiling("cell " + cell_name(c) + " lies outside the region");
  }
  if (covered.size() != s.size()) throw NotATiling("the dominoes do not cover the region");
}

EdgePathFamily tiling_to_paths(const Region& s, const DominoTiling& t) {
  check_tiling(s, t);
  std::map<Cell, Cell> next;
  for (const auto& d : t.dominoes()) {
    const Cell from = d.black();
    const Cell to = right_of(d.white());
    if (from != to) next.emplace(from, to);
  }
  const EdgeSets edges = region_edges(s);
  EdgePathFamily family;
  for (Cell entry : edges.entries) {
    EdgePath path{{entry}};
    for (auto it = next.find(entry); it != next.end(); it = next.find(it->second)) {
      path.edges.push_back(it->second);
    }
    if (!edges.exits.count(path.edges.back())) {
      throw std::logic_error("path from " + cell_name(entry) + " does not end at an exit");
    }
    family.paths.push_back(std::move(path));
  }
  return family;
}

DominoTiling paths_to_tiling(const Region& s, const EdgePathFamily& p) {
  const EdgeSets edges = region_edges(s);
  std::map<Cell, Cell> next;
  std::set<Cell> used;
  std::set<Cell> starts;
  std::set<Cell> ends;
  for (const auto& path : p.paths) {
    if (path.edges.size() < 2) throw InvalidEdgeFamily("path with fewer than two edges");
    for (std::size_t k = 0; k < path.edges.size(); ++k) {
      const Cell e = path.edges[k];
      if (!used.insert(e).second) {
        throw InvalidEdgeFamily("edge " + cell_name(e) + " lies on two paths");
      }
      const bool first = k == 0;
      const bool last = k + 1 == path.edges.size();
      if (first && !edges.entries.count(e)) {
        throw InvalidEdgeFamily("path starts at " + cell_name(e) + ", not an entry");
      }
      if (last && !edges.exits.count(e)) {
        throw InvalidEdgeFamily("path ends at " + cell_name(e) + ", not an exit");
      }
      if (!first && !last && !edges.interior.count(e)) {
        throw InvalidEdgeFamily("path passes " + cell_name(e) + ", not an interior edge");
      }
      if (!last) {
        if (!allowed_step(e, path.edges[k + 1])) {
          throw InvalidEdgeFamily("illegal step from " + cell_name(e));
        }
        next.emplace(e, path.edges[k + 1]);
      }
    }
    starts.insert(path.edges.front());
    ends.insert(path.edges.back());
  }
  if (starts != edges.entries) throw InvalidEdgeFamily("some entry starts no path");
  if (ends != edges.exits) throw InvalidEdgeFamily("some exit ends no path");

  std::vector<Domino> dominoes;
  std::set<Cell> paired_white;
  for (Cell b : s.cells()) {
    if (color_of(b) != Color::Black) continue;
    auto it = next.find(b);
    const Cell w = it == next.end() ? left_of(b) : left_of(it->second);
    if (!s.has_white(w) || !paired_white.insert(w).second) {
      throw InvalidEdgeFamily("black cell " + cell_name(b) + " has no partner");
    }
    dominoes.push_back(Domino::of(b, w));
  }
  if (paired_white.size() != s.white_count()) {
    throw InvalidEdgeFamily("some white cell is left unpaired");
  }
  return DominoTiling(std::move(dominoes));
}

Region aztec_region(std::size_t order) {
  const int m = static_cast<int>(order);
  std::set<Cell> cells;
  for (int r = 1; r <= 2 * m; ++r) {
    for (int c = -m; c < m; ++c) {
      if (std::abs(2 * r + 1 - 2 * (m + 1)) + std::abs(2 * c + 1) <= 2 * m) {
        cells.insert({r, c});
      }
    }
  }
  return Region(std::move(cells));
}

Cell edge_of_point(GridPoint p) { return {p.level + p.column, p.column - p.level}; }

GridPoint point_of_edge(Cell edge) {
  if (color_of(edge) != Color::Black) {
    throw std::invalid_argument("edge " + cell_name(edge) + " has the wrong parity");
  }
  return {(edge.row - edge.col) / 2, (edge.row + edge.col) / 2};
}

DominoTiling family_to_tiling(const PathFamily& f) {
  if (f.order() == 0) throw InvalidFamily("the empty family has no tiling");
  require_valid(f);
  if (!is_disjoint(f)) throw NotDisjoint("only disjoint families correspond to tilings");
  const auto paths = explicit_paths(f);
  EdgePathFamily edges;
  // P_0 lies on the virtual edge (0, 0) outside the diamond and is dropped.
  for (std::size_t i = 1; i < paths.size(); ++i) {
    EdgePath ep;
    for (GridPoint p : paths[i].points()) ep.edges.push_back(edge_of_point(p));
    edges.paths.push_back(std::move(ep));
  }
  std::sort(edges.paths.begin(), edges.paths.end());
  return paths_to_tiling(aztec_region(f.order() - 1), edges);
}

namespace {

std::size_t aztec_order_of(const Region& s) {
  std::size_t m = 0;
  while (2 * m * (m + 1) < s.size()) ++m;
  if (2 * m * (m + 1) != s.size() || aztec_region(m) != s) {
    throw NotATiling("the dominoes do not cover an Aztec diamond");
  }
  return m;
}

Step step_between(GridPoint from, GridPoint to) {
  const int dl = to.level - from.level;
  const int dc = to.column - from.column;
  if (dl == 0 && dc == 1) return Step::Horizontal;
  if (dl == -1 && dc == 1) return Step::Diagonal;
  if (dl == -1 && dc == 0) return Step::Vertical;
  throw MalformedPath("points are not joined by a single step");
}

ExplicitPath path_through(const std::vector<GridPoint>& points) {
  ExplicitPath p{points.front(), {}};
  for (std::size_t k = 1; k < points.size(); ++k) {
    p.steps.push_back(step_between(points[k - 1], points[k]));
  }
  return p;
}

// Arranges P_1..P_{n-1} by start level and adds the zero-step P_0.
PathFamily assemble_family(std::size_t n, std::vector<ExplicitPath> paths) {
  std::vector<ExplicitPath> ordered(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (auto& p : paths) {
    const int level = p.start.level;
    if (p.start.column != 0 || level < 1 || level >= static_cast<int>(n) ||
        seen[static_cast<std::size_t>(level)]) {
      throw MalformedPath("unexpected path start");
    }
    seen[static_cast<std::size_t>(level)] = true;
    ordered[static_cast<std::size_t>(level)] = std::move(p);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw MalformedPath("missing path");
  }
  return family_from_paths(ordered);
}

}  // namespace

PathFamily tiling_to_family(const DominoTiling& t) {
  const Region s = t.covered_region();
  const std::size_t m = aztec_order_of(s);
  const EdgePathFamily edges = tiling_to_paths(s, t);
  std::vector<ExplicitPath> paths;
  for (const auto& ep : edges.paths) {
    std::vector<GridPoint> points;
    for (Cell e : ep.edges) points.push_back(point_of_edge(e));
    paths.push_back(path_through(points));
  }
  return assemble_family(m + 1, std::move(paths));
}

Cell transform_cell(Cell c, Convention conv) {
  return cell_from_center(map_point({2 * c.row + 1, 2 * c.col + 1}, conv));
}

Cell inverse_transform_cell(Cell c, Convention conv) {
  return cell_from_center(unmap_point({2 * c.row + 1, 2 * c.col + 1}, conv));
}

Region transform_region(const Region& s, Convention conv) {
  std::set<Cell> cells;
  for (Cell c : s.cells()) cells.insert(transform_cell(c, conv));
  return Region(std::move(cells));
}

DominoTiling transform_tiling(const DominoTiling& t, Convention conv) {
  std::vector<Domino> out;
  for (const auto& d : t.dominoes()) {
    out.push_back(Domino::of(transform_cell(d.first, conv), transform_cell(d.second, conv)));
  }
  return DominoTiling(std::move(out));
}

DominoTiling inverse_transform_tiling(const DominoTiling& t, Convention conv) {
  std::vector<Domino> out;
  for (const auto& d : t.dominoes()) {
    out.push_back(Domino::of(inverse_transform_cell(d.first, conv),
                             inverse_transform_cell(d.second, conv)));
  }
  return DominoTiling(std::move(out));
}

EdgePathFamily extract_paths(const Region& s, const DominoTiling& t, Convention conv) {
  return tiling_to_paths(transform_region(s, conv), transform_tiling(t, conv));
}

DominoTiling tiling_from_paths(const Region& s, const EdgePathFamily& p,
                               Convention conv) {
  return inverse_transform_tiling(paths_to_tiling(transform_region(s, conv), p), conv);
}

std::pair<int, int> edge_midpoint_doubled(Cell edge, Convention conv) {
  return unmap_point({2 * edge.row + 1, 2 * edge.col}, conv);
}

PathFamily dual_family(const PathFamily& f) {
  const std::size_t n = f.order();
  require_valid(f);
  if (!is_disjoint(f)) throw NotDisjoint("duality needs a disjoint family");
  if (n == 0) return f;

  const DominoTiling tiling = family_to_tiling(f);
  const EdgePathFamily edges =
      extract_paths(aztec_region(n - 1), tiling, Convention::BlackLeft);
  const int reflect = 2 * static_cast<int>(n) - 1;
  std::vector<ExplicitPath> paths;
  for (const auto& ep : edges.paths) {
    std::vector<GridPoint> points;
    for (Cell e : ep.edges) {
      // Midpoint (y, x) of an edge sits over the lattice point with
      // a + c = y - 1/2 and c - a = x; in doubled units 2a = Y - 1 - X.
      const auto [y2, x2] = edge_midpoint_doubled(e, Convention::BlackLeft);
      const int a2 = (y2 - 1 - x2) / 2;
      const int c2 = (y2 - 1 + x2) / 2;
      points.push_back({(reflect - a2) / 2, (reflect - c2) / 2});
    }
    paths.push_back(path_through(points));
  }
  return assemble_family(n, std::move(paths));
}

CrossingReport midpoint_crossings(const PathFamily& f, const PathFamily& dual) {
  const int n = static_cast<int>(f.order());
  std::set<std::pair<int, int>> f_horizontal, f_vertical, g_horizontal, g_vertical;
  for (const auto& path : explicit_paths(f)) {
    GridPoint p = path.start;
    for (Step s : path.steps) {
      if (s == Step::Horizontal) f_horizontal.insert({2 * p.level, 2 * p.column + 1});
      if (s == Step::Vertical) f_vertical.insert({2 * p.level - 1, 2 * p.column});
      p = advance(p, s);
    }
  }
  // q -> (n - 1/2, n - 1/2) - q in doubled units.
  const int reflect = 2 * n - 1;
  for (const auto& path : explicit_paths(dual)) {
    GridPoint p = path.start;
    for (Step s : path.steps) {
      if (s == Step::Horizontal) {
        g_horizontal.insert({reflect - 2 * p.level, reflect - 2 * p.column - 1});
      }
      if (s == Step::Vertical) {
        g_vertical.insert({reflect - 2 * p.level + 1, reflect - 2 * p.column});
      }
      p = advance(p, s);
    }
  }
  CrossingReport report;
  report.crossings = f_horizontal.size() + f_vertical.size();
  report.matched = f_horizontal == g_vertical && f_vertical == g_horizontal;
  return report;
}

namespace {

class TilingSearch {
 public:
  explicit TilingSearch(const Region& s)
      : region_(s), cells_(s.cells().begin(), s.cells().end()) {}

  std::vector<DominoTiling> run() {
    if (cells_.size() % 2 == 0) search(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void search(std::size_t from) {
    while (from < cells_.size() && covered_.count(cells_[from])) ++from;
    if (from == cells_.size()) {
      found_.emplace_back(current_);
      return;
    }
    // The smallest uncovered cell pairs with its right or upper neighbour.
    const Cell c = cells_[from];
    for (Cell partner : {Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}}) {
      if (!region_.contains(partner) || covered_.count(partner)) continue;
      covered_.insert(c);
      covered_.insert(partner);
      current_.push_back(Domino::of(c, partner));
      search(from + 1);
      current_.pop_back();
      covered_.erase(partner);
      covered_.erase(c);
    }
  }

  const Region& region_;
  std::vector<Cell> cells_;
  std::set<Cell> covered_;
  std::vector<Domino> current_;
  std::vector<DominoTiling> found_;
};

}  // namespace

std::vector<DominoTiling> enumerate_tilings(const Region& s, std::size_t cap_cells) {
  if (s.size() > cap_cells) {
    throw CapExceeded("region has " + std::to_string(s.size()) + " cells, cap is " +
                      std::to_string(cap_cells));
  }
  return TilingSearch(s).run();
}

std::string to_text(const Region& s) {
  std::ostringstream out;
  for (Cell c : s.cells()) out << c.row << ' ' << c.col << '\n';
  return out.str();
}

std::string to_text(const DominoTiling& t) {
  std::ostringstream out;
  for (const auto& d : t.dominoes()) {
    out << d.first.row << ' ' << d.first.col << ' ' << d.second.row << ' '
        << d.second.col << '\n';
  }
  return out.str();
}

namespace {

std::vector<int> read_ints(detail::TextReader& reader, std::string_view line,
                           std::size_t expected) {
  auto tokens = detail::TextReader::split(line);
  if (tokens.size() != expected) {
    reader.fail(1, "expected " + std::to_string(expected) + " integers");
  }
  std::vector<int> values;
  for (const auto& tok : tokens) {
    long long v = reader.parse_integer(tok);
    if (v < -1000000 || v > 1000000) reader.fail(tok.column, "coordinate out of range");
    values.push_back(static_cast<int>(v));
  }
  return values;
}

}  // namespace

Region region_from_text(std::string_view text) {
  detail::TextReader reader(text);
  std::set<Cell> cells;
  while (auto line = reader.next_line()) {
    auto v = read_ints(reader, *line, 2);
    if (!cells.insert({v[0], v[1]}).second) reader.fail(1, "duplicate cell");
  }
  return Region(std::move(cells));
}

DominoTiling tiling_from_text(std::string_view text) {
  detail::TextReader reader(text);
  std::vector<Domino> dominoes;
  while (auto line = reader.next_line()) {
    auto v = read_ints(reader, *line, 4);
    Domino d = Domino::of({v[0], v[1]}, {v[2], v[3]});
    if (!d.adjacent()) reader.fail(1, "domino cells are not adjacent");
    dominoes.push_back(d);
  }
  return DominoTiling(std::move(dominoes));
}

}  // namespace aztec
