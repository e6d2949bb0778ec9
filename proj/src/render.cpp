#include "aztec/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace aztec {

namespace {

struct PlanePoint {
  double v = 0;  // vertical
  double h = 0;  // horizontal
};

constexpr const char* kGridColor = "#d0d0d0";
constexpr const char* kPathColor = "#1f3a93";
constexpr const char* kDualColor = "#c0392b";
constexpr const char* kBackdropColor = "#a9cce3";
// Dominoes by orientation and the color of their lower-left cell.
constexpr const char* kDominoFill[2][2] = {{"#f9e79f", "#aed6f1"},   // horizontal
                                           {"#f5b7b1", "#a9dfbf"}};  // vertical

class SvgCanvas {
 public:
  SvgCanvas(double bottom, double top, double left, double right, const RenderOptions& opt)
      : top_(top), left_(left), opt_(opt) {
    width_ = (right - left) * opt.scale + 2 * opt.margin;
    height_ = (top - bottom) * opt.scale + 2 * opt.margin;
  }

  double x(double h) const { return opt_.margin + (h - left_) * opt_.scale; }
  double y(double v) const { return opt_.margin + (top_ - v) * opt_.scale; }

  void open_group(const std::string& id) { body_ << "<g id=\"" << id << "\">\n"; }
  void close_group() { body_ << "</g>\n"; }

  void line(PlanePoint a, PlanePoint b, const char* color, double width) {
    body_ << "<line x1=\"" << num(x(a.h)) << "\" y1=\"" << num(y(a.v)) << "\" x2=\""
          << num(x(b.h)) << "\" y2=\"" << num(y(b.v)) << "\" stroke=\"" << color
          << "\" stroke-width=\"" << num(width) << "\"/>\n";
  }

  void polyline(const std::vector<PlanePoint>& pts, const char* color, double width) {
    body_ << "<path d=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      body_ << (k ? " L " : "M ") << num(x(pts[k].h)) << ' ' << num(y(pts[k].v));
    }
    body_ << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << num(width)
          << "\" stroke-linejoin=\"round\" stroke-linecap=\"round\"/>\n";
    if (pts.size() == 1) {
      body_ << "<circle cx=\"" << num(x(pts[0].h)) << "\" cy=\"" << num(y(pts[0].v))
            << "\" r=\"" << num(width * 1.5) << "\" fill=\"" << color << "\"/>\n";
    }
  }

  // Axis-aligned square [v, v+1] x [h, h+1] extended to `cells_h` columns
  // and `cells_v` rows.
  void rect(double v, double h, double cells_v, double cells_h, const char* fill) {
    body_ << "<rect x=\"" << num(x(h)) << "\" y=\"" << num(y(v + cells_v))
          << "\" width=\"" << num(cells_h * opt_.scale) << "\" height=\""
          << num(cells_v * opt_.scale) << "\" fill=\"" << fill
          << "\" stroke=\"#202020\" stroke-width=\"1\"/>\n";
  }

  std::string str() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << num(width_) << "\" height=\"" << num(height_) << "\" viewBox=\"0 0 "
        << num(width_) << ' ' << num(height_) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  static std::string num(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << v;
    std::string r = s.str();
    while (r.back() == '0') r.pop_back();
    if (r.back() == '.') r.pop_back();
    return r == "-0" ? "0" : r;
  }

  double top_;
  double left_;
  RenderOptions opt_;
  double width_ = 0;
  double height_ = 0;
  std::ostringstream body_;
};

std::vector<std::vector<PlanePoint>> family_points(const PathFamily& f) {
  std::vector<std::vector<PlanePoint>> out;
  for (const auto& path : explicit_paths(f)) {
    std::vector<PlanePoint> pts;
    for (GridPoint p : path.points()) pts.push_back({double(p.level), double(p.column)});
    out.push_back(std::move(pts));
  }
  return out;
}

void draw_lattice(SvgCanvas& svg, int n) {
  svg.open_group("grid");
  for (int k = 0; k < n; ++k) {
    svg.line({double(k), 0}, {double(k), double(n - 1)}, kGridColor, 1);
    svg.line({0, double(k)}, {double(n - 1), double(k)}, kGridColor, 1);
  }
  svg.close_group();
}

void draw_paths(SvgCanvas& svg, const std::string& id,
                const std::vector<std::vector<PlanePoint>>& paths, const char* color,
                double width) {
  svg.open_group(id);
  for (const auto& pts : paths) svg.polyline(pts, color, width);
  svg.close_group();
}

std::optional<std::size_t> aztec_order(const Region& covered) {
  // 2m(m+1) cells.
  std::size_t m = 0;
  while (2 * m * (m + 1) < covered.size()) ++m;
  if (2 * m * (m + 1) != covered.size() || !(covered == aztec_region(m))) return std::nullopt;
  return m;
}

}  // namespace

bool parse_render_style(const std::string& name, RenderStyle& out) {
  static const std::map<std::string, RenderStyle> names = {
      {"paths", RenderStyle::Paths},
      {"tiling", RenderStyle::Tiling},
      {"overlay", RenderStyle::Overlay},
      {"dual", RenderStyle::Dual},
  };
  auto it = names.find(name);
  if (it == names.end()) return false;
  out = it->second;
  return true;
}

std::string render_family(const PathFamily& f, const RenderOptions& opt,
                          const PathFamily* backdrop) {
  const int n = static_cast<int>(f.order());
  const double extent = n > 0 ? n - 1 : 0;
  SvgCanvas svg(0, extent, 0, extent, opt);
  draw_lattice(svg, n);
  if (backdrop) draw_paths(svg, "backdrop", family_points(*backdrop), kBackdropColor, 3);
  draw_paths(svg, "family", family_points(f), kPathColor, 3);
  return svg.str();
}

std::string render_tiling(const DominoTiling& t, bool with_paths, const RenderOptions& opt) {
  const Region covered = t.covered_region();
  int bottom = 0, top = 0, left = 0, right = 0;
  if (covered.size() > 0) {
    bottom = left = std::numeric_limits<int>::max();
    top = right = std::numeric_limits<int>::min();
    for (Cell c : covered.cells()) {
      bottom = std::min(bottom, c.row);
      top = std::max(top, c.row + 1);
      left = std::min(left, c.col);
      right = std::max(right, c.col + 1);
    }
  }
  std::vector<std::vector<PlanePoint>> paths;
  if (with_paths && covered.size() > 0) {
    if (auto m = aztec_order(covered)) {
      bottom = std::min(bottom, 0);  // room for the virtual edge of P_0
      for (const auto& path : explicit_paths(tiling_to_family(t))) {
        std::vector<PlanePoint> pts;
        for (GridPoint p : path.points()) {
          pts.push_back({p.level + p.column + 0.5, double(p.column - p.level)});
        }
        paths.push_back(std::move(pts));
      }
    } else {
      for (const auto& path : tiling_to_paths(covered, t).paths) {
        std::vector<PlanePoint> pts;
        for (Cell e : path.edges) pts.push_back({e.row + 0.5, double(e.col)});
        paths.push_back(std::move(pts));
      }
    }
  }

  SvgCanvas svg(bottom, top, left, right, opt);
  svg.open_group("tiling");
  for (const auto& d : t.dominoes()) {
    const Cell lo = d.first;
    const bool vertical = d.second.row != lo.row;
    const char* fill = kDominoFill[vertical][color_of(lo) == Color::Black ? 0 : 1];
    svg.rect(lo.row, lo.col, vertical ? 2 : 1, vertical ? 1 : 2, fill);
  }
  svg.close_group();
  if (with_paths) draw_paths(svg, "family", paths, kPathColor, 3);
  return svg.str();
}

std::string render_dual(const PathFamily& f, const RenderOptions& opt) {
  const int n = static_cast<int>(f.order());
  const double extent = n > 0 ? n - 1 : 0;
  SvgCanvas svg(-0.5, extent + 0.5, -0.5, extent + 0.5, opt);
  draw_lattice(svg, n);
  draw_paths(svg, "family", family_points(f), kPathColor, 3);
  std::vector<std::vector<PlanePoint>> reflected;
  if (n > 0) {
    const double r = n - 0.5;
    for (auto pts : family_points(dual_family(f))) {
      for (auto& p : pts) p = {r - p.v, r - p.h};
      reflected.push_back(std::move(pts));
    }
  }
  draw_paths(svg, "dual", reflected, kDualColor, 2);
  return svg.str();
}

}  // namespace aztec
