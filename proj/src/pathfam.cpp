#include "aztec/pathfam.hpp"

#include <limits>
#include <sstream>

#include "aztec/errors.hpp"
#include "text_reader.hpp"

namespace aztec {

GridPoint advance(GridPoint p, Step step) {
  switch (step) {
    case Step::Horizontal:
      return {p.level, p.column + 1};
    case Step::Diagonal:
      return {p.level - 1, p.column + 1};
    case Step::Vertical:
      return {p.level - 1, p.column};
  }
  return p;
}

// BitTriangle ---------------------------------------------------------------

BitTriangle::BitTriangle(std::size_t n)
    : n_(n), bits_(n == 0 ? 0 : n * (n - 1) / 2, 0) {}

BitTriangle BitTriangle::from_index(std::size_t n, std::uint64_t index) {
  BitTriangle t(n);
  for (std::size_t k = 0; k < t.bits_.size(); ++k) {
    t.bits_[k] = static_cast<std::uint8_t>((index >> k) & 1u);
  }
  return t;
}

bool BitTriangle::bit(std::size_t i, std::size_t j) const {
  return bits_.at(offset(i, j)) != 0;
}

void BitTriangle::set_bit(std::size_t i, std::size_t j, bool value) {
  bits_.at(offset(i, j)) = value ? 1 : 0;
}

std::size_t BitTriangle::zeros_in_row(std::size_t i) const {
  std::size_t zeros = 0;
  for (std::size_t j = 0; j < i; ++j) zeros += bit(i, j) ? 0 : 1;
  return zeros;
}

std::size_t BitTriangle::zeros_in_column(std::size_t j) const {
  std::size_t zeros = 0;
  for (std::size_t i = j + 1; i < n_; ++i) zeros += bit(i, j) ? 0 : 1;
  return zeros;
}

// PathFamily ----------------------------------------------------------------

PathFamily::PathFamily(std::size_t n) : b_(n), d_(n) {
  for (std::size_t i = 0; i < n; ++i) {
    b_[i].assign(i, 0);
    d_[i].assign(i + 1, 0);
  }
}

PathFamily PathFamily::from_rows(std::vector<std::vector<std::uint8_t>> b,
                                 std::vector<std::vector<Count>> d) {
  PathFamily f;
  f.b_ = std::move(b);
  f.d_ = std::move(d);
  return f;
}

bool PathFamily::well_shaped() const {
  if (b_.size() != d_.size()) return false;
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (b_[i].size() != i || d_[i].size() != i + 1) return false;
  }
  return true;
}

std::vector<GridPoint> ExplicitPath::points() const {
  std::vector<GridPoint> pts;
  pts.reserve(steps.size() + 1);
  GridPoint p = start;
  pts.push_back(p);
  for (Step s : steps) {
    p = advance(p, s);
    pts.push_back(p);
  }
  return pts;
}

GridPoint ExplicitPath::end() const {
  GridPoint p = start;
  for (Step s : steps) p = advance(p, s);
  return p;
}

// Operations ----------------------------------------------------------------

PathFamily family_from_bits(const BitTriangle& t) {
  const std::size_t n = t.order();
  PathFamily f(n);
  for (std::size_t i = 0; i < n; ++i) {
    PathFamily::Count diagonals = 0;
    for (std::size_t j = 0; j < i; ++j) {
      f.set_b(i, j, t.bit(i, j) ? 1 : 0);
      diagonals += t.bit(i, j) ? 1 : 0;
    }
    f.set_d(i, i, static_cast<PathFamily::Count>(i) - diagonals);
  }
  return f;
}

std::vector<Diagnostic> validate_family(const PathFamily& f) {
  std::vector<Diagnostic> out;
  const std::size_t n = f.order();
  if (!f.well_shaped()) {
    out.push_back({Diagnostic::Kind::Shape, 0, 0,
                   "matrices B and D are not lower triangular of order n"});
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (f.b(i, j) > 1) {
        out.push_back({Diagnostic::Kind::BitValue, i, j,
                       "B entry is neither 0 nor 1"});
      }
      total += f.b(i, j);
    }
    for (std::size_t j = 0; j <= i; ++j) total += f.d(i, j);
    if (total != i) {
      out.push_back({Diagnostic::Kind::DescentBalance, i, 0,
                     "path " + std::to_string(i) + " descends " +
                         std::to_string(total) + " levels instead of " +
                         std::to_string(i)});
    }

    // Lowest point of P_i in column j is (i - prefix - D[i][j], j).
    std::uint64_t prefix = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      if (prefix + f.d(i, j) > j) {
        out.push_back({Diagnostic::Kind::SchroderCondition, i, j,
                       "path " + std::to_string(i) +
                           " passes below the anti-diagonal in column " +
                           std::to_string(j)});
      }
      prefix += f.d(i, j);
      if (j < i) prefix += f.b(i, j);
    }
  }
  return out;
}

void require_valid(const PathFamily& f) {
  auto diagnostics = validate_family(f);
  if (!diagnostics.empty()) {
    const auto& first = diagnostics.front();
    throw InvalidFamily("invalid path family at (" + std::to_string(first.i) +
                        ", " + std::to_string(first.j) + "): " + first.message);
  }
}

std::vector<ExplicitPath> explicit_paths(const PathFamily& f) {
  require_valid(f);
  const std::size_t n = f.order();
  std::vector<ExplicitPath> paths(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExplicitPath& p = paths[i];
    p.start = {static_cast<int>(i), 0};
    for (std::size_t j = 0; j <= i; ++j) {
      p.steps.insert(p.steps.end(), f.d(i, j), Step::Vertical);
      if (j < i) p.steps.push_back(f.b(i, j) ? Step::Diagonal : Step::Horizontal);
    }
  }
  return paths;
}

PathFamily family_from_paths(const std::vector<ExplicitPath>& paths) {
  const std::size_t n = paths.size();
  PathFamily f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ExplicitPath& p = paths[i];
    const GridPoint start{static_cast<int>(i), 0};
    const GridPoint finish{0, static_cast<int>(i)};
    if (p.start != start) {
      throw MalformedPath("path " + std::to_string(i) + " does not start at (" +
                          std::to_string(i) + ", 0)");
    }
    std::size_t column = 0;
    for (Step s : p.steps) {
      if (s == Step::Vertical) {
        if (f.d(i, column) == std::numeric_limits<PathFamily::Count>::max()) {
          throw MalformedPath("vertical step count overflow");
        }
        f.set_d(i, column, f.d(i, column) + 1);
        continue;
      }
      if (column >= i) {
        throw MalformedPath("path " + std::to_string(i) +
                            " moves beyond column " + std::to_string(i));
      }
      f.set_b(i, column, s == Step::Diagonal ? 1 : 0);
      ++column;
    }
    if (p.end() != finish) {
      throw MalformedPath("path " + std::to_string(i) + " does not end at (0, " +
                          std::to_string(i) + ")");
    }
  }
  return f;
}

bool paths_disjoint_from(const PathFamily& f, std::size_t from) {
  const auto paths = explicit_paths(f);
  const std::size_t n = f.order();
  // Points of a valid family lie in [0, n) x [0, n).
  std::vector<std::uint8_t> occupied(n * n, 0);
  for (std::size_t i = from; i < n; ++i) {
    GridPoint p = paths[i].start;
    auto visit = [&](GridPoint q) {
      auto& cell = occupied[static_cast<std::size_t>(q.level) * n +
                            static_cast<std::size_t>(q.column)];
      if (cell) return false;
      cell = 1;
      return true;
    };
    if (!visit(p)) return false;
    for (Step s : paths[i].steps) {
      p = advance(p, s);
      if (!visit(p)) return false;
    }
  }
  return true;
}

bool is_disjoint(const PathFamily& f) { return paths_disjoint_from(f, 0); }

bool is_cliff_shaped(const PathFamily& f) {
  for (std::size_t i = 0; i < f.order(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (f.d(i, j) != 0) return false;
    }
  }
  return true;
}

// Text formats --------------------------------------------------------------

std::string to_text(const BitTriangle& t) {
  std::ostringstream out;
  out << t.order() << '\n';
  for (std::size_t i = 1; i < t.order(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (j > 0) out << ' ';
      out << (t.bit(i, j) ? 1 : 0);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const PathFamily& f) {
  std::ostringstream out;
  out << f.order() << '\n';
  for (std::size_t i = 0; i < f.order(); ++i) {
    out << "B:";
    for (auto v : f.b_row(i)) out << ' ' << static_cast<unsigned>(v);
    out << " | D:";
    for (auto v : f.d_row(i)) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

namespace {

std::size_t read_order(detail::TextReader& reader) {
  auto line = reader.next_line();
  if (!line) throw ParseError(1, 1, "missing order line");
  auto tokens = detail::TextReader::split(*line);
  if (tokens.size() != 1) reader.fail(1, "expected a single order n");
  long long n = reader.parse_integer(tokens[0]);
  if (n < 0) reader.fail(tokens[0].column, "order must be nonnegative");
  return static_cast<std::size_t>(n);
}

void expect_end(detail::TextReader& reader) {
  if (reader.next_line()) reader.fail(1, "unexpected trailing content");
}

}  // namespace

BitTriangle bit_triangle_from_text(std::string_view text) {
  detail::TextReader reader(text);
  const std::size_t n = read_order(reader);
  BitTriangle t(n);
  for (std::size_t i = 1; i < n; ++i) {
    auto line = reader.next_line();
    if (!line) {
      throw ParseError(reader.line_number() + 1, 1,
                       "missing row " + std::to_string(i) + " of the triangle");
    }
    auto tokens = detail::TextReader::split(*line);
    if (tokens.size() != i) {
      reader.fail(1, "row " + std::to_string(i) + " must hold " +
                         std::to_string(i) + " bits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      long long v = reader.parse_integer(tokens[j]);
      if (v != 0 && v != 1) reader.fail(tokens[j].column, "bit must be 0 or 1");
      t.set_bit(i, j, v == 1);
    }
  }
  expect_end(reader);
  return t;
}

PathFamily path_family_from_text(std::string_view text) {
  detail::TextReader reader(text);
  const std::size_t n = read_order(reader);
  PathFamily f(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto line = reader.next_line();
    if (!line) {
      throw ParseError(reader.line_number() + 1, 1,
                       "missing line for path " + std::to_string(i));
    }
    auto tokens = detail::TextReader::split(*line);
    if (tokens.empty() || tokens[0].text != "B:") reader.fail(1, "expected 'B:'");
    std::size_t k = 1;
    std::vector<detail::Token> b_tokens, d_tokens;
    while (k < tokens.size() && tokens[k].text != "|") b_tokens.push_back(tokens[k++]);
    if (k == tokens.size()) reader.fail(line->size() + 1, "expected '|'");
    ++k;
    if (k == tokens.size() || tokens[k].text != "D:") {
      reader.fail(k < tokens.size() ? tokens[k].column : line->size() + 1,
                  "expected 'D:'");
    }
    ++k;
    while (k < tokens.size()) d_tokens.push_back(tokens[k++]);
    if (b_tokens.size() != i) {
      reader.fail(tokens[0].column, "path " + std::to_string(i) + " needs " +
                                        std::to_string(i) + " B entries");
    }
    if (d_tokens.size() != i + 1) {
      reader.fail(tokens[0].column, "path " + std::to_string(i) + " needs " +
                                        std::to_string(i + 1) + " D entries");
    }
    for (std::size_t j = 0; j < i; ++j) {
      long long v = reader.parse_integer(b_tokens[j]);
      if (v != 0 && v != 1) reader.fail(b_tokens[j].column, "B entry must be 0 or 1");
      f.set_b(i, j, static_cast<std::uint8_t>(v));
    }
    for (std::size_t j = 0; j <= i; ++j) {
      long long v = reader.parse_integer(d_tokens[j]);
      if (v < 0 || v > std::numeric_limits<PathFamily::Count>::max()) {
        reader.fail(d_tokens[j].column, "D entry out of range");
      }
      f.set_d(i, j, static_cast<PathFamily::Count>(v));
    }
  }
  expect_end(reader);
  return f;
}

}  // namespace aztec
