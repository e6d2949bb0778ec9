#pragma once

// Data model for n-families of Schroeder-type lattice paths.
//
// Points are (level, column) pairs with the level increasing upward. Path P_i
// of an n-family runs from (i, 0) to (0, i) using the three steps
//
//   Horizontal  (0, +1)
//   Diagonal    (-1, +1)
//   Vertical    (-1, 0)
//
// A family is stored as two lower triangular matrices (B, D): B[i][j] is the
// direction of the step of P_i from column j to column j + 1 (0 horizontal,
// 1 diagonal, defined for j < i) and D[i][j] counts the vertical steps of P_i
// in column j (defined for j <= i). Vertical steps within a column are
// necessarily consecutive, so the encoding is lossless.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aztec {

struct GridPoint {
  int level = 0;
  int column = 0;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class Step : std::uint8_t { Horizontal, Diagonal, Vertical };

GridPoint advance(GridPoint p, Step step);

// The n(n-1)/2 free bits of a cliff-shaped family. Bit (i, j), 0 <= j < i < n,
// becomes B[i][j] of the family: 0 horizontal, 1 diagonal.
class BitTriangle {
 public:
  BitTriangle() = default;
  explicit BitTriangle(std::size_t n);

  // Bits taken from the binary digits of `index`, bit (i, j) being digit
  // i(i-1)/2 + j. Requires n(n-1)/2 <= 64.
  static BitTriangle from_index(std::size_t n, std::uint64_t index);

  std::size_t order() const { return n_; }
  std::size_t bit_count() const { return bits_.size(); }

  bool bit(std::size_t i, std::size_t j) const;
  void set_bit(std::size_t i, std::size_t j, bool value);

  std::size_t zeros_in_row(std::size_t i) const;
  std::size_t zeros_in_column(std::size_t j) const;

  friend bool operator==(const BitTriangle&, const BitTriangle&) = default;
  friend auto operator<=>(const BitTriangle&, const BitTriangle&) = default;

 private:
  static std::size_t offset(std::size_t i, std::size_t j) {
    return i * (i - 1) / 2 + j;
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

class PathFamily {
 public:
  using Count = std::uint32_t;

  PathFamily() = default;
  // Correctly shaped, all entries zero.
  explicit PathFamily(std::size_t n);

  // Takes rows as given; shape problems are reported by validate_family.
  static PathFamily from_rows(std::vector<std::vector<std::uint8_t>> b,
                              std::vector<std::vector<Count>> d);

  std::size_t order() const { return b_.size(); }

  std::uint8_t b(std::size_t i, std::size_t j) const { return b_[i][j]; }
  Count d(std::size_t i, std::size_t j) const { return d_[i][j]; }
  void set_b(std::size_t i, std::size_t j, std::uint8_t v) { b_[i][j] = v; }
  void set_d(std::size_t i, std::size_t j, Count v) { d_[i][j] = v; }

  const std::vector<std::uint8_t>& b_row(std::size_t i) const { return b_[i]; }
  const std::vector<Count>& d_row(std::size_t i) const { return d_[i]; }

  bool well_shaped() const;

  friend bool operator==(const PathFamily&, const PathFamily&) = default;
  friend auto operator<=>(const PathFamily&, const PathFamily&) = default;

 private:
  std::vector<std::vector<std::uint8_t>> b_;
  std::vector<std::vector<Count>> d_;
};

struct ExplicitPath {
  GridPoint start;
  std::vector<Step> steps;

  std::vector<GridPoint> points() const;
  GridPoint end() const;

  friend bool operator==(const ExplicitPath&, const ExplicitPath&) = default;
};

struct Diagnostic {
  enum class Kind { Shape, BitValue, DescentBalance, SchroderCondition };

  Kind kind;
  std::size_t i;
  std::size_t j;
  std::string message;
};

PathFamily family_from_bits(const BitTriangle& t);

// Throws InvalidFamily unless validate_family(f) is empty.
std::vector<ExplicitPath> explicit_paths(const PathFamily& f);

// Inverse of explicit_paths; throws MalformedPath on wrong endpoints or a
// path leaving the columns 0..i.
PathFamily family_from_paths(const std::vector<ExplicitPath>& paths);

std::vector<Diagnostic> validate_family(const PathFamily& f);
void require_valid(const PathFamily& f);

bool is_disjoint(const PathFamily& f);
bool is_cliff_shaped(const PathFamily& f);

// True when the paths with index >= `from` have pairwise disjoint supports.
bool paths_disjoint_from(const PathFamily& f, std::size_t from);

// Text formats.
//
// BitTriangle: "n", then rows i = 1..n-1, row i holding i space separated bits.
// PathFamily:  "n", then for every i one line "B: b_i0 .. | D: d_i0 .. d_ii".
std::string to_text(const BitTriangle& t);
std::string to_text(const PathFamily& f);
BitTriangle bit_triangle_from_text(std::string_view text);
PathFamily path_family_from_text(std::string_view text);

}  // namespace aztec
