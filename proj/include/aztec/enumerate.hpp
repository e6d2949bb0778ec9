#pragma once

// Brute-force ground truth at small orders: exhaustive enumeration of path
// families, the step statistics of disjoint families, and an exhaustive check
// that combing is a bijection.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "aztec/pathfam.hpp"

namespace aztec {

inline constexpr std::size_t kDefaultEnumerationCap = 5;

// All disjoint n-families, by backtracking path by path from P_{n-1} down to
// P_0 over an occupancy grid. Sorted. Throws CapExceeded when n > cap.
std::vector<PathFamily> enumerate_disjoint(std::size_t n,
                                           std::size_t cap = kDefaultEnumerationCap);

// All Schroeder n-families, disjoint or not. Sorted.
std::vector<PathFamily> enumerate_schroder_families(
    std::size_t n, std::size_t cap = kDefaultEnumerationCap);

// Entry k: vertical steps in column k, 0 <= k < n.
std::vector<unsigned> column_counts(const PathFamily& f);
// Entry j: horizontal steps from column j to j+1, 0 <= j < n-1.
std::vector<unsigned> intercolumn_counts(const PathFamily& f);
// Entry r: horizontal steps at level r, 0 <= r < n.
std::vector<unsigned> row_counts(const PathFamily& f);
unsigned diagonal_step_count(const PathFamily& f);
unsigned horizontal_step_count(const PathFamily& f);

enum class Statistic {
  DiagonalSteps,
  HorizontalSteps,
  ColumnCounts,
  InterColumnCounts,
  RowCounts,
  ColumnAndInterColumn,  // column counts followed by inter-column counts
};

bool parse_statistic(const std::string& name, Statistic& out);

std::vector<unsigned> statistic_of(const PathFamily& f, Statistic s);

using Histogram = std::map<std::vector<unsigned>, std::uint64_t>;

Histogram joint_distribution(std::size_t n, Statistic s,
                             std::size_t cap = kDefaultEnumerationCap);

// Over all bit triangles of order n: zero bits per row (rows 0..n-1) followed
// by zero bits per column (columns 0..n-2).
Histogram triangle_zero_distribution(std::size_t n);

// One line per key, keys ascending: "k0 k1 ... : count".
std::string format_histogram(const Histogram& h);

using CombFunction = std::function<PathFamily(const BitTriangle&)>;
using UncombFunction = std::function<BitTriangle(const PathFamily&)>;

struct BijectionReport {
  std::size_t n = 0;
  std::uint64_t triangles = 0;
  std::uint64_t disjoint_families = 0;
  std::uint64_t matched = 0;  // distinct comb images that are disjoint families
  bool injective = true;
  bool image_matches = true;
  bool uncomb_after_comb = true;
  bool comb_after_uncomb = true;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

BijectionReport verify_bijection(std::size_t n,
                                 std::size_t cap = kDefaultEnumerationCap);
BijectionReport verify_bijection(std::size_t n, std::size_t cap,
                                 const CombFunction& comb_fn,
                                 const UncombFunction& uncomb_fn);

}  // namespace aztec
