#pragma once

// The combing bijection between cliff-shaped and disjoint Schroeder
// n-families.
//
// The basic forward operation untangles two adjacent paths P_i, P_{i+1} up to
// a column k <= i. Writing h_0, h_1 for the levels of the two paths in the
// columns 0..k, it computes the running maximum
//
//   d_j = max { h_0(j') + 1 - h_1(j') : j' <= j },
//
// swaps the step directions of the two paths at every passage j -> j+1 where
// d increases, and moves d_k vertical steps in column k from P_i to P_{i+1}.
// The backward operation recovers the same sequence from the disjoint pair as
// a running minimum taken from column k down to column 0.
//
// A full combing sweep handles columns k = n-1 down to 0, untangling the
// pairs (k, k+1), ..., (n-2, n-1) in each column. The set Pathfam(n, k) of
// families with no vertical steps in non-final columns before k and with
// P_k..P_{n-1} pairwise disjoint is mapped bijectively onto Pathfam(n, k-1)
// at every stage.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aztec/pathfam.hpp"

namespace aztec {

// The sequence (d_0, ..., d_k) of one basic operation, indexed by column.
struct CombTrace {
  std::size_t column = 0;
  std::size_t lower = 0;  // index i of the pair (P_i, P_{i+1})
  std::vector<PathFamily::Count> d;

  PathFamily::Count transferred() const { return d.empty() ? 0 : d.back(); }
};

// Entry level of each path into a column; only meaningful for paths with no
// vertical steps before that column.
using HeightVector = std::vector<std::int64_t>;

// h[i] = i - sum_{j < min(i, k)} B[i][j].
HeightVector entry_heights(const PathFamily& f, std::size_t k);

struct ForwardStep {
  PathFamily family;
  CombTrace trace;
};

struct BackwardStep {
  PathFamily family;
  HeightVector heights;
  CombTrace trace;
};

ForwardStep disj_step(const PathFamily& f, std::size_t i, std::size_t k);

BackwardStep clify_step(const PathFamily& f, const HeightVector& h,
                        std::size_t i, std::size_t k);

// Inner loop of the combing sweep at column k; maps Pathfam(n, k+1) onto
// Pathfam(n, k). When `traces` is given, the traces of the basic operations
// are appended in execution order.
PathFamily comb_column(const PathFamily& f, std::size_t k,
                       std::vector<CombTrace>* traces = nullptr);

// Inverse of comb_column at the same k.
PathFamily uncomb_column(const PathFamily& f, std::size_t k,
                         std::vector<CombTrace>* traces = nullptr);

PathFamily comb(const BitTriangle& t);

// Throws NotDisjoint unless f is a disjoint family.
BitTriangle uncomb(const PathFamily& f);

bool in_pathfam_nk(const PathFamily& f, std::size_t k);

}  // namespace aztec
