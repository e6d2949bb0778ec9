#pragma once

// Delannoy numbers and exact determinants of their square arrays.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace aztec {

using ExactInt = boost::multiprecision::cpp_int;

class SquareMatrixExact {
 public:
  SquareMatrixExact() = default;
  explicit SquareMatrixExact(std::size_t n) : n_(n), entries_(n * n) {}

  static SquareMatrixExact identity(std::size_t n);

  std::size_t order() const { return n_; }

  ExactInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const ExactInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  SquareMatrixExact transposed() const;

  friend SquareMatrixExact operator*(const SquareMatrixExact& a,
                                     const SquareMatrixExact& b);
  friend bool operator==(const SquareMatrixExact&, const SquareMatrixExact&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExactInt> entries_;
};

// Number of Schroeder-type paths from (i, 0) to (0, j), filled in on demand
// from a_{i,0} = a_{0,j} = 1 and a_{i+1,j+1} = a_{i,j+1} + a_{i+1,j} + a_{i,j}.
class DelannoyTable {
 public:
  const ExactInt& operator()(std::size_t i, std::size_t j);

 private:
  void grow(std::size_t rows, std::size_t cols);

  std::vector<std::vector<ExactInt>> rows_;
};

ExactInt delannoy(std::size_t i, std::size_t j);

// (a_{i,j}) for 0 <= i, j < n.
SquareMatrixExact delannoy_matrix(std::size_t n);

// Fraction-free (Bareiss) elimination with row pivoting.
ExactInt det_exact(const SquareMatrixExact& m);

// Unitriangular E with 1 on the diagonal and -1 directly above it.
SquareMatrixExact reduction_transform(std::size_t n);

// E^T A E for A = delannoy_matrix(n).
SquareMatrixExact reduced_delannoy_matrix(std::size_t n);

// Checks E^T A_n E = diag(1, 2 A_{n-1}) exactly. Requires n >= 1.
bool verify_reduction(std::size_t n);

}  // namespace aztec
