#include "aztec/lgv.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace aztec {

SquareMatrixExact SquareMatrixExact::identity(std::size_t n) {
  SquareMatrixExact m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

SquareMatrixExact SquareMatrixExact::transposed() const {
  SquareMatrixExact t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

SquareMatrixExact operator*(const SquareMatrixExact& a, const SquareMatrixExact& b) {
  if (a.order() != b.order()) throw std::invalid_argument("matrix orders differ");
  const std::size_t n = a.order();
  SquareMatrixExact c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

void DelannoyTable::grow(std::size_t rows, std::size_t cols) {
  const std::size_t old_rows = rows_.size();
  const std::size_t old_cols = rows_.empty() ? 0 : rows_.front().size();
  rows = std::max(rows, old_rows);
  cols = std::max(cols, old_cols);
  if (rows == old_rows && cols == old_cols) return;
  rows_.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t filled = i < old_rows ? old_cols : 0;
    rows_[i].resize(cols);
    for (std::size_t j = filled; j < cols; ++j) {
      if (i == 0 || j == 0) {
        rows_[i][j] = 1;
      } else {
        rows_[i][j] = rows_[i - 1][j] + rows_[i][j - 1] + rows_[i - 1][j - 1];
      }
    }
  }
}

const ExactInt& DelannoyTable::operator()(std::size_t i, std::size_t j) {
  if (i >= rows_.size() || rows_.empty() || j >= rows_.front().size()) {
    grow(i + 1, j + 1);
  }
  return rows_[i][j];
}

ExactInt delannoy(std::size_t i, std::size_t j) {
  DelannoyTable table;
  return table(i, j);
}

SquareMatrixExact delannoy_matrix(std::size_t n) {
  DelannoyTable table;
  SquareMatrixExact a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = table(i, j);
  }
  return a;
}

ExactInt det_exact(const SquareMatrixExact& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  SquareMatrixExact w = m;
  ExactInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && w(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / previous;
      }
      w(i, k) = 0;
    }
    previous = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

SquareMatrixExact reduction_transform(std::size_t n) {
  SquareMatrixExact e = SquareMatrixExact::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) e(i, i + 1) = -1;
  return e;
}

SquareMatrixExact reduced_delannoy_matrix(std::size_t n) {
  const SquareMatrixExact e = reduction_transform(n);
  return e.transposed() * delannoy_matrix(n) * e;
}

bool verify_reduction(std::size_t n) {
  if (n == 0) throw std::invalid_argument("verify_reduction needs n >= 1");
  const SquareMatrixExact reduced = reduced_delannoy_matrix(n);
  const SquareMatrixExact smaller = delannoy_matrix(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ExactInt expected;
      if (i == 0 || j == 0) {
        expected = (i == j) ? 1 : 0;
      } else {
        expected = 2 * smaller(i - 1, j - 1);
      }
      if (reduced(i, j) != expected) return false;
    }
  }
  return true;
}

}  // namespace aztec
