#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace frobnorm {

/// Small dense row-major matrix over a commutative ring element type.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Submatrix on the given row and column index lists.
  DenseMatrix submatrix(const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) const {
    DenseMatrix out(rows.size(), cols.size(), data_.front());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Determinant by cofactor expansion along the first row. Fine for the tiny
/// sizes (h <= 4) that occur as Jacobian minors.
template <class T>
T determinant_expansion(const DenseMatrix<T>& m, const T& zero, const T& one) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  T acc = zero;
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    cols.clear();
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    T minor = determinant_expansion(m.submatrix(rows, cols), zero, one);
    T term = m(0, j) * minor;
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Fraction-free Bareiss elimination. exact_div(a, b) must return a / b for
/// exact divisions.
template <class T, class IsZero, class ExactDiv>
T determinant_bareiss(DenseMatrix<T> m, const T& zero, const T& one, IsZero is_zero,
                      ExactDiv exact_div) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap = k + 1;
      while (swap < n && is_zero(m(swap, k))) ++swap;
      if (swap == n) return zero;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return negate ? zero - m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace frobnorm
