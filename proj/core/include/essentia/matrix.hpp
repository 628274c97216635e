#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "essentia/pid.hpp"

namespace essentia {

/// Dense row-major matrix over one coefficient ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(Ring ring, std::size_t n);
  /// Every row must have the same length and every entry must lie in `ring`.
  static Matrix from_rows(Ring ring, const std::vector<std::vector<Element>>& rows);
  static Matrix diagonal(Ring ring, std::span<const Element> diag);

  Ring ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Element> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  std::vector<std::vector<Element>> to_rows() const;

  Matrix transpose() const;
  /// Rows [first, first + count) as a new matrix.
  Matrix row_block(std::size_t first, std::size_t count) const;
  /// Columns [first, first + count) as a new matrix.
  Matrix col_block(std::size_t first, std::size_t count) const;
  /// Stacks the rows of `below` under this matrix (same ring, same width).
  Matrix stack(const Matrix& below) const;
  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  bool is_zero() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Element& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Element& factor);
  void scale_row(std::size_t i, const Element& factor);
  /// (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
  void combine_rows(std::size_t i, std::size_t j, const Element& a, const Element& b, const Element& c,
                    const Element& d);
  /// (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
  void combine_cols(std::size_t i, std::size_t j, const Element& a, const Element& b, const Element& c,
                    const Element& d);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  Ring ring_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> entries_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Element determinant(const Matrix& a);

/// Row vector times matrix.
std::vector<Element> row_times(std::span<const Element> x, const Matrix& a);

}  // namespace essentia
