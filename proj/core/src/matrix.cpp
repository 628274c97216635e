#include "essentia/matrix.hpp"

#include <algorithm>
#include <utility>

namespace essentia {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Element::zero(ring)) {}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Element::one(ring);
  return m;
}

Matrix Matrix::from_rows(Ring ring, const std::vector<std::vector<Element>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(rows[i][j].ring() == ring)) throw DomainError("matrix entry outside " + ring.name());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::diagonal(Ring ring, std::span<const Element> diag) {
  Matrix m(ring, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (!(diag[i].ring() == ring)) throw DomainError("matrix entry outside " + ring.name());
    m(i, i) = diag[i];
  }
  return m;
}

std::vector<std::vector<Element>> Matrix::to_rows() const {
  std::vector<std::vector<Element>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  Matrix m(ring_, count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
  return m;
}

Matrix Matrix::col_block(std::size_t first, std::size_t count) const {
  Matrix m(ring_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

Matrix Matrix::stack(const Matrix& below) const {
  if (!(below.ring_ == ring_) || below.cols_ != cols_) throw DomainError("stack: shape or ring mismatch");
  Matrix m(ring_, rows_ + below.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
  std::copy(below.entries_.begin(), below.entries_.end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return m;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  Matrix m(ring_, row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) m(i, j) = (*this)(row_idx[i], col_idx[j]);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Element& factor) {
  if (factor.is_zero()) return;
  for (std::size_t k = 0; k < cols_; ++k)
    if (!(*this)(src, k).is_zero()) (*this)(dst, k) += factor * (*this)(src, k);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Element& factor) {
  if (factor.is_zero()) return;
  for (std::size_t k = 0; k < rows_; ++k)
    if (!(*this)(k, src).is_zero()) (*this)(k, dst) += factor * (*this)(k, src);
}

void Matrix::scale_row(std::size_t i, const Element& factor) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) *= factor;
}

void Matrix::combine_rows(std::size_t i, std::size_t j, const Element& a, const Element& b, const Element& c,
                          const Element& d) {
  for (std::size_t k = 0; k < cols_; ++k) {
    const Element x = (*this)(i, k), y = (*this)(j, k);
    (*this)(i, k) = a * x + b * y;
    (*this)(j, k) = c * x + d * y;
  }
}

void Matrix::combine_cols(std::size_t i, std::size_t j, const Element& a, const Element& b, const Element& c,
                          const Element& d) {
  for (std::size_t k = 0; k < rows_; ++k) {
    const Element x = (*this)(k, i), y = (*this)(k, j);
    (*this)(k, i) = a * x + b * y;
    (*this)(k, j) = c * x + d * y;
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.ring_ == b.ring_)) throw DomainError("matrix product over mixed rings");
  if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
  Matrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Element& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

Element determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  const Ring ring = a.ring();
  if (n == 0) return Element::one(ring);
  Matrix m = a;
  Element prev = Element::one(ring);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k).is_zero()) ++swap_with;
      if (swap_with == n) return Element::zero(ring);
      m.swap_rows(k, swap_with);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

std::vector<Element> row_times(std::span<const Element> x, const Matrix& a) {
  if (x.size() != a.rows()) throw DomainError("row vector length mismatch");
  std::vector<Element> out(a.cols(), Element::zero(a.ring()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += x[i] * a(i, j);
  }
  return out;
}

}  // namespace essentia
