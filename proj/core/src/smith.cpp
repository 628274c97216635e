#include "essentia/smith.hpp"

#include <optional>
#include <tuple>
#include <string>
#include <utility>

namespace essentia {
namespace {

void check_capacity(const Matrix& a) {
  if (a.rows() > kMaxMatrixDim || a.cols() > kMaxMatrixDim)
    throw CapacityError("matrix " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " exceeds the " + std::to_string(kMaxMatrixDim) + "x" +
                        std::to_string(kMaxMatrixDim) + " cap");
}

// Smallest-size non-zero entry of s[t.., t..], ties to the smallest (row, col).
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const Matrix& s, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j).is_zero()) continue;
      if (!best || compare_size(s(i, j), s(best->first, best->second)) < 0) best = {i, j};
    }
  return best;
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  while (r < n && !diagonal(r, r).is_zero()) ++r;
  return r;
}

SmithDecomposition smith_normal_form(const Matrix& a) {
  check_capacity(a);
  const Ring ring = a.ring();
  Matrix s = a;
  Matrix u = Matrix::identity(ring, a.rows());
  Matrix v = Matrix::identity(ring, a.cols());
  const std::size_t n = std::min(a.rows(), a.cols());

  std::size_t t = 0;
  for (; t < n; ++t) {
    const auto first = find_pivot(s, t);
    if (!first) break;
    auto [pi, pj] = *first;
    while (true) {
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      const Element p = s(t, t);
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t).is_zero()) continue;
        const Element q = -divmod(s(i, t), p).quotient;
        s.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j).is_zero()) continue;
        const Element q = -divmod(s(t, j), p).quotient;
        s.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows() && clean; ++i) clean = s(i, t).is_zero();
      for (std::size_t j = t + 1; j < s.cols() && clean; ++j) clean = s(t, j).is_zero();
      if (clean) break;
      // Remainders are strictly smaller than the old pivot.
      std::tie(pi, pj) = *find_pivot(s, t);
    }
  }
  const std::size_t rank = t;

  for (std::size_t i = 0; i < rank; ++i) {
    const Element inv = unit_inverse(unit_part(s(i, i)));
    s.scale_row(i, inv);
    u.scale_row(i, inv);
  }

  // gcd/lcm fix-up: after handling (i, j) for all j > i, d_i divides every later d_j.
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      const Element di = s(i, i), dj = s(j, j);
      if (divides(di, dj)) continue;
      const auto [g, x, y] = ext_gcd(di, dj);
      const Element ai = exact_div(di, g), aj = exact_div(dj, g);
      // L = [[x, y], [-aj, ai]] on rows, R = [[1, -y*aj], [1, x*ai]] on columns; det L = det R = 1.
      s.combine_rows(i, j, x, y, -aj, ai);
      u.combine_rows(i, j, x, y, -aj, ai);
      const Element one = Element::one(ring);
      s.combine_cols(i, j, one, one, -(y * aj), x * ai);
      v.combine_cols(i, j, one, one, -(y * aj), x * ai);
      for (std::size_t k : {i, j}) {
        const Element inv = unit_inverse(unit_part(s(k, k)));
        s.scale_row(k, inv);
        u.scale_row(k, inv);
      }
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

EchelonForm hermite_normal_form(const Matrix& a) {
  check_capacity(a);
  Matrix h = a;
  Matrix u = Matrix::identity(a.ring(), a.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = row; i < h.rows(); ++i)
        if (!h(i, col).is_zero() && (!best || compare_size(h(i, col), h(*best, col)) < 0)) best = i;
      if (!best) break;
      h.swap_rows(row, *best);
      u.swap_rows(row, *best);
      bool clean = true;
      for (std::size_t i = row + 1; i < h.rows(); ++i) {
        if (h(i, col).is_zero()) continue;
        const Element q = -divmod(h(i, col), h(row, col)).quotient;
        h.add_row_multiple(i, row, q);
        u.add_row_multiple(i, row, q);
        clean = clean && h(i, col).is_zero();
      }
      if (clean) break;
    }
    if (h(row, col).is_zero()) continue;
    const Element inv = unit_inverse(unit_part(h(row, col)));
    h.scale_row(row, inv);
    u.scale_row(row, inv);
    for (std::size_t i = 0; i < row; ++i) {
      if (h(i, col).is_zero()) continue;
      const Element q = -divmod(h(i, col), h(row, col)).quotient;
      h.add_row_multiple(i, row, q);
      u.add_row_multiple(i, row, q);
    }
    ++row;
  }
  return {std::move(h), std::move(u), row};
}

Matrix inverse_unimodular(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const SmithDecomposition d = smith_normal_form(m);
  if (!(d.diagonal == Matrix::identity(m.ring(), m.rows()))) throw DomainError("matrix is not unimodular");
  // L m R = I  =>  m^-1 = R L.
  return d.right * d.left;
}

FGModule presentation_to_module(std::size_t generators, const Matrix& relations) {
  if (relations.cols() != generators)
    throw DomainError("relation matrix has " + std::to_string(relations.cols()) + " columns for " +
                      std::to_string(generators) + " generators");
  const SmithDecomposition d = smith_normal_form(relations);
  const std::size_t rank = d.rank();
  std::vector<Element> factors;
  for (std::size_t i = 0; i < rank; ++i)
    if (!d.diagonal(i, i).is_unit()) factors.push_back(d.diagonal(i, i));
  return FGModule(relations.ring(), generators - rank, std::move(factors));
}

}  // namespace essentia
