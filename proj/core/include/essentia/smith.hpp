#pragma once

#include <cstddef>

#include "essentia/fgmod.hpp"
#include "essentia/matrix.hpp"

namespace essentia {

/// Largest matrix dimension accepted by the normal-form routines.
inline constexpr std::size_t kMaxMatrixDim = 64;

/// left * A * right = diagonal, with unimodular left/right, unit-normal
/// diagonal entries forming a divisibility chain, zeros last.
struct SmithDecomposition {
  Matrix left;
  Matrix diagonal;
  Matrix right;

  std::size_t rank() const;
};

/// Euclidean elimination, pivoting on the smallest non-zero entry (ties to
/// the smallest (row, col)), followed by a gcd/lcm pass that enforces the
/// divisibility chain. Transforms are always accumulated.
SmithDecomposition smith_normal_form(const Matrix& a);

/// transform * A = basis, with `basis` in row echelon normal form: the first
/// `rank` rows are non-zero, pivots unit-normal with strictly increasing
/// columns, entries above each pivot reduced to canonical residues.
struct EchelonForm {
  Matrix basis;
  Matrix transform;
  std::size_t rank = 0;
};

EchelonForm hermite_normal_form(const Matrix& a);

/// Inverse of a unimodular matrix; DomainError if the matrix is not unimodular.
Matrix inverse_unimodular(const Matrix& u);

/// The module with `generators` generators subject to the row relations.
/// DomainError unless relations.cols() == generators.
FGModule presentation_to_module(std::size_t generators, const Matrix& relations);

}  // namespace essentia
