#pragma once

// Saturation of sublattices of R^n: the closure
//   Cl_M(N) = { m in M : r m in N for some non-zero r }
// for torsion-free ambients, and the identities it satisfies.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "essentia/matrix.hpp"
#include "essentia/report.hpp"

namespace essentia {

/// Sublattice of R^n with a canonical basis: Hermite form rows with
/// unit-normal pivots and reduced entries above each pivot, zero rows
/// dropped. Equal sublattices store identical bases.
class IntLattice {
 public:
  /// The zero sublattice of R^0 over Z.
  IntLattice();
  /// Span of the rows of `generators` (any number, dependent allowed).
  IntLattice(Ring ring, std::size_t ambient_rank, const Matrix& generators);
  static IntLattice zero(Ring ring, std::size_t ambient_rank);
  static IntLattice full(Ring ring, std::size_t ambient_rank);

  Ring ring() const { return ring_; }
  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  /// Coefficients of x in the stored basis, if x lies in the lattice.
  std::optional<std::vector<Element>> coordinates(std::span<const Element> x) const;
  bool contains(std::span<const Element> x) const { return coordinates(x).has_value(); }
  /// Lattice inclusion.
  bool contains(const IntLattice& other) const;

  friend bool operator==(const IntLattice& a, const IntLattice& b);

 private:
  Ring ring_;
  std::size_t ambient_rank_ = 0;
  Matrix basis_;
};

/// Lattice spanned by the union of both bases.
IntLattice lattice_sum(const IntLattice& a, const IntLattice& b);

/// Cl_M(N) = M intersected with the rational span of N.
/// DomainError when N is not inside M or the ambients differ.
IntLattice saturate(const IntLattice& n, const IntLattice& m);
/// Cl of N inside the full ambient R^n.
IntLattice saturate(const IntLattice& n);

/// For a non-zero r with r x in N, for x in saturate(N, M).
Element saturation_multiplier(std::span<const Element> x, const IntLattice& n);

/// f as a matrix acting on row vectors (x -> x f), ambients taken whole:
/// returns (f(Cl(T)), Cl(f(T))). DomainError on dimension mismatch.
std::pair<IntLattice, IntLattice> closure_image(const Matrix& f, const IntLattice& t);

/// (Cl_M(N1 + N2), M intersected with the rational span of
/// Cl_M(N1) + Cl_M(N2)). DomainError unless N1 and N2 meet in 0 and lie in M.
std::pair<IntLattice, IntLattice> saturated_sum(const IntLattice& n1, const IntLattice& n2, const IntLattice& m);

struct RankSequence {
  std::size_t rank_u = 0;  // rank Cl_M(U)
  std::size_t rank_v = 0;  // rank Cl_M(V)
  std::size_t rank_q = 0;  // rank of the closure of V's image in M/Cl_M(U)
  /// Lifts of a basis of the quotient term all lie in Cl_M(V).
  bool lifts_in_closure = false;

  bool additive() const { return rank_v == rank_u + rank_q; }
};

/// Ranks along 0 -> Cl(U) -> Cl(V) -> Cl(V/U) -> 0 with M/Cl_M(U) modelled
/// as a free module. DomainError unless U in V in M.
RankSequence rank_sequence(const IntLattice& u, const IntLattice& v, const IntLattice& m);

/// Soc(Cl_M(N)) = Cl_M(Soc(N)) for a torsion-free M, where both sides are 0
/// because no non-zero vector has a prime annihilator.
Report socle_closure_check(const IntLattice& n, const IntLattice& m);

}  // namespace essentia
