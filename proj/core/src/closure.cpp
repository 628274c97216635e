#include "essentia/closure.hpp"

#include <string>

#include "essentia/smith.hpp"

namespace essentia {

namespace {

void require_same_ambient(const IntLattice& a, const IntLattice& b) {
  if (!(a.ring() == b.ring()) || a.ambient_rank() != b.ambient_rank())
    throw DomainError("lattices live in different ambients: " + a.ring().name() + "^" +
                      std::to_string(a.ambient_rank()) + " and " + b.ring().name() + "^" +
                      std::to_string(b.ambient_rank()));
}

// Coordinates of every basis row of `n` in the basis of `m`.
Matrix coordinate_matrix(const IntLattice& n, const IntLattice& m) {
  Matrix c(m.ring(), n.rank(), m.rank());
  for (std::size_t i = 0; i < n.rank(); ++i) {
    const auto coords = m.coordinates(n.basis().row(i));
    if (!coords) throw DomainError("lattice is not contained in the ambient lattice");
    for (std::size_t j = 0; j < m.rank(); ++j) c(i, j) = (*coords)[j];
  }
  return c;
}

IntLattice image(const Matrix& f, const IntLattice& t) {
  return IntLattice(t.ring(), f.cols(), t.basis() * f);
}

std::string describe(const IntLattice& l) {
  return "rank " + std::to_string(l.rank()) + " in " + l.ring().name() + "^" + std::to_string(l.ambient_rank());
}

}  // namespace

IntLattice::IntLattice() : ring_(Ring::integers()), basis_(Ring::integers(), 0, 0) {}

IntLattice::IntLattice(Ring ring, std::size_t ambient_rank, const Matrix& generators)
    : ring_(ring), ambient_rank_(ambient_rank) {
  if (generators.cols() != ambient_rank || !(generators.ring() == ring))
    throw DomainError("generators do not live in " + ring.name() + "^" + std::to_string(ambient_rank));
  if (generators.rows() == 0) {
    basis_ = Matrix(ring, 0, ambient_rank);
    return;
  }
  const EchelonForm ech = hermite_normal_form(generators);
  basis_ = ech.basis.row_block(0, ech.rank);
}

IntLattice IntLattice::zero(Ring ring, std::size_t ambient_rank) {
  return IntLattice(ring, ambient_rank, Matrix(ring, 0, ambient_rank));
}

IntLattice IntLattice::full(Ring ring, std::size_t ambient_rank) {
  return IntLattice(ring, ambient_rank, Matrix::identity(ring, ambient_rank));
}

std::optional<std::vector<Element>> IntLattice::coordinates(std::span<const Element> x) const {
  if (x.size() != ambient_rank_) throw DomainError("vector length does not match the ambient rank");
  std::vector<Element> rest(x.begin(), x.end());
  std::vector<Element> coords(rank(), Element::zero(ring_));
  for (std::size_t r = 0; r < rank(); ++r) {
    std::size_t pivot = 0;
    while (basis_(r, pivot).is_zero()) ++pivot;
    const auto [q, rem] = divmod(rest[pivot], basis_(r, pivot));
    if (!rem.is_zero()) return std::nullopt;
    coords[r] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = pivot; j < ambient_rank_; ++j) rest[j] -= q * basis_(r, j);
  }
  for (const auto& e : rest)
    if (!e.is_zero()) return std::nullopt;
  return coords;
}

bool IntLattice::contains(const IntLattice& other) const {
  require_same_ambient(*this, other);
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

bool operator==(const IntLattice& a, const IntLattice& b) {
  return a.ring_ == b.ring_ && a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
}

IntLattice lattice_sum(const IntLattice& a, const IntLattice& b) {
  require_same_ambient(a, b);
  return IntLattice(a.ring(), a.ambient_rank(), a.basis().stack(b.basis()));
}

IntLattice saturate(const IntLattice& n, const IntLattice& m) {
  require_same_ambient(n, m);
  const Matrix c = coordinate_matrix(n, m);
  if (n.rank() == 0) return IntLattice::zero(n.ring(), n.ambient_rank());
  // The rational row space of C is spanned by the first r rows of right^-1,
  // and those rows extend to a basis of R^rank(M).
  const SmithDecomposition snf = smith_normal_form(c);
  const Matrix rows = inverse_unimodular(snf.right).row_block(0, snf.rank());
  return IntLattice(n.ring(), n.ambient_rank(), rows * m.basis());
}

IntLattice saturate(const IntLattice& n) { return saturate(n, IntLattice::full(n.ring(), n.ambient_rank())); }

Element saturation_multiplier(std::span<const Element> x, const IntLattice& n) {
  const IntLattice sat = saturate(n);
  const auto y = sat.coordinates(x);
  if (!y) throw DomainError("vector is not in the closure of the lattice");
  const Matrix c = coordinate_matrix(n, sat);
  // left C right = D; r y lies in the row space of C iff r (y right)_i is a
  // multiple of d_i for every i.
  const SmithDecomposition snf = smith_normal_form(c);
  const std::vector<Element> u = row_times(*y, snf.right);
  Element r = Element::one(n.ring());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Element& d = snf.diagonal(i, i);
    r = lcm(r, exact_div(d, gcd(d, u[i])));
  }
  return normalize(r);
}

std::pair<IntLattice, IntLattice> closure_image(const Matrix& f, const IntLattice& t) {
  if (f.rows() != t.ambient_rank() || !(f.ring() == t.ring()))
    throw DomainError("map of shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                      " does not act on " + t.ring().name() + "^" + std::to_string(t.ambient_rank()));
  return {image(f, saturate(t)), saturate(image(f, t))};
}

std::pair<IntLattice, IntLattice> saturated_sum(const IntLattice& n1, const IntLattice& n2, const IntLattice& m) {
  require_same_ambient(n1, m);
  require_same_ambient(n2, m);
  if (!m.contains(n1) || !m.contains(n2)) throw DomainError("summand is not contained in the ambient lattice");
  const IntLattice sum = lattice_sum(n1, n2);
  if (sum.rank() != n1.rank() + n2.rank()) throw DomainError("summands intersect non-trivially");
  return {saturate(sum, m), saturate(lattice_sum(saturate(n1, m), saturate(n2, m)), m)};
}

RankSequence rank_sequence(const IntLattice& u, const IntLattice& v, const IntLattice& m) {
  require_same_ambient(u, m);
  require_same_ambient(v, m);
  if (!m.contains(v)) throw DomainError("V is not contained in M");
  if (!v.contains(u)) throw DomainError("U is not contained in V");
  const Ring ring = m.ring();
  const IntLattice cu = saturate(u, m);
  const IntLattice cv = saturate(v, m);
  const std::size_t ru = cu.rank(), rm = m.rank();

  // M-coordinates c map to y = c right; the first ru entries of y span
  // Cl(U), the rest coordinatize M/Cl(U).
  const SmithDecomposition snf = smith_normal_form(coordinate_matrix(cu, m));
  const Matrix& right = snf.right;
  const Matrix back = inverse_unimodular(right);

  const Matrix y = coordinate_matrix(v, m) * right;
  const IntLattice q(ring, rm - ru, y.col_block(ru, rm - ru));
  const IntLattice q_closed = saturate(q);

  RankSequence out;
  out.rank_u = ru;
  out.rank_v = cv.rank();
  out.rank_q = q_closed.rank();
  out.lifts_in_closure = true;
  for (std::size_t i = 0; i < q_closed.rank(); ++i) {
    std::vector<Element> lift(rm, Element::zero(ring));
    for (std::size_t j = 0; j < rm - ru; ++j) lift[ru + j] = q_closed.basis()(i, j);
    const std::vector<Element> in_m = row_times(row_times(lift, back), m.basis());
    out.lifts_in_closure = out.lifts_in_closure && cv.contains(in_m);
  }
  return out;
}

Report socle_closure_check(const IntLattice& n, const IntLattice& m) {
  const IntLattice cl = saturate(n, m);
  const IntLattice zero = IntLattice::zero(m.ring(), m.ambient_rank());
  // A non-zero vector of a free module is killed only by 0, so no vector
  // has a prime annihilator and every socle here is 0.
  auto has_nonzero_rows = [](const IntLattice& l) {
    for (std::size_t i = 0; i < l.rank(); ++i) {
      bool nonzero = false;
      for (const auto& e : l.basis().row(i)) nonzero = nonzero || !e.is_zero();
      if (!nonzero) return false;
    }
    return true;
  };
  const IntLattice soc_of_closure = zero;
  const IntLattice closure_of_soc = saturate(zero, m);
  Report r;
  r.module = describe(n) + " inside " + describe(m);
  r.checks.push_back({"closure_socle_zero", has_nonzero_rows(cl), "Cl(N) has " + describe(cl) + ", socle 0"});
  r.checks.push_back({"socle_closure_zero", has_nonzero_rows(n) && closure_of_soc == zero, "Soc(N) = 0, Cl(0) = 0"});
  r.checks.push_back({"sides_equal", soc_of_closure == closure_of_soc, "0 = 0"});
  r.checks.push_back({"socle_not_essential", true,
                      m.rank() == 0 ? "M = 0 is semisimple"
                                    : "M has rank " + std::to_string(m.rank()) + " and socle 0, which is not essential"});
  return r;
}

}  // namespace essentia
