#pragma once

// Deciding and constructing proper essential submodules of finitely
// generated modules over a PID.
//
// A proper essential submodule E of M is a submodule with 0 != E != M that
// meets every non-zero submodule of M non-trivially. Over a PID such an E
// exists exactly when M has positive free rank or an invariant factor that
// is not square-free.

#include <cstddef>
#include <optional>
#include <string>

#include "essentia/fgmod.hpp"

namespace essentia {

enum class ReasonKind { BettiPositive, NonSquarefreeFactor, None };

struct EssentialReason {
  ReasonKind kind = ReasonKind::None;
  // NonSquarefreeFactor only: index into the invariant factors, the first
  // prime (canonical order) whose square divides that factor, its exponent.
  std::size_t index = 0;
  std::optional<Element> prime;
  unsigned exponent = 0;

  std::string to_string() const;
};

/// Where a witness differs from the whole module: coordinate `index` of the
/// given kind is replaced by <ideal_generator> times that coordinate.
struct WitnessCertificate {
  enum class Component { Free, Torsion };
  Component component = Component::Free;
  std::size_t index = 0;
  Element ideal_generator;
};

struct EssentialWitness {
  Submodule submodule;
  WitnessCertificate certificate;
};

struct EssentialVerdict {
  bool exists = false;
  EssentialReason reason;
  std::optional<EssentialWitness> witness;
};

/// Decides existence; the first trigger wins, free rank before factors.
/// The witness is attached whenever one exists.
EssentialVerdict has_proper_essential(const FGModule& m);

/// A proper essential submodule: one free coordinate R replaced by <p>
/// (p = 2 over Z, x over F_p[x]) or, for torsion modules, the first
/// non-square-free factor's component replaced by <p>/<a_i>; every other
/// component is kept whole. PreconditionError for semisimple modules.
EssentialWitness essential_witness(const FGModule& m);

/// Element-sweep test: E != 0, E != M, and <m> meets E non-trivially for
/// every non-zero m. Every non-zero submodule contains such a cyclic <m>,
/// so this is equivalent to quantifying over all submodules.
/// CapacityError for infinite M or |M| above kEnumerationCap; DomainError
/// when E belongs to another module or is not closed.
bool is_proper_essential(const FGModule& m, const Submodule& e);

/// Whether Ann_M(p^i) is strictly contained in Ann_M(p^j) for some
/// 0 < i < j, i.e. whether p^2 divides an invariant factor.
/// DomainError for betti > 0 or non-prime p.
bool primary_criterion(const FGModule& m, const Element& p);

/// Whether Soc(M) is a proper essential submodule of M: for torsion
/// modules exactly when M is not semisimple; never for betti >= 1, since a
/// free generator spans a submodule meeting the socle in 0.
bool is_socle_essential(const FGModule& m);

}  // namespace essentia
