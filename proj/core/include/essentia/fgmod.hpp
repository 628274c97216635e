#pragma once

// Finitely generated modules over a PID in invariant-factor form
//   M = R^b (+) R/<a_1> (+) ... (+) R/<a_m>,   a_1 | a_2 | ... | a_m,
// their elements, and submodules.
//
// Coordinates are numbered free first: 0..b-1 are free, b..b+m-1 torsion.
// The torsion part is addressed by a mixed-radix code (coordinate b is the
// least significant digit); codes give finite submodules a canonical,
// sortable element set.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "essentia/matrix.hpp"
#include "essentia/pid.hpp"

namespace essentia {

/// Largest submodule whose element set is materialized.
inline constexpr std::uint64_t kEnumerationCap = 4096;

class ModuleElement;

/// Immutable handle; copies share the underlying data.
class FGModule {
 public:
  /// The zero module over Z.
  FGModule();
  /// Strict constructor: `factors` must be unit-normal non-zero non-units
  /// forming a divisibility chain. DomainError otherwise.
  FGModule(Ring ring, std::size_t betti, std::vector<Element> factors);

  /// Builds R^betti (+) (+)_k R/<orders[k]> for arbitrary orders: zeros add
  /// free rank, units vanish, the rest is brought into invariant-factor form.
  static FGModule from_cyclic_orders(Ring ring, std::size_t betti, std::span<const Element> orders);
  static FGModule free_module(Ring ring, std::size_t rank);

  Ring ring() const;
  std::size_t betti() const;
  const std::vector<Element>& factors() const;
  std::size_t coordinate_count() const { return betti() + factors().size(); }
  bool is_finite() const { return betti() == 0; }
  bool is_zero() const { return betti() == 0 && factors().empty(); }

  /// Number of elements of the torsion part; CapacityError past 2^63.
  std::uint64_t torsion_order() const;
  /// |M|; DomainError when betti > 0.
  std::uint64_t order() const;

  ModuleElement zero_element() const;
  /// Reduces torsion coordinates into canonical residues.
  ModuleElement element(std::vector<Element> free, std::vector<Element> torsion) const;
  /// Standard generator of coordinate `k` (free coordinates first).
  ModuleElement generator(std::size_t k) const;

  std::uint64_t encode_torsion(std::span<const Element> torsion) const;
  std::vector<Element> decode_torsion(std::uint64_t code) const;
  /// Element of the torsion part with the given code (free part zero).
  ModuleElement torsion_element(std::uint64_t code) const;

  /// Human-readable form, e.g. "Z^1 + Z/2 + Z/4".
  std::string to_string() const;

  friend bool operator==(const FGModule& a, const FGModule& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

FGModule direct_sum(const FGModule& a, const FGModule& b);

class ModuleElement {
 public:
  const FGModule& module() const { return module_; }
  const std::vector<Element>& free() const { return free_; }
  const std::vector<Element>& torsion() const { return torsion_; }

  bool is_zero() const;
  bool is_torsion() const;
  std::uint64_t torsion_code() const { return module_.encode_torsion(torsion_); }
  std::string to_string() const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

 private:
  friend class FGModule;
  ModuleElement(FGModule module, std::vector<Element> free, std::vector<Element> torsion)
      : module_(std::move(module)), free_(std::move(free)), torsion_(std::move(torsion)) {}

  FGModule module_;
  std::vector<Element> free_;
  std::vector<Element> torsion_;
};

/// Coordinatewise sum. DomainError if the parents differ.
ModuleElement element_add(const ModuleElement& x, const ModuleElement& y);
/// r * x with canonical reduction.
ModuleElement element_scale(const ModuleElement& x, const Element& r);
ModuleElement element_neg(const ModuleElement& x);
inline ModuleElement operator+(const ModuleElement& x, const ModuleElement& y) { return element_add(x, y); }
inline ModuleElement operator*(const Element& r, const ModuleElement& x) { return element_scale(x, r); }

/// Unit-normal generator of Ann_R(m): zero when a free coordinate is
/// non-zero, otherwise lcm_i a_i / gcd(a_i, t_i).
Element annihilator(const ModuleElement& m);

/// A submodule. The free projection is kept as an echelon basis; the
/// intersection with the torsion part is kept as a sorted code set whenever
/// it has at most kEnumerationCap elements.
class Submodule {
 public:
  const FGModule& module() const { return module_; }
  const std::vector<ModuleElement>& generators() const { return generators_; }
  /// Echelon basis (rows, betti columns) of the projection onto R^betti.
  const Matrix& free_basis() const { return free_basis_; }
  /// Module elements whose free parts are the rows of free_basis().
  const std::vector<ModuleElement>& free_lifts() const { return free_lifts_; }

  bool is_enumerated() const { return torsion_codes_.has_value(); }
  /// Sorted codes of the torsion intersection; CapacityError when not enumerated.
  const std::vector<std::uint64_t>& torsion_codes() const;
  /// Number of elements (finite modules only).
  std::uint64_t size() const;
  /// The element set, sorted by code (finite modules only).
  std::vector<ModuleElement> elements() const;

  bool contains(const ModuleElement& x) const;
  bool is_zero() const;
  bool is_whole() const;
  /// Closure of the stored element set under addition and ring scaling.
  bool is_closed() const;

  /// An element set taken as given, without closing it; used to feed
  /// candidate submodules from outside. Finite modules only.
  static Submodule from_element_set(const FGModule& m, std::span<const ModuleElement> elements);

  friend bool operator==(const Submodule& a, const Submodule& b);

 private:
  friend Submodule generate(const FGModule& m, std::span<const ModuleElement> gens, bool require_enumeration);

  FGModule module_;
  std::vector<ModuleElement> generators_;
  Matrix free_basis_;
  std::vector<ModuleElement> free_lifts_;
  std::optional<std::vector<std::uint64_t>> torsion_codes_;
};

/// General submodule generated by `gens`. With `require_enumeration` a
/// torsion intersection above kEnumerationCap is a CapacityError;
/// otherwise it is left unenumerated.
Submodule generate(const FGModule& m, std::span<const ModuleElement> gens, bool require_enumeration);

/// <m> = {r m}. CapacityError if m has a non-zero free coordinate or the
/// orbit exceeds kEnumerationCap.
Submodule cyclic(const ModuleElement& m);
/// Submodule generated by torsion elements; errors as for cyclic().
Submodule span(const FGModule& m, std::span<const ModuleElement> gens);
/// Submodule generated by arbitrary elements (free coordinates allowed).
Submodule mixed_span(const FGModule& m, std::span<const ModuleElement> gens);
Submodule zero_submodule(const FGModule& m);
Submodule whole_module(const FGModule& m);
/// Intersection of two enumerated submodules of a finite module.
Submodule intersect(const Submodule& a, const Submodule& b);

/// Semisimple decomposition of the socle: prime and number of copies of R/<p>.
using SocleDecomposition = std::vector<std::pair<Element, std::size_t>>;

struct Socle {
  Submodule submodule;
  SocleDecomposition decomposition;
};

/// Soc(M) = (+)_i (+)_{p | a_i} <(a_i / p) e_i>; the free part contributes nothing.
Socle socle(const FGModule& m);
/// betti = 0 and every invariant factor square-free.
bool is_semisimple(const FGModule& m);

/// Ann_M(p^k) for finite k, the p-primary component when k is empty.
/// DomainError for betti > 0, non-prime p, or k = 0.
Submodule primary_part(const FGModule& m, const Element& p, std::optional<unsigned> k);

struct TorsionPart {
  FGModule module;
  /// embedding[i] is the coordinate of M receiving coordinate i.
  std::vector<std::size_t> embedding;
};

TorsionPart torsion_part(const FGModule& m);

/// Arithmetic directly on torsion codes of a module.
class TorsionCodec {
 public:
  explicit TorsionCodec(const FGModule& m);

  std::uint64_t size() const { return size_; }
  std::uint64_t add(std::uint64_t u, std::uint64_t v) const;
  std::uint64_t neg(std::uint64_t u) const;
  /// Multiplication by the integer k (k >= 0).
  std::uint64_t scale_int(std::uint64_t u, std::uint64_t k) const;
  /// Multiplication by x (polynomial rings only).
  std::uint64_t mul_x(std::uint64_t u) const;
  bool has_variable() const { return !ring_.is_int(); }

  /// Smallest set containing `seeds` closed under + and ring scaling.
  /// Returns nullopt when it would exceed `cap` elements.
  std::optional<std::vector<std::uint64_t>> closure(std::span<const std::uint64_t> seeds, std::uint64_t cap) const;

 private:
  struct Coordinate {
    std::uint64_t radix;
    std::uint64_t stride;
    int degree;                          // polynomial rings
    std::vector<std::uint32_t> modulus;  // monic a_i, polynomial rings
  };
  std::uint64_t digit(std::uint64_t code, const Coordinate& c) const { return code / c.stride % c.radix; }

  Ring ring_;
  std::uint64_t size_ = 1;
  std::vector<Coordinate> coords_;
};

}  // namespace essentia
