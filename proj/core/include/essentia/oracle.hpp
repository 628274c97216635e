#pragma once

// Brute-force ground truth. Every submodule of a small finite module is
// enumerated as an explicit element set and the lattice flags are
// recomputed from their definitions. Nothing here calls the decision
// procedures in essential.hpp.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "essentia/fgmod.hpp"
#include "essentia/report.hpp"

namespace essentia::oracle {

/// Largest module the oracle enumerates.
inline constexpr std::uint64_t kMaxOrder = 1024;
/// Largest lattice the oracle builds.
inline constexpr std::size_t kMaxLatticeSize = 100000;

/// Subset of {0, ..., n-1} as a bitset; element 0 is the zero of the module.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t count() const;
  std::vector<std::uint32_t> members() const;

  /// Whether the intersection contains a non-zero element.
  bool meets_nontrivially(const ElementSet& other) const;
  bool subset_of(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Orders by cardinality, then by word content.
  friend bool operator<(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const;
};

/// A finite abelian group as an addition table, together with the
/// additive endomorphisms through which the ring acts. Submodules are the
/// subgroups stable under every action.
class FiniteStructure {
 public:
  /// Elements indexed by torsion code; actions: x over F_p[x], none over Z
  /// (Z-submodules are exactly the subgroups).
  static FiniteStructure from_module(const FGModule& m);
  /// Same group with every residue of R/Ann_R(M) acting.
  static FiniteStructure over_annihilator_quotient(const FGModule& m);

  std::size_t size() const { return n_; }
  std::uint32_t add(std::uint32_t u, std::uint32_t v) const { return table_[std::size_t{u} * n_ + v]; }
  const std::vector<std::vector<std::uint32_t>>& actions() const { return actions_; }

  /// Smallest submodule containing the seeds.
  ElementSet closure(const std::vector<std::uint32_t>& seeds) const;
  /// A + B for submodules A, B.
  ElementSet sum(const ElementSet& a, const ElementSet& b) const;
  /// M/N as coset table. `coset_of[u]` receives the coset index of u;
  /// cosets are numbered by their smallest element.
  FiniteStructure quotient(const ElementSet& n, std::vector<std::uint32_t>& coset_of) const;
  /// The submodule `sub` as a structure of its own; `index_of` receives the
  /// map from sub's new indices to the old ones.
  FiniteStructure restrict_to(const ElementSet& sub, std::vector<std::uint32_t>& old_index) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::vector<std::uint32_t>> actions_;
};

struct LatticeFlags {
  bool essential_incl_top = false;  // meets every non-zero member non-trivially
  bool proper_essential = false;    // additionally != 0 and != M
  bool simple = false;              // exactly two members below or equal
  bool direct_summand = false;      // some member B with A & B = 0 and A + B = M
};

class SubmoduleLattice {
 public:
  const FiniteStructure& structure() const { return structure_; }
  std::size_t size() const { return members_.size(); }
  const ElementSet& member(std::size_t i) const { return members_[i]; }
  const LatticeFlags& flags(std::size_t i) const { return flags_[i]; }
  std::optional<std::size_t> index_of(const ElementSet& s) const;
  /// Members are sorted by (cardinality, content): 0 first, M last.
  std::size_t zero_index() const { return 0; }
  std::size_t top_index() const { return members_.size() - 1; }

  /// Join of all simple members.
  ElementSet socle() const;
  /// Whether a greedy independent sum of simple members reaches M.
  bool is_direct_sum_of_simples() const;

  friend SubmoduleLattice enumerate_submodules(FiniteStructure s);

 private:
  FiniteStructure structure_;
  std::vector<ElementSet> members_;
  std::vector<LatticeFlags> flags_;
};

/// Seeds every cyclic submodule, then joins each member with each cyclic
/// seed until nothing new appears. CapacityError past kMaxLatticeSize.
SubmoduleLattice enumerate_submodules(FiniteStructure s);
/// CapacityError unless M is finite with |M| <= kMaxOrder.
SubmoduleLattice enumerate_submodules(const FGModule& m);

/// The submodule with element set `s` (indices are torsion codes of m).
Submodule to_submodule(const FGModule& m, const ElementSet& s);
ElementSet to_element_set(const Submodule& sub);

std::vector<Submodule> proper_essentials(const FGModule& m);

/// (a) every member is a summand, (b) no proper essential member,
/// (c) M is a direct sum of simple members, (d) the join of simple members
/// is M; passes when the four agree.
Report verify_baba(const FGModule& m, const SubmoduleLattice& lattice);
Report verify_baba(const FGModule& m);
/// Intersection of essential members (M included) equals the socle.
Report verify_babama(const FGModule& m, const SubmoduleLattice& lattice);
Report verify_babama(const FGModule& m);
/// For each proper essential E/N of M/N the preimage E is proper essential
/// in M. Also reports whether M/N and M have proper essentials.
/// DomainError when N is zero or M.
Report verify_gmkj(const FGModule& m, const Submodule& n, const SubmoduleLattice& lattice);
Report verify_gmkj(const FGModule& m, const Submodule& n);
/// The converse fails: M = Z/4, N = {0,2} gives M/N = Z/2 without a proper
/// essential submodule while M has one.
Report verify_gmkj_converse_counterexample();
/// Every non-zero member contains a simple member, and the socle is proper
/// essential exactly when M is not a direct sum of simples.
Report verify_sm(const FGModule& m, const SubmoduleLattice& lattice);
Report verify_sm(const FGModule& m);
/// Submodules over R and over R/Ann_R(M) coincide.
Report verify_ram(const FGModule& m, const SubmoduleLattice& lattice);
/// Pairwise meets and joins of members are members (lattices up to
/// `max_members`; larger ones are reported as skipped).
Report verify_lattice_closure(const FGModule& m, const SubmoduleLattice& lattice, std::size_t max_members = 512);

/// p-primary component of M found by brute force: elements killed by a
/// power of p.
ElementSet primary_component(const FGModule& m, const Element& p);
/// Whether Ann_M(p^i) is strictly inside Ann_M(p^j) for some 0 < i < j,
/// by brute-force computation of the chain.
bool annihilator_chain_grows(const FGModule& m, const Element& p);

}  // namespace essentia::oracle
