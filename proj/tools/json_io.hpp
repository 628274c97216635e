#pragma once

// JSON schemas for rings, elements, modules, matrices, lattices, verdicts
// and reports. Malformed input raises DomainError naming the offending key.

#include <optional>

#include <json.hpp>

#include "essentia/closure.hpp"
#include "essentia/essential.hpp"
#include "essentia/fgmod.hpp"
#include "essentia/matrix.hpp"
#include "essentia/report.hpp"
#include "essentia/smith.hpp"

namespace essentia::io {

using Json = nlohmann::ordered_json;

/// "int", "polymod:p" or {"polymod": p}.
Ring ring_from_json(const Json& j);
Json ring_to_json(Ring ring);
/// The "ring" key of an object, or `fallback` when absent. DomainError
/// when both are given and disagree.
Ring ring_of(const Json& j, std::optional<Ring> fallback);

/// Integers as numbers or decimal strings; polynomials as coefficient
/// arrays (lowest degree first) or "poly(p; c0,...)" strings.
Element element_from_json(const Json& j, Ring ring);
/// Integers as numbers while they fit in 64 bits, strings beyond.
Json element_to_json(const Element& e);

/// {"ring", "betti", "factors"}; factors are arbitrary non-zero orders and
/// are brought into invariant-factor form.
FGModule module_from_json(const Json& j, std::optional<Ring> fallback);
Json module_to_json(const FGModule& m);
/// {"free": [...], "torsion": [...]}.
Json module_element_to_json(const ModuleElement& x);

/// {"ring", "rows", "cols", "entries"}.
Matrix matrix_from_json(const Json& j, std::optional<Ring> fallback);
Json matrix_to_json(const Matrix& m);
Json smith_to_json(const SmithDecomposition& snf);

/// {"ring", "ambient_rank", "basis"}.
IntLattice lattice_from_json(const Json& j, std::optional<Ring> fallback);
Json lattice_to_json(const IntLattice& l);

Json reason_to_json(const EssentialReason& r);
Json verdict_to_json(const EssentialVerdict& v);
Json witness_to_json(const EssentialWitness& w);
Json socle_to_json(const Socle& s);
Json report_to_json(const Report& r);

}  // namespace essentia::io
