#pragma once

// Isomorphism types of finite modules up to a given order.

#include <cstdint>
#include <vector>

#include "essentia/fgmod.hpp"

namespace essentia {

/// Monic irreducibles (positive primes over Z) whose residue field has at
/// most `max_norm` elements, in canonical order.
std::vector<Element> primes_up_to_norm(Ring ring, std::uint64_t max_norm);

/// Every finite module of order <= max_order up to isomorphism, the zero
/// module included, sorted by order and then by invariant factors.
/// CapacityError when max_order exceeds 2^20.
std::vector<FGModule> isomorphism_types(Ring ring, std::uint64_t max_order);

}  // namespace essentia
