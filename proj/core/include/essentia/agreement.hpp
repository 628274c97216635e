#pragma once

// Cross-checks of the decision procedures against the brute-force oracle
// on one finite module.

#include <cstdint>

#include "essentia/fgmod.hpp"
#include "essentia/report.hpp"

namespace essentia {

/// Every check the sweep runs on a module: criterion against oracle,
/// witness soundness, the semisimplicity and socle identities, the
/// primary criterion per prime, the quotient lift on one random N drawn
/// with `seed`, the change of ring, and lattice closure.
/// CapacityError unless M is finite of order at most oracle::kMaxOrder.
Report check_module(const FGModule& m, std::uint64_t seed);

}  // namespace essentia
