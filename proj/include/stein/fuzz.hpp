#pragma once

// Random test data built from group elements, so that every output stays
// inside V by construction. All draws go through the caller's engine.

#include "stein/groupoid.hpp"
#include "stein/pl.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace stein::fuzz {

using Engine = std::mt19937_64;

// Seed from STEIN_SEED when set, else the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

// Slopes below 1/2 to feed the sample elements.
std::vector<Slope> small_slopes(const RingPtr& ring);

RingElement unit_element(const RingPtr& ring, Engine& g);       // in [0, 1)
RingElement open_unit_element(const RingPtr& ring, Engine& g);  // in (0, 1)
CantorPoint point(const RingPtr& ring, Engine& g);              // in [0+, 1-]
IntervalSet clopen(const RingPtr& ring, Engine& g);             // nonempty, inside (0, 1]

VElement transposition(const RingPtr& ring, Engine& g);
// Product of 3 to 6 random sample, rotation and transposition elements.
VElement element(const RingPtr& ring, Engine& g);

}  // namespace stein::fuzz
