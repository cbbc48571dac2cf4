#pragma once

#include <cstdint>

#include "lrc/core.hpp"

namespace lrc {

struct RandomSpec {
    int layers = 3;
    int perLayer = 2;     // vertices per layer drawn uniformly from 1..perLayer
    int maxWidth = 3;     // widths drawn uniformly from 1..maxWidth
    int edgePercent = 60; // chance per candidate edge
};

/// Deterministic seeded instance generator. Same spec + seed always yields
/// the same instance, byte for byte after serialization. Vertical edges are
/// drawn along a random monotone staircase per layer pair, so the result is
/// always non-crossing and validateInstance-clean.
LayeredGraph randomInstance(const RandomSpec& spec, std::uint64_t seed);

} // namespace lrc
