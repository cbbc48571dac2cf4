#pragma once

#include <optional>

#include "lrc/core.hpp"
#include "lrc/errors.hpp"
#include "lrc/evaluator.hpp"

namespace lrc {

struct OracleConfig {
    std::optional<int> widthBudget;     // AUTO when absent: 2 * total width + 1
    long long enumerationCap = 100'000'000;
};

struct OracleResult {
    long long contacts = 0;
    Representation witness;             // lexicographically smallest optimum
    int widthBudget = 0;                // the budget actually used
};

/// Ground-truth brute force: exhaustively enumerates all per-layer integer
/// placements inside [0, widthBudget] (same-layer order respected, since any
/// other assignment is invalid) and maximizes total contacts over every
/// combination. Layers interact only through adjacent pairs, so combinations
/// are folded layer by layer; the claimed optimum is re-checked with
/// evaluate() on the reconstructed witness before returning.
OracleResult bruteForce(const LayeredGraph& g, const OracleConfig& cfg = {});

} // namespace lrc
