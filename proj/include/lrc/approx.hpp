#pragma once

#include <utility>
#include <vector>

#include "lrc/core.hpp"
#include "lrc/dp_solver.hpp"
#include "lrc/evaluator.hpp"

namespace lrc {

/// One contiguous block of layers solved exactly, in original layer indices.
struct BlockSolution {
    int loLayer = 0;
    int hiLayer = 0;
    long long contacts = 0;
    Representation witness;  // on the slice subgraph
};

/// A slice A_i: for the PTAS a cyclic window of layers, which may wrap and
/// then decomposes into its contiguous blocks (no edges cross the wrap).
struct SliceSolution {
    int index = 0;
    std::vector<BlockSolution> blocks;
    long long contacts = 0;  // ALG_i, summed over blocks
};

struct ApproxReport {
    std::vector<SliceSolution> slices;
    std::vector<std::vector<int>> groups;   // slice indices per group
    std::vector<long long> groupContacts;   // ALG_{G_i}
    int chosenGroup = 0;
    long long totalContacts = 0;
    Representation witness;                 // on the full graph
    std::pair<int, int> ratioBound{1, 2};   // claimed bound as a fraction
};

/// Translates vertex-disjoint block solutions into one valid representation:
/// consecutive blocks get disjoint x-ranges (offset = previous extent + 1),
/// and vertices on uncovered layers are parked in fresh regions with unit
/// gaps, contributing zero contacts.
Representation assembleGroup(const LayeredGraph& g,
                             const std::vector<const BlockSolution*>& blocks);

/// 1/2-approximation: solve every two-layer slice exactly and keep the
/// better of the odd and even slice families.
ApproxReport approxHalf(const LayeredGraph& g, const SolveConfig& cfg = {});

/// Baker-technique (1 - 1/l)-approximation: cyclic l-layer slices over the
/// dummy-padded graph, partitioned into l vertex-disjoint groups; delegates
/// to solveExact when l >= L.
ApproxReport approxPtas(const LayeredGraph& g, int ell, const SolveConfig& cfg = {});

} // namespace lrc
