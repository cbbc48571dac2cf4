#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lrc/core.hpp"
#include "lrc/errors.hpp"
#include "lrc/evaluator.hpp"

namespace lrc {

/// Per-layer cut-state component: which rectangle the vertical cut passes
/// through and how much of it lies left of the cut. vertexPos 0 stands for
/// nil (the layer is exhausted); progress 0 means the vertex is pending.
struct LayerCursor {
    int vertexPos = 0;
    int progress = 0;

    friend bool operator==(const LayerCursor& a, const LayerCursor& b) {
        return a.vertexPos == b.vertexPos && a.progress == b.progress;
    }
};

/// Full cut state: one cursor per layer plus the stall flag. stalledLast is
/// true iff the transition that produced this state covered no new column on
/// any layer (the drawing gained a globally empty column).
struct CutState {
    std::vector<LayerCursor> cursors;
    bool stalledLast = false;

    friend bool operator==(const CutState& a, const CutState& b) {
        return a.stalledLast == b.stalledLast && a.cursors == b.cursors;
    }
};

/// Enumerates the feasible successor cuts one column to the right, with the
/// number of contacts each one realizes in the new column. Infeasible
/// branches (flush or first-shared-column pairs without an edge) are dropped,
/// and a second consecutive globally-empty column is never offered.
std::vector<std::pair<CutState, int>> successors(const LayeredGraph& g, const CutState& s);

struct SolveConfig {
    long long maxStates = 20'000'000;   // memoized-state cap; exceeded -> BudgetError
    std::optional<int> maxColumns;      // optional bounding-box width for all drawings
};

struct SolveStats {
    long long visitedStates = 0;
    long long stateBound = 0;           // 2 * prod_i (1 + sum_v (w(v)+1)), saturated
};

struct SolveResult {
    long long contacts = 0;
    Representation witness;
    SolveStats stats;
};

struct DecisionResult {
    bool satisfied = false;
    long long contacts = 0;
    std::optional<Representation> witness;
    SolveStats stats;
};

/// Exact Max-IntLC by memoized recursion over cut states, with witness
/// reconstruction. Requires a structurally valid instance.
SolveResult solveExact(const LayeredGraph& g, const SolveConfig& cfg = {});

/// Decision wrapper: does a valid integer representation with >= k contacts
/// exist? Returns the witness when it does.
DecisionResult solveDecision(const LayeredGraph& g, long long k, const SolveConfig& cfg = {});

/// The state-space bound used in SolveStats, exposed for scaling checks.
long long cutStateBound(const LayeredGraph& g);

} // namespace lrc
