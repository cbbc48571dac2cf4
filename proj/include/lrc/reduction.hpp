#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrc/core.hpp"
#include "lrc/evaluator.hpp"

namespace lrc {

enum class Polarity { Positive, Negative };

/// A clause of a planar monotone formula in its rectilinear layout: literals
/// in left-to-right variable order, depth = nesting distance from the
/// variable row (1 = innermost).
struct ClauseSpec {
    std::vector<std::string> literals;
    Polarity polarity = Polarity::Positive;
    int depth = 1;
};

struct RectilinearFormula {
    std::vector<std::string> variables;  // left-to-right order
    std::vector<ClauseSpec> clauses;
};

enum class ReductionVariant { Triangulated, PlanarPruned };

/// Where a tunnel sits: one variable owns one or more tunnel slots per side;
/// duplicates (slot >= 1) are created by split gadgets, always to the right.
struct TunnelKey {
    int var = 0;
    int side = 1;   // +1 above the variable row, -1 below
    int slot = 0;

    friend bool operator<(const TunnelKey& a, const TunnelKey& b) {
        if (a.var != b.var) return a.var < b.var;
        if (a.side != b.side) return a.side < b.side;
        return a.slot < b.slot;
    }
};

/// Compiled layout metadata; enough to rebuild canonical drawings.
struct ReductionLayout {
    struct Tunnel {
        TunnelKey key;
        int clauseIdx = -1;   // -1: ends at a basic reader
        int readerStep = 1;
        int bornStep = 0;     // split bar step for duplicates, 0 for slot 0
    };
    struct Clause {
        int idx = 0;
        Polarity polarity = Polarity::Positive;
        int depth = 1;
        std::vector<TunnelKey> literals;
        int readerStep = 0, sliderStep = 0, floorStep = 0;
    };
    struct Split {
        int var = 0, side = 1, parentSlot = 0, step = 0;
    };

    int nVars = 0;
    std::vector<int> slots;          // tunnel slots per variable
    std::vector<Tunnel> tunnels;
    std::vector<Clause> clauses;
    std::vector<Split> splits;
    int uRowLayer = 0, vRowLayer = 0, totalLayers = 0, totalWidth = 0;
    int frameThickness = 0;          // w*h when framed, else 0

    int tunnelX(TunnelKey k) const;  // left edge of the tunnel corridor
    int layerOf(int side, int step) const {
        return side > 0 ? vRowLayer + step : uRowLayer - step;
    }
};

struct ReductionInstance {
    LayeredGraph graph;
    long long k = 0;
    ReductionVariant variant = ReductionVariant::Triangulated;
    bool framed = false;
    ReductionLayout layout;
    RectilinearFormula formula;

    /// Gadget provenance; identical to the vertex labels.
    std::map<std::uint64_t, std::string> provenance;

    /// Width of the canonical drawing; the solver box for unframed runs.
    int boxWidth() const { return layout.totalWidth; }
};

/// Overrides for witness construction. A duplicate tunnel normally repeats
/// its source pattern; forcing `false` is always drawable, forcing `true`
/// against a false source yields an invalid drawing (that is the point of
/// the split gadget and is exercised by tests).
struct WitnessOptions {
    std::map<TunnelKey, bool> duplicatePattern;
};

/// Compiles a rectilinear planar monotone formula into a hardness instance
/// with target k. Throws std::invalid_argument on crossing clause legs or
/// other layout violations, and BudgetError when a requested frame would
/// exceed maxFrameThickness (frames grow as width x height).
ReductionInstance compile(const RectilinearFormula& f,
                          ReductionVariant variant = ReductionVariant::Triangulated,
                          bool framed = false, int maxFrameThickness = 5000);

/// Canonical drawing for an assignment (by variable order). Always valid;
/// realizes k minus one contact per unsatisfied clause.
Representation witness(const ReductionInstance& inst, const std::vector<bool>& assignment,
                       const WitnessOptions& opts = {});

long long unsatisfiedCount(const RectilinearFormula& f, const std::vector<bool>& assignment);

/// Standalone fragments, all built by the same compiler paths.
ReductionInstance buildVariableGadget(const std::string& name);
ReductionInstance buildPropagation(const std::string& name, int steps);
LayeredGraph buildWall(int layers);
ReductionInstance buildClauseGadget(const ClauseSpec& clause,
                                    const std::vector<std::string>& variables);
ReductionInstance buildSplitGadget(const std::string& name);

/// Wraps any graph in a confining frame: side walls of width w*h and w*h
/// full-width rows above and below, where w is the minimum drawing width
/// (the largest per-layer width sum) and h the layer count.
LayeredGraph buildFrame(const LayeredGraph& inner, int maxThickness = 5000);

} // namespace lrc
