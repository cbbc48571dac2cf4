#pragma once

#include <string>

#include "lrc/core.hpp"
#include "lrc/evaluator.hpp"

namespace lrc {

struct SvgOptions {
    int unit = 24;        // pixels per grid column
    bool drawLabels = true;
};

/// Renders a representation as unit-height rows, layer 1 at the bottom.
/// Realized contacts are outlined, false adjacencies highlighted in red.
/// Invalid representations still render; output is deterministic.
std::string renderSvg(const LayeredGraph& g, const Representation& r,
                      const SvgOptions& opts = {});

} // namespace lrc
