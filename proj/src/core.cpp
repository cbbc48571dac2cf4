#include "lrc/core.hpp"

#include <map>
#include <stdexcept>

namespace lrc {

namespace {

std::string refStr(VertexRef v) {
    return "(" + std::to_string(v.layer) + "," + std::to_string(v.pos) + ")";
}

std::string edgeStr(const Edge& e) {
    return refStr(e.first) + "-" + refStr(e.second);
}

} // namespace

std::vector<Violation> validateInstance(const LayeredGraph& g) {
    std::vector<Violation> out;

    for (int i = 1; i <= g.layerCount(); i++) {
        for (int j = 1; j <= g.layerSize(i); j++) {
            const Vertex& v = g.layers[i - 1][j - 1];
            if (v.width < 1)
                out.push_back({"width", "vertex " + refStr({i, j}) + " has width " +
                                            std::to_string(v.width)});
        }
    }

    std::unordered_set<std::uint64_t> seen;
    // vertical edges per adjacent layer pair, for the crossing check
    std::map<int, std::vector<std::pair<int, int>>> vertical;

    for (const Edge& e : g.edges()) {
        if (!g.inRange(e.first) || !g.inRange(e.second)) {
            out.push_back({"range", "edge " + edgeStr(e) + " has an endpoint out of range"});
            continue;
        }
        if (e.first == e.second) {
            out.push_back({"self-loop", "edge " + edgeStr(e)});
            continue;
        }
        auto pack16 = [](VertexRef v) {
            return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(v.layer)) << 16) |
                   static_cast<std::uint16_t>(v.pos);
        };
        Edge n = makeEdge(e.first, e.second);
        std::uint64_t key = (pack16(n.first) << 32) | pack16(n.second);
        if (!seen.insert(key).second)
            out.push_back({"duplicate", "edge " + edgeStr(e)});

        int dl = e.second.layer - e.first.layer;
        if (dl == 0) {
            if (e.second.pos - e.first.pos != 1)
                out.push_back({"non-adjacent", "same-layer edge " + edgeStr(e) +
                                                   " joins non-consecutive vertices"});
        } else if (dl == 1) {
            vertical[e.first.layer].push_back({e.first.pos, e.second.pos});
        } else {
            out.push_back({"non-adjacent", "edge " + edgeStr(e) +
                                               " joins non-adjacent layers"});
        }
    }

    for (auto& [layer, es] : vertical) {
        for (size_t a = 0; a < es.size(); a++) {
            for (size_t b = a + 1; b < es.size(); b++) {
                auto [j, j2] = es[a];
                auto [k, k2] = es[b];
                if (j == k || j2 == k2) continue;
                if ((j < k && j2 > k2) || (k < j && k2 > j2))
                    out.push_back({"crossing",
                                   "vertical edges (" + std::to_string(layer) + "," +
                                       std::to_string(j) + ")-(" + std::to_string(layer + 1) +
                                       "," + std::to_string(j2) + ") and (" +
                                       std::to_string(layer) + "," + std::to_string(k) + ")-(" +
                                       std::to_string(layer + 1) + "," + std::to_string(k2) +
                                       ") cross"});
            }
        }
    }

    return out;
}

LayerSlice inducedLayerSlice(const LayeredGraph& g, int lo, int hi) {
    if (lo < 1 || hi > g.layerCount() || lo > hi)
        throw std::invalid_argument("layer slice [" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "] out of range");
    LayerSlice slice;
    slice.baseLayer = lo;
    for (int i = lo; i <= hi; i++) slice.graph.layers.push_back(g.layers[i - 1]);
    for (const Edge& e : g.edges()) {
        if (e.first.layer >= lo && e.first.layer <= hi && e.second.layer >= lo &&
            e.second.layer <= hi)
            slice.graph.addEdge(slice.toSlice(e.first), slice.toSlice(e.second));
    }
    return slice;
}

} // namespace lrc
