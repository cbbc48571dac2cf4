#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lrc {

/// Positional vertex address: 1-based layer index, 1-based position within the layer.
/// Position is identity; labels are carried opaquely for display only.
struct VertexRef {
    int layer = 0;
    int pos = 0;

    friend bool operator==(const VertexRef& a, const VertexRef& b) {
        return a.layer == b.layer && a.pos == b.pos;
    }
    friend bool operator!=(const VertexRef& a, const VertexRef& b) { return !(a == b); }
    friend bool operator<(const VertexRef& a, const VertexRef& b) {
        return a.layer != b.layer ? a.layer < b.layer : a.pos < b.pos;
    }
};

struct Vertex {
    int width = 1;
    std::string label;
};

using Edge = std::pair<VertexRef, VertexRef>;

inline Edge makeEdge(VertexRef a, VertexRef b) {
    return b < a ? Edge{b, a} : Edge{a, b};
}

inline std::uint64_t packRef(VertexRef v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.layer)) << 32) |
           static_cast<std::uint32_t>(v.pos);
}

/// Vertex-weighted layered graph with fixed intra-layer order.
/// Immutable by convention once built; construction is single-threaded.
class LayeredGraph {
public:
    std::vector<std::vector<Vertex>> layers;

    LayeredGraph() = default;

    int layerCount() const { return static_cast<int>(layers.size()); }
    int layerSize(int layer) const { return static_cast<int>(layers[layer - 1].size()); }
    const Vertex& vertex(VertexRef v) const { return layers[v.layer - 1][v.pos - 1]; }
    int width(VertexRef v) const { return vertex(v).width; }

    int vertexCount() const {
        int n = 0;
        for (const auto& l : layers) n += static_cast<int>(l.size());
        return n;
    }

    /// W, the maximum rectangle width (0 for an empty graph).
    int maxWidth() const {
        int w = 0;
        for (const auto& l : layers)
            for (const auto& v : l) w = w > v.width ? w : v.width;
        return w;
    }

    long long totalWidth() const {
        long long s = 0;
        for (const auto& l : layers)
            for (const auto& v : l) s += v.width;
        return s;
    }

    bool inRange(VertexRef v) const {
        return v.layer >= 1 && v.layer <= layerCount() && v.pos >= 1 &&
               v.pos <= static_cast<int>(layers[v.layer - 1].size());
    }

    VertexRef addVertex(int layer, int width, std::string label = {}) {
        while (layerCount() < layer) layers.emplace_back();
        layers[layer - 1].push_back(Vertex{width, std::move(label)});
        return {layer, static_cast<int>(layers[layer - 1].size())};
    }

    void addEdge(VertexRef a, VertexRef b) {
        Edge e = makeEdge(a, b);
        if (edgeKeys_.insert(edgeKey(e)).second) edges_.push_back(e);
    }

    bool hasEdge(VertexRef a, VertexRef b) const {
        return edgeKeys_.count(edgeKey(makeEdge(a, b))) > 0;
    }

    const std::vector<Edge>& edges() const { return edges_; }
    int edgeCount() const { return static_cast<int>(edges_.size()); }

private:
    static std::uint64_t edgeKey(const Edge& e) {
        // layer/pos fit in 16 bits each for every instance this artifact produces
        auto p = [](VertexRef v) {
            return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(v.layer)) << 16) |
                   static_cast<std::uint16_t>(v.pos);
        };
        return (p(e.first) << 32) | p(e.second);
    }

    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> edgeKeys_;
};

/// One structural violation found by validateInstance. Violations are data, not failures.
struct Violation {
    std::string rule;    // "width", "range", "self-loop", "duplicate", "non-adjacent", "crossing"
    std::string detail;
};

/// Empty result iff all LayeredGraph invariants hold: positive integral widths,
/// edges only between consecutive same-layer vertices or adjacent layers,
/// no duplicates or self-loops, and non-crossing vertical edges.
std::vector<Violation> validateInstance(const LayeredGraph& g);

/// Subgraph induced by layers lo..hi, relabeled to layers 1..(hi-lo+1).
/// Positions within layers are unchanged, so the back-mapping is the layer offset.
struct LayerSlice {
    LayeredGraph graph;
    int baseLayer = 1;  // original index of slice layer 1

    VertexRef toOriginal(VertexRef v) const { return {v.layer + baseLayer - 1, v.pos}; }
    VertexRef toSlice(VertexRef v) const { return {v.layer - baseLayer + 1, v.pos}; }
};

LayerSlice inducedLayerSlice(const LayeredGraph& g, int lo, int hi);

} // namespace lrc
