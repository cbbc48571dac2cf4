#pragma once

#include <map>
#include <vector>

#include "lrc/core.hpp"
#include "lrc/rational.hpp"

namespace lrc {

enum class CoordModel { Integer, Rational };

/// Assignment of x-coordinates (bottom-left corners) to every vertex of a graph.
/// Stored dense, mirroring the graph's layer shape.
struct Representation {
    CoordModel model = CoordModel::Integer;
    std::vector<std::vector<Rational>> positions;  // [layer-1][pos-1]

    static Representation zeros(const LayeredGraph& g, CoordModel m = CoordModel::Integer) {
        Representation r;
        r.model = m;
        r.positions.resize(g.layerCount());
        for (int i = 1; i <= g.layerCount(); i++)
            r.positions[i - 1].assign(g.layerSize(i), Rational(0));
        return r;
    }

    Rational x(VertexRef v) const { return positions[v.layer - 1][v.pos - 1]; }
    void set(VertexRef v, Rational value) { positions[v.layer - 1][v.pos - 1] = value; }

    bool matchesShape(const LayeredGraph& g) const {
        if (static_cast<int>(positions.size()) != g.layerCount()) return false;
        for (int i = 1; i <= g.layerCount(); i++)
            if (static_cast<int>(positions[i - 1].size()) != g.layerSize(i)) return false;
        return true;
    }
};

/// A contact between two rectangles, with the length of the shared segment.
/// Same-layer flush pairs share a unit-height vertical segment, so length 1.
struct ContactPair {
    VertexRef a, b;
    Rational overlap;
};

struct OrderViolation {
    VertexRef a, b;   // consecutive same-layer pair with x(a)+w(a) > x(b)
};

/// Outcome of evaluating a representation: realized edges, per-layer and
/// per-layer-pair contact counts, false adjacencies, and the validity verdict.
struct ContactReport {
    std::vector<Edge> realizedEdges;
    std::map<int, int> horizontalPerLayer;          // layer -> count
    std::map<std::pair<int, int>, int> verticalPerPair;  // (i, i+1) -> count
    std::vector<ContactPair> falseAdjacencies;
    std::vector<OrderViolation> orderViolations;
    bool valid = false;
    long long totalContacts = 0;

    int horizontal(int layer) const {
        auto it = horizontalPerLayer.find(layer);
        return it == horizontalPerLayer.end() ? 0 : it->second;
    }
    int vertical(int lo) const {
        auto it = verticalPerPair.find({lo, lo + 1});
        return it == verticalPerPair.end() ? 0 : it->second;
    }
};

/// The polynomial-time verifier: decides validity and counts realized contacts.
/// Throws std::invalid_argument on a position-set mismatch or a non-integral
/// coordinate under the Integer model.
ContactReport evaluate(const LayeredGraph& g, const Representation& r);

/// True iff r is valid and realizes at least k contacts.
bool checkTarget(const LayeredGraph& g, const Representation& r, long long k);

} // namespace lrc
