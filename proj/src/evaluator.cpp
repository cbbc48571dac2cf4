#include "lrc/evaluator.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

ContactReport evaluate(const LayeredGraph& g, const Representation& r) {
    if (!r.matchesShape(g))
        throw std::invalid_argument("representation does not cover exactly the vertex set");
    if (r.model == CoordModel::Integer) {
        for (const auto& layer : r.positions)
            for (const Rational& x : layer)
                if (!x.isIntegral())
                    throw std::invalid_argument("integer-model representation with non-integral "
                                                "coordinate " + x.str());
    }

    ContactReport rep;

    // Same-layer pass: order, flush contacts, flush false adjacencies.
    for (int i = 1; i <= g.layerCount(); i++) {
        for (int j = 1; j + 1 <= g.layerSize(i); j++) {
            VertexRef a{i, j}, b{i, j + 1};
            Rational rightEdge = r.x(a) + Rational(g.width(a));
            if (r.x(b) < rightEdge) {
                rep.orderViolations.push_back({a, b});
            } else if (r.x(b) == rightEdge) {
                // flush rectangles share a unit-height vertical segment
                if (g.hasEdge(a, b)) {
                    rep.realizedEdges.push_back(makeEdge(a, b));
                    rep.horizontalPerLayer[i]++;
                } else {
                    rep.falseAdjacencies.push_back({a, b, Rational(1)});
                }
            }
        }
    }

    // Vertical pass per adjacent layer pair: sweep both layers in x order.
    // Rectangles have unit height, so only adjacent layers can meet.
    for (int i = 1; i + 1 <= g.layerCount(); i++) {
        int na = g.layerSize(i), nb = g.layerSize(i + 1);
        if (na == 0 || nb == 0) continue;

        auto sortedByX = [&](int layer, int n) {
            std::vector<int> idx(n);
            for (int j = 0; j < n; j++) idx[j] = j + 1;
            std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                Rational xa = r.x({layer, a}), xb = r.x({layer, b});
                return xa != xb ? xa < xb : a < b;
            });
            return idx;
        };
        std::vector<int> ia = sortedByX(i, na), ib = sortedByX(i + 1, nb);

        size_t pa = 0, pb = 0;
        while (pa < ia.size() && pb < ib.size()) {
            VertexRef a{i, ia[pa]}, b{i + 1, ib[pb]};
            Rational aLo = r.x(a), aHi = aLo + Rational(g.width(a));
            Rational bLo = r.x(b), bHi = bLo + Rational(g.width(b));
            Rational overlap = min(aHi, bHi) - max(aLo, bLo);
            if (overlap > Rational(0)) {
                // contact of positive length (>= 1 automatically under integral data)
                if (g.hasEdge(a, b)) {
                    rep.realizedEdges.push_back(makeEdge(a, b));
                    rep.verticalPerPair[{i, i + 1}]++;
                } else {
                    rep.falseAdjacencies.push_back({a, b, overlap});
                }
            }
            // point contacts (overlap exactly 0) are neither contacts nor false adjacencies
            if (aHi < bHi) pa++;
            else if (bHi < aHi) pb++;
            else { pa++; pb++; }
        }
    }

    rep.totalContacts = static_cast<long long>(rep.realizedEdges.size());
    rep.valid = rep.falseAdjacencies.empty() && rep.orderViolations.empty();
    return rep;
}

bool checkTarget(const LayeredGraph& g, const Representation& r, long long k) {
    ContactReport rep = evaluate(g, r);
    return rep.valid && rep.totalContacts >= k;
}

} // namespace lrc
