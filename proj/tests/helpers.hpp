#pragma once

#include <initializer_list>
#include <vector>

#include "lrc/core.hpp"
#include "lrc/evaluator.hpp"

namespace lrc::test {

// layers given as width lists, edges as {layer,pos,layer,pos}
inline LayeredGraph graph(std::initializer_list<std::vector<int>> layers,
                          std::initializer_list<std::array<int, 4>> edges = {}) {
    LayeredGraph g;
    int li = 0;
    for (const auto& layer : layers) {
        li++;
        for (int w : layer) g.addVertex(li, w);
    }
    for (const auto& e : edges) g.addEdge({e[0], e[1]}, {e[2], e[3]});
    return g;
}

inline Representation positions(const LayeredGraph& g,
                                std::initializer_list<std::vector<long long>> xs,
                                CoordModel model = CoordModel::Integer) {
    Representation r = Representation::zeros(g, model);
    int li = 0;
    for (const auto& layer : xs) {
        li++;
        int p = 0;
        for (long long x : layer) r.set({li, ++p}, Rational(x));
    }
    return r;
}

// the 2-layer unit-triangle instance: top v(1); bottom u(1), x(1);
// edges v-u, v-x, u-x
inline LayeredGraph unitTriangle() {
    return graph({{1, 1}, {1}}, {{1, 1, 1, 2}, {1, 1, 2, 1}, {1, 2, 2, 1}});
}

// a 3-layer internally triangulated instance with ten vertices, used as the
// repo's standing nontrivial example
inline LayeredGraph triExample() {
    LayeredGraph g;
    for (int w : {2, 1, 2}) g.addVertex(1, w);
    for (int w : {1, 2, 1, 1}) g.addVertex(2, w);
    for (int w : {3, 2, 1}) g.addVertex(3, w);
    // layer 1 path
    g.addEdge({1, 1}, {1, 2});
    g.addEdge({1, 2}, {1, 3});
    // layer 2 path
    g.addEdge({2, 1}, {2, 2});
    g.addEdge({2, 2}, {2, 3});
    g.addEdge({2, 3}, {2, 4});
    // layer 3 path
    g.addEdge({3, 1}, {3, 2});
    g.addEdge({3, 2}, {3, 3});
    // verticals 1-2 (non-crossing staircase)
    g.addEdge({1, 1}, {2, 1});
    g.addEdge({1, 1}, {2, 2});
    g.addEdge({1, 2}, {2, 2});
    g.addEdge({1, 3}, {2, 2});
    g.addEdge({1, 3}, {2, 3});
    g.addEdge({1, 3}, {2, 4});
    // verticals 2-3
    g.addEdge({2, 1}, {3, 1});
    g.addEdge({2, 2}, {3, 1});
    g.addEdge({2, 2}, {3, 2});
    g.addEdge({2, 3}, {3, 2});
    g.addEdge({2, 4}, {3, 2});
    g.addEdge({2, 4}, {3, 3});
    return g;
}

} // namespace lrc::test
