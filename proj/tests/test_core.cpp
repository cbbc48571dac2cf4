#include "doctest.h"

#include "helpers.hpp"
#include "lrc/core.hpp"

using namespace lrc;
using test::graph;

TEST_CASE("smallest legal instance validates") {
    LayeredGraph g = graph({{1, 1}}, {{1, 1, 1, 2}});
    CHECK(validateInstance(g).empty());
}

TEST_CASE("edge between non-adjacent layers is a violation") {
    LayeredGraph g = graph({{1}, {1}, {1}});
    g.addEdge({1, 1}, {3, 1});
    auto v = validateInstance(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "non-adjacent");
}

TEST_CASE("crossing vertical edges are a violation") {
    LayeredGraph g = graph({{1, 1}, {1, 1}}, {{1, 1, 2, 2}, {1, 2, 2, 1}});
    auto v = validateInstance(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "crossing");
}

TEST_CASE("bad widths and same-layer gaps are reported") {
    LayeredGraph g;
    g.addVertex(1, 0);
    g.addVertex(1, 1);
    g.addVertex(1, 1);
    g.addEdge({1, 1}, {1, 3});  // skips a vertex
    auto v = validateInstance(g);
    CHECK(v.size() == 2);
}

TEST_CASE("full slice is the identity") {
    LayeredGraph g = test::triExample();
    LayerSlice s = inducedLayerSlice(g, 1, g.layerCount());
    CHECK(s.graph.layerCount() == g.layerCount());
    CHECK(s.graph.edgeCount() == g.edgeCount());
    CHECK(s.graph.vertexCount() == g.vertexCount());
    CHECK(s.toOriginal({2, 3}) == VertexRef{2, 3});
}

TEST_CASE("middle slice keeps exactly the inside edges") {
    LayeredGraph g = graph({{1, 1}, {1}, {1, 1}},
                           {{1, 1, 1, 2}, {1, 1, 2, 1}, {2, 1, 3, 1}, {3, 1, 3, 2}});
    LayerSlice s = inducedLayerSlice(g, 2, 3);
    CHECK(s.graph.layerCount() == 2);
    CHECK(s.graph.vertexCount() == 3);
    CHECK(s.graph.edgeCount() == 2);  // (2,1)-(3,1) and (3,1)-(3,2), relabeled
    CHECK(s.graph.hasEdge({1, 1}, {2, 1}));
    CHECK(s.graph.hasEdge({2, 1}, {2, 2}));
}

TEST_CASE("slice edge count of the standing 3-layer example") {
    LayeredGraph g = test::triExample();
    // horizontal on layers 1,2: 2 + 3; vertical between 1 and 2: 6
    LayerSlice s = inducedLayerSlice(g, 1, 2);
    CHECK(s.graph.edgeCount() == 2 + 3 + 6);
}

TEST_CASE("slicing preserves validity and partitions edges") {
    LayeredGraph g = test::triExample();
    REQUIRE(validateInstance(g).empty());
    for (int lo = 1; lo <= 3; lo++) {
        for (int hi = lo; hi <= 3; hi++) {
            LayerSlice s = inducedLayerSlice(g, lo, hi);
            CHECK(validateInstance(s.graph).empty());
        }
    }
    int inside12 = inducedLayerSlice(g, 1, 2).graph.edgeCount();
    int inside3 = inducedLayerSlice(g, 3, 3).graph.edgeCount();
    int cross = 0;
    for (const Edge& e : g.edges())
        if (e.first.layer <= 2 && e.second.layer == 3) cross++;
    CHECK(inside12 + inside3 + cross == g.edgeCount());
}

TEST_CASE("slice range errors") {
    LayeredGraph g = test::triExample();
    CHECK_THROWS_AS(inducedLayerSlice(g, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(inducedLayerSlice(g, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(inducedLayerSlice(g, 3, 2), std::invalid_argument);
}
