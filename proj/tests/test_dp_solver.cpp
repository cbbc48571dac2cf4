#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "lrc/dp_solver.hpp"
#include "lrc/gen.hpp"
#include "lrc/oracle.hpp"

using namespace lrc;
using test::graph;

TEST_CASE("mid-rectangle cursors are forced to continue") {
    LayeredGraph g = graph({{3}});
    CutState s;
    s.cursors = {{1, 2}};
    auto succ = successors(g, s);
    REQUIRE(succ.size() == 1);
    CHECK(succ[0].first.cursors[0] == LayerCursor{1, 3});
    CHECK(succ[0].second == 0);
}

TEST_CASE("successor enumeration follows the per-layer rules") {
    // layer 1: v1 w3 mid-cut; layer 2: v5 w1 at its right edge with a
    // successor vertex; layer 3: v7 w2 at its right edge, last vertex
    LayeredGraph g = graph({{3, 1}, {1, 2}, {2}},
                           {{1, 1, 1, 2}, {2, 1, 2, 2}, {1, 1, 2, 1}, {1, 1, 2, 2},
                            {2, 1, 3, 1}, {2, 2, 3, 1}});
    CutState s;
    s.cursors = {{1, 2}, {1, 1}, {1, 2}};
    auto succ = successors(g, s);
    // layer 1 forced (v1,3); layer 2 flush (v6..) or gap; layer 3 nil only
    for (const auto& [state, contacts] : succ) {
        CHECK(state.cursors[0] == LayerCursor{1, 3});
        CHECK(state.cursors[2] == LayerCursor{0, 0});
        bool flush = state.cursors[1] == LayerCursor{2, 1};
        bool gap = state.cursors[1] == LayerCursor{2, 0};
        CHECK((flush || gap));
    }
    CHECK(succ.size() == 2);
}

TEST_CASE("first-shared-column vertical contact is counted once") {
    LayeredGraph g = graph({{2}, {1}}, {{1, 1, 2, 1}});
    CutState s;
    s.cursors = {{1, 1}, {1, 0}};
    auto succ = successors(g, s);
    bool found = false;
    for (const auto& [state, contacts] : succ) {
        if (state.cursors[0] == LayerCursor{1, 2} && state.cursors[1] == LayerCursor{1, 1}) {
            found = true;
            CHECK(contacts == 1);
        }
    }
    CHECK(found);
}

TEST_CASE("flush placement without an edge is filtered") {
    LayeredGraph g = graph({{1, 1}});
    CutState s;
    s.cursors = {{1, 1}};
    auto succ = successors(g, s);
    for (const auto& [state, contacts] : succ)
        CHECK_FALSE(state.cursors[0] == LayerCursor{2, 1});
}

TEST_CASE("stall is never offered twice in a row") {
    LayeredGraph g = graph({{1}});
    CutState s;
    s.cursors = {{1, 0}};
    s.stalledLast = true;
    auto succ = successors(g, s);
    REQUIRE(succ.size() == 1);
    CHECK(succ[0].first.cursors[0] == LayerCursor{1, 1});
    s.stalledLast = false;
    CHECK(successors(g, s).size() == 2);
}

TEST_CASE("single-layer path") {
    LayeredGraph g = graph({{1, 1}}, {{1, 1, 1, 2}});
    SolveResult r = solveExact(g);
    CHECK(r.contacts == 1);
    CHECK(checkTarget(g, r.witness, 1));
}

TEST_CASE("unit triangle cannot realize all three edges on the grid") {
    LayeredGraph g = test::unitTriangle();
    SolveResult r = solveExact(g);
    CHECK(r.contacts == 2);
    ContactReport rep = evaluate(g, r.witness);
    CHECK(rep.valid);
    CHECK(rep.totalContacts == 2);
}

TEST_CASE("decision wrapper") {
    LayeredGraph g = graph({{1, 1}}, {{1, 1, 1, 2}});
    CHECK(solveDecision(g, 1).satisfied);
    CHECK_FALSE(solveDecision(g, 2).satisfied);
    CHECK(solveDecision(g, 1).witness.has_value());
    LayeredGraph tri = test::unitTriangle();
    CHECK_FALSE(solveDecision(tri, 3).satisfied);
}

TEST_CASE("invalid instances are rejected") {
    LayeredGraph g = graph({{1}, {1}, {1}});
    g.addEdge({1, 1}, {3, 1});
    CHECK_THROWS_AS(solveExact(g), std::invalid_argument);
}

TEST_CASE("state budget trips as a BudgetError") {
    LayeredGraph g = test::triExample();
    SolveConfig cfg;
    cfg.maxStates = 3;
    CHECK_THROWS_AS(solveExact(g, cfg), BudgetError);
}

TEST_CASE("oracle equivalence on random small instances") {
    RandomSpec spec{3, 2, 3, 60};
    for (std::uint64_t seed = 1; seed <= 120; seed++) {
        LayeredGraph g = randomInstance(spec, seed);
        SolveResult dp = solveExact(g);
        OracleResult or2 = bruteForce(g);
        CAPTURE(seed);
        CHECK(dp.contacts == or2.contacts);
        ContactReport rep = evaluate(g, dp.witness);
        CHECK(rep.valid);
        CHECK(rep.totalContacts == dp.contacts);
        CHECK(dp.stats.visitedStates <= dp.stats.stateBound);
    }
}

// Deleting a realized edge can cascade (the witness pair becomes a forbidden
// contact and separating it may cost further contacts), so only the
// unrealized-edge direction is a theorem: the old witness stays valid.
TEST_CASE("removing an unrealized edge never decreases the optimum") {
    RandomSpec spec{3, 2, 3, 70};
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 40; seed++) {
        LayeredGraph g = randomInstance(spec, seed);
        if (g.edgeCount() == 0) continue;
        SolveResult base = solveExact(g);
        ContactReport rep = evaluate(g, base.witness);
        for (size_t drop = 0; drop < g.edges().size(); drop++) {
            const Edge& e = g.edges()[drop];
            if (std::find(rep.realizedEdges.begin(), rep.realizedEdges.end(), e) !=
                rep.realizedEdges.end())
                continue;
            LayeredGraph h;
            h.layers = g.layers;
            for (size_t i = 0; i < g.edges().size(); i++)
                if (i != drop) h.addEdge(g.edges()[i].first, g.edges()[i].second);
            CAPTURE(seed);
            CHECK(solveExact(h).contacts >= base.contacts);
            checked++;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("column budget behaves like a bounding box") {
    // two unit squares on one layer with no edge need three columns
    LayeredGraph g = graph({{1, 1}});
    SolveConfig cfg;
    cfg.maxColumns = 3;
    CHECK(solveExact(g, cfg).contacts == 0);
    cfg.maxColumns = 2;
    CHECK_THROWS_AS(solveExact(g, cfg), std::invalid_argument);
    // bounded solves agree with unbounded ones when the box is generous
    RandomSpec spec{2, 2, 2, 60};
    for (std::uint64_t seed = 1; seed <= 20; seed++) {
        LayeredGraph h = randomInstance(spec, seed);
        SolveConfig roomy;
        roomy.maxColumns = static_cast<int>(2 * h.totalWidth() + 1);
        CAPTURE(seed);
        CHECK(solveExact(h, roomy).contacts == solveExact(h).contacts);
    }
}
