// Acceptance suite: one line per criterion, nonzero exit on any failure.
// --write-golden regenerates the committed golden files.

#include <chrono>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "lrc/approx.hpp"
#include "lrc/dp_solver.hpp"
#include "lrc/gen.hpp"
#include "lrc/io.hpp"
#include "lrc/oracle.hpp"
#include "lrc/reduction.hpp"
#include "lrc/svg.hpp"

using namespace lrc;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) failures++;
}

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

VertexRef byLabel(const LayeredGraph& g, const std::string& label) {
    for (int i = 1; i <= g.layerCount(); i++)
        for (int j = 1; j <= g.layerSize(i); j++)
            if (g.vertex({i, j}).label == label) return {i, j};
    throw std::runtime_error("label not found: " + label);
}

// ---- criterion 1: oracle equivalence --------------------------------------

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    RandomSpec spec{3, 2, 3, 60};
    int mismatches = 0, badWitness = 0;
    const int trials = 500;
    for (std::uint64_t seed = 1; seed <= trials; seed++) {
        LayeredGraph g = randomInstance(spec, seed);
        SolveResult dp = solveExact(g);
        OracleResult oracle = bruteForce(g);
        if (dp.contacts != oracle.contacts) mismatches++;
        ContactReport a = evaluate(g, dp.witness);
        ContactReport b = evaluate(g, oracle.witness);
        if (!a.valid || a.totalContacts != dp.contacts) badWitness++;
        if (!b.valid || b.totalContacts != oracle.contacts) badWitness++;
    }
    std::ostringstream d;
    d << trials << " instances, " << mismatches << " mismatches, " << badWitness
      << " bad witnesses, " << seconds(t0) << "s";
    report(1, "oracle equivalence", mismatches == 0 && badWitness == 0, d.str());
}

// ---- criteria 2 + 3: approximation bounds and coverage inequality ----------

void criteria23() {
    auto t0 = std::chrono::steady_clock::now();
    int ratioViolations = 0, coverageViolations = 0, exactMismatch = 0, trials = 0;
    for (int layers : {3, 4}) {
        RandomSpec spec{layers, 2, 2, 60};
        for (std::uint64_t seed = 1; seed <= 100; seed++) {
            LayeredGraph g = randomInstance(spec, seed);
            trials++;
            long long opt = solveExact(g).contacts;
            SolveResult exact = solveExact(g);
            ContactReport optRep = evaluate(g, exact.witness);
            long long horiz = 0, vert = 0;
            for (auto& [layer, c] : optRep.horizontalPerLayer) horiz += c;
            for (auto& [pair, c] : optRep.verticalPerPair) vert += c;

            ApproxReport half = approxHalf(g);
            if (2 * half.totalContacts < opt) ratioViolations++;

            for (int ell : {2, 3}) {
                ApproxReport p = approxPtas(g, ell);
                if (ell * p.totalContacts < (ell - 1) * opt) ratioViolations++;
                if (ell < g.layerCount()) {
                    long long algSum = 0;
                    for (const SliceSolution& s : p.slices) algSum += s.contacts;
                    if (algSum < ell * horiz + (ell - 1) * vert) coverageViolations++;
                }
            }
            if (approxPtas(g, g.layerCount()).totalContacts != opt) exactMismatch++;
        }
    }
    std::ostringstream d2;
    d2 << trials << " instances, " << ratioViolations << " bound violations, " << exactMismatch
       << " l>=L mismatches, " << seconds(t0) << "s";
    report(2, "approximation bounds", ratioViolations == 0 && exactMismatch == 0, d2.str());
    std::ostringstream d3;
    d3 << coverageViolations << " violations";
    report(3, "coverage inequality", coverageViolations == 0, d3.str());
}

// ---- criterion 4: reduction deficit law ------------------------------------

std::vector<RectilinearFormula> deskFormulas() {
    auto f = [](std::vector<std::string> vars,
                std::vector<ClauseSpec> clauses) {
        RectilinearFormula out;
        out.variables = std::move(vars);
        out.clauses = std::move(clauses);
        return out;
    };
    using P = Polarity;
    return {
        f({"x"}, {}),
        f({"x"}, {{{"x"}, P::Positive, 1}}),
        f({"x"}, {{{"x"}, P::Negative, 1}}),
        f({"x"}, {{{"x"}, P::Positive, 1}, {{"x"}, P::Negative, 1}}),
        f({"x"}, {{{"x"}, P::Positive, 1}, {{"x"}, P::Positive, 2}}),
        f({"x"}, {{{"x"}, P::Negative, 1}, {{"x"}, P::Negative, 2}}),
        f({"x"}, {{{"x"}, P::Positive, 1}, {{"x"}, P::Positive, 2}, {{"x"}, P::Positive, 3}}),
        f({"a", "b"}, {{{"a", "b"}, P::Positive, 1}}),
        f({"a", "b"}, {{{"a", "b"}, P::Negative, 1}}),
        f({"a", "b"}, {{{"a", "b"}, P::Positive, 1}, {{"a", "b"}, P::Negative, 1}}),
        f({"a", "b"}, {{{"a", "b"}, P::Positive, 1}, {{"a", "b"}, P::Positive, 2}}),
        f({"a", "b"}, {{{"a"}, P::Positive, 1}, {{"b"}, P::Positive, 2}}),
        f({"a", "b"}, {{{"a"}, P::Negative, 2}, {{"b"}, P::Negative, 1}}),
        f({"a", "b", "c"}, {{{"a", "b", "c"}, P::Positive, 1}}),
        f({"a", "b", "c"}, {{{"a", "b", "c"}, P::Negative, 1}}),
        f({"a", "b", "c"}, {{{"a", "c"}, P::Positive, 2}, {{"b"}, P::Positive, 1}}),
        f({"a", "b", "c"}, {{{"a", "b", "c"}, P::Positive, 1}, {{"a", "b", "c"}, P::Negative, 1}}),
        f({"a", "b", "c"}, {{{"a", "b"}, P::Positive, 1}, {{"a", "b", "c"}, P::Positive, 2}}),
        f({"a", "b", "c"}, {{{"b", "c"}, P::Negative, 1}, {{"a", "c"}, P::Negative, 2}}),
        f({"a", "b", "c", "d"}, {{{"a", "b"}, P::Positive, 1}, {{"c", "d"}, P::Positive, 2}}),
        f({"a", "b", "c", "d"}, {{{"b", "c"}, P::Positive, 1}, {{"a", "b", "c"}, P::Positive, 2}}),
        f({"x1", "x2", "x3", "x4"},
          {{{"x1", "x2", "x3"}, P::Negative, 1},
           {{"x1", "x3", "x4"}, P::Negative, 2},
           {{"x1", "x3", "x4"}, P::Positive, 1}}),
    };
}

void criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    auto catalog = deskFormulas();
    int violations = 0, checked = 0;
    for (const RectilinearFormula& f : catalog) {
        ReductionInstance inst = compile(f);
        if (!validateInstance(inst.graph).empty()) {
            violations++;
            continue;
        }
        int n = static_cast<int>(f.variables.size());
        for (unsigned bits = 0; bits < (1u << n); bits++) {
            std::vector<bool> a(n);
            for (int i = 0; i < n; i++) a[i] = (bits >> i) & 1;
            ContactReport rep = evaluate(inst.graph, witness(inst, a));
            checked++;
            if (!rep.valid || rep.totalContacts != inst.k - unsatisfiedCount(f, a)) violations++;
        }
    }
    std::ostringstream d;
    d << catalog.size() << " formulas, " << checked << " assignments, " << violations
      << " violations, " << seconds(t0) << "s";
    report(4, "reduction deficit law", violations == 0, d.str());
}

// ---- criterion 5: reduction completeness spot-check -------------------------

bool truthTableSat(const RectilinearFormula& f) {
    int n = static_cast<int>(f.variables.size());
    for (unsigned bits = 0; bits < (1u << n); bits++) {
        std::vector<bool> a(n);
        for (int i = 0; i < n; i++) a[i] = (bits >> i) & 1;
        if (unsatisfiedCount(f, a) == 0) return true;
    }
    return false;
}

void criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    auto mk = [](std::vector<std::string> vars, std::vector<ClauseSpec> clauses) {
        RectilinearFormula f;
        f.variables = std::move(vars);
        f.clauses = std::move(clauses);
        return f;
    };
    using P = Polarity;
    struct Case {
        std::string name;
        RectilinearFormula f;
        ReductionVariant variant;
    };
    std::vector<Case> cases = {
        {"pos-1lit tri", mk({"x"}, {{{"x"}, P::Positive, 1}}), ReductionVariant::Triangulated},
        {"pos-1lit pruned", mk({"x"}, {{{"x"}, P::Positive, 1}}), ReductionVariant::PlanarPruned},
        {"neg-1lit tri", mk({"x"}, {{{"x"}, P::Negative, 1}}), ReductionVariant::Triangulated},
        {"neg-1lit pruned", mk({"x"}, {{{"x"}, P::Negative, 1}}), ReductionVariant::PlanarPruned},
        {"2lit tri", mk({"a", "b"}, {{{"a", "b"}, P::Positive, 1}}),
         ReductionVariant::Triangulated},
        {"unsat tri", mk({"x"}, {{{"x"}, P::Positive, 1}, {{"x"}, P::Negative, 1}}),
         ReductionVariant::Triangulated},
        {"unsat pruned", mk({"x"}, {{{"x"}, P::Positive, 1}, {{"x"}, P::Negative, 1}}),
         ReductionVariant::PlanarPruned},
    };
    int completed = 0, skipped = 0, wrong = 0;
    std::ostringstream d;
    for (const Case& c : cases) {
        ReductionInstance inst = compile(c.f, c.variant);
        SolveConfig cfg;
        cfg.maxColumns = inst.boxWidth();
        cfg.maxStates = 120'000'000;
        bool expected = truthTableSat(c.f);
        try {
            DecisionResult got = solveDecision(inst.graph, inst.k, cfg);
            bool ok = got.satisfied == expected;
            if (ok && expected) {
                // a meaningful check also pins the optimum to exactly k
                ok = got.contacts == inst.k &&
                     checkTarget(inst.graph, *got.witness, inst.k);
            }
            if (!ok) wrong++;
            completed++;
            d << c.name << "=" << (got.satisfied ? "sat" : "unsat") << " ";
        } catch (const BudgetError&) {
            skipped++;
            d << c.name << "=skipped(budget) ";
        }
    }
    d << "(" << completed << " completed, " << skipped << " skipped, " << seconds(t0) << "s)";
    report(5, "reduction completeness", wrong == 0 && completed >= 1, d.str());
}

// ---- criterion 6: half-integer flip dichotomy -------------------------------

void criterion6() {
    ReductionInstance inst = buildVariableGadget("x");
    bool pass = true;
    std::string detail;
    try {
        Representation flip = witness(inst, {true});
        flip.model = CoordModel::Rational;
        VertexRef ux = byLabel(inst.graph, "reader:x-s0");
        flip.set(ux, flip.x(ux) - Rational(3, 2));
        ContactReport rep = evaluate(inst.graph, flip);
        pass = rep.valid && rep.totalContacts == inst.k;
        detail = "rational flip valid at k=" + std::to_string(inst.k);

        Representation asInteger = flip;
        asInteger.model = CoordModel::Integer;
        bool rejected = false;
        try {
            evaluate(inst.graph, asInteger);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        pass = pass && rejected;
        detail += rejected ? ", integer model rejects" : ", integer model DID NOT reject";

        for (int snap : {-2, -1}) {
            Representation snapped = witness(inst, {true});
            snapped.set(ux, snapped.x(ux) + Rational(snap));
            ContactReport srep = evaluate(inst.graph, snapped);
            bool lossy = !srep.valid || srep.totalContacts < inst.k;
            pass = pass && lossy;
        }
        detail += ", snapped versions lose contacts";
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    report(6, "half-integer flip dichotomy", pass, detail);
}

// ---- criterion 7: gadget perturbation suite ---------------------------------

void criterion7() {
    bool pass = true;
    std::string detail;
    try {
        // wall shift
        ReductionInstance var = buildVariableGadget("x");
        Representation w1 = witness(var, {true});
        int readerLayer = var.layout.vRowLayer + 1;
        for (int j = 1; j <= var.graph.layerSize(readerLayer); j++)
            if (var.graph.vertex({readerLayer, j}).label == "wall1:c0")
                w1.set({readerLayer, j}, w1.x({readerLayer, j}) - Rational(1));
        ContactReport r1 = evaluate(var.graph, w1);
        bool wallShift = !r1.falseAdjacencies.empty() || r1.totalContacts < var.k;
        pass = pass && wallShift;

        // widened reader
        Representation w2 = witness(var, {true});
        VertexRef vx = byLabel(var.graph, "reader:x+s0");
        w2.set(vx, w2.x(vx) + Rational(1));
        ContactReport r2 = evaluate(var.graph, w2);
        bool widened = !r2.falseAdjacencies.empty() || r2.totalContacts < var.k;
        pass = pass && widened;

        // blocked tunnel
        ReductionInstance split = buildSplitGadget("x");
        Representation w3 = witness(split, {true});
        VertexRef bar = byLabel(split.graph, "split:x+s0:bar");
        VertexRef q2 = byLabel(split.graph, "split:x+s0:q2");
        w3.set(bar, w3.x(bar) + Rational(1));
        w3.set(q2, w3.x(q2) + Rational(1));
        ContactReport r3 = evaluate(split.graph, w3);
        bool blocked = !r3.falseAdjacencies.empty() || r3.totalContacts < split.k;
        pass = pass && blocked;

        std::ostringstream d;
        d << "wall-shift " << (wallShift ? "lossy" : "FREE") << ", widened "
          << (widened ? "lossy" : "FREE") << ", blocked-tunnel " << (blocked ? "lossy" : "FREE");
        detail = d.str();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    report(7, "gadget perturbations", pass, detail);
}

// ---- criterion 8: scaling sanity ---------------------------------------------

void criterion8() {
    bool pass = true;
    std::ostringstream d;
    for (int W = 1; W <= 4; W++) {
        LayeredGraph g;
        for (int layer = 1; layer <= 3; layer++) {
            g.addVertex(layer, W);
            g.addVertex(layer, W);
        }
        for (int layer = 1; layer <= 3; layer++) g.addEdge({layer, 1}, {layer, 2});
        for (int layer = 1; layer <= 2; layer++) {
            g.addEdge({layer, 1}, {layer + 1, 1});
            g.addEdge({layer, 2}, {layer + 1, 2});
        }
        SolveResult r = solveExact(g);
        d << "W=" << W << ": " << r.stats.visitedStates << "<=" << r.stats.stateBound << " ";
        if (r.stats.visitedStates > r.stats.stateBound) pass = false;
    }
    report(8, "state-count scaling bound", pass, d.str());
}

// ---- criterion 9: determinism & golden round-trips ---------------------------

struct Golden {
    std::string file;
    std::function<std::string()> make;
    std::function<void(const std::string&)> reparse;  // throws on failure
};

std::vector<Golden> goldens() {
    auto standing = [] {
        LayeredGraph g;
        for (int w : {2, 1, 2}) g.addVertex(1, w, "w" + std::to_string(w));
        for (int w : {1, 2, 1, 1}) g.addVertex(2, w, "m" + std::to_string(w));
        for (int w : {3, 2, 1}) g.addVertex(3, w, "t" + std::to_string(w));
        g.addEdge({1, 1}, {1, 2});
        g.addEdge({1, 2}, {1, 3});
        g.addEdge({2, 1}, {2, 2});
        g.addEdge({2, 2}, {2, 3});
        g.addEdge({2, 3}, {2, 4});
        g.addEdge({3, 1}, {3, 2});
        g.addEdge({3, 2}, {3, 3});
        g.addEdge({1, 1}, {2, 1});
        g.addEdge({1, 1}, {2, 2});
        g.addEdge({1, 2}, {2, 2});
        g.addEdge({1, 3}, {2, 2});
        g.addEdge({1, 3}, {2, 3});
        g.addEdge({1, 3}, {2, 4});
        g.addEdge({2, 1}, {3, 1});
        g.addEdge({2, 2}, {3, 1});
        g.addEdge({2, 2}, {3, 2});
        g.addEdge({2, 3}, {3, 2});
        g.addEdge({2, 4}, {3, 2});
        g.addEdge({2, 4}, {3, 3});
        return g;
    };
    RectilinearFormula f;
    f.variables = {"x1", "x2"};
    f.clauses = {{{"x1", "x2"}, Polarity::Positive, 1}};

    return {
        {"standing-instance.json", [=] { return serializeInstance(standing()); },
         [](const std::string& t) { parseInstance(t); }},
        {"standing-exact.sol.json",
         [=] { return serializeRepresentation(solveExact(standing()).witness); },
         [](const std::string& t) { parseRepresentation(t); }},
        {"standing-exact.svg",
         [=] {
             SolveResult r = solveExact(standing());
             return renderSvg(standing(), r.witness);
         },
         [](const std::string&) {}},
        {"two-var-clause.formula.json", [=] { return serializeFormula(f); },
         [](const std::string& t) { parseFormula(t); }},
        {"two-var-clause.instance.json",
         [=] { return serializeInstance(compile(f).graph); },
         [](const std::string& t) { parseInstance(t); }},
        {"random-seed7.json",
         [] { return serializeInstance(randomInstance(RandomSpec{3, 2, 3, 60}, 7)); },
         [](const std::string& t) { parseInstance(t); }},
    };
}

void criterion9(const std::string& goldenDir, bool write) {
    bool pass = true;
    std::string detail;
    try {
        for (const Golden& g : goldens()) {
            std::string path = goldenDir + "/" + g.file;
            std::string once = g.make();
            std::string twice = g.make();
            if (once != twice) {
                pass = false;
                detail += g.file + " not deterministic; ";
                continue;
            }
            if (write) {
                writeFile(path, once);
                continue;
            }
            std::string committed = readFile(path);
            if (committed != once) {
                pass = false;
                detail += g.file + " differs from the committed golden; ";
            }
            g.reparse(committed);
        }
        if (detail.empty()) detail = write ? "goldens written" : "all goldens stable and re-parse";
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    report(9, "determinism and golden round-trips", pass, detail);
}

} // namespace

int main(int argc, char** argv) {
    bool writeGolden = argc > 1 && std::strcmp(argv[1], "--write-golden") == 0;
#ifdef LRC_SOURCE_DIR
    std::string goldenDir = std::string(LRC_SOURCE_DIR) + "/tests/golden";
#else
    std::string goldenDir = "tests/golden";
#endif
    std::filesystem::create_directories(goldenDir);

    criterion1();
    criteria23();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9(goldenDir, writeGolden);

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << std::endl;
    return failures == 0 ? 0 : 1;
}
