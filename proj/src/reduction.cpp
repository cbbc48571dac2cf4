#include "lrc/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "lrc/errors.hpp"

namespace lrc {

namespace {

constexpr int kWallW = 3;
constexpr int kTunnelW = 6;
constexpr int kPitch = kWallW + kTunnelW;  // tunnel-to-tunnel spacing

// Row cell offsets inside a tunnel, by pattern. Pattern true = 3-wide block
// against the left wall (reader side when the literal is satisfied).
const int k5T[5] = {0, 1, 2, 4, 5};
const int k5F[5] = {0, 1, 3, 4, 5};
const int k3T[3] = {0, 2, 4};
const int k3F[3] = {0, 3, 4};
const int k3W[3] = {2, 1, 2};

enum class RowKind { None, Row5, Row3, Reader, SplitLayer, Filler };

struct PosRule {
    enum Kind { Fixed, RowCell, ReaderPos, SplitP2, SplitBar, SplitQ2, SliderPos } kind = Fixed;
    int fixedX = 0;
    TunnelKey tunnel;       // RowCell/ReaderPos/Split*: owning tunnel (split: parent)
    bool row5 = false;      // RowCell
    int cellIdx = 0;        // RowCell
    int clause = -1;        // SliderPos
};

struct Builder {
    const RectilinearFormula& f;
    ReductionVariant variant;
    bool framed;
    int maxFrameThickness = 5000;

    ReductionInstance inst;
    ReductionLayout& lay;

    int nVars;
    std::map<std::string, int> varIndex;
    std::vector<std::vector<int>> usesBySide[2];           // [neg=0,pos=1][var] -> clause idxs
    std::map<TunnelKey, ReductionLayout::Tunnel> tunnels;
    std::vector<int> slotPrefix;                            // global tunnel index base per var

    // piece registries
    std::map<std::tuple<int, int, int>, VertexRef> wallCells;      // (wall, layer, col)
    std::map<std::tuple<TunnelKey, int, int>, VertexRef> rowCells; // (tunnel, step, idx)
    std::map<TunnelKey, VertexRef> readers;
    std::map<std::pair<int, int>, VertexRef> wallConts;            // (clause, 0=left/1=right)
    std::map<int, VertexRef> sliders;                              // clause
    std::map<std::pair<int, int>, VertexRef> floorCells;           // (clause, idx)
    std::map<std::pair<int, int>, std::pair<int, int>> floorSpan;  // cell -> (x, w)
    std::map<std::tuple<int, int, int, int>, VertexRef> splitPieces;  // (var, side, parentSlot, role)
    std::map<TunnelKey, VertexRef> fillers;

    std::map<std::uint64_t, PosRule> rules;

    Builder(const RectilinearFormula& formula, ReductionVariant v, bool fr)
        : f(formula), variant(v), framed(fr), lay(inst.layout) {
        inst.variant = v;
        inst.framed = fr;
        inst.formula = f;
        usesBySide[0].resize(f.variables.size());
        usesBySide[1].resize(f.variables.size());
    }

    [[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

    // ---- validation and planning -------------------------------------------

    void checkFormula() {
        nVars = static_cast<int>(f.variables.size());
        if (nVars == 0) fail("formula has no variables");
        for (int i = 0; i < nVars; i++) {
            if (!varIndex.emplace(f.variables[i], i).second) fail("duplicate variable name");
        }
        for (size_t c = 0; c < f.clauses.size(); c++) {
            const ClauseSpec& cl = f.clauses[c];
            if (cl.literals.empty() || cl.literals.size() > 3)
                fail("clause must have 1..3 literals");
            if (cl.depth < 1) fail("clause depth must be >= 1");
            int prev = -1;
            for (const std::string& name : cl.literals) {
                auto it = varIndex.find(name);
                if (it == varIndex.end()) fail("clause uses unknown variable " + name);
                if (it->second <= prev) fail("clause literals must be in left-to-right order");
                prev = it->second;
            }
        }
        for (size_t c = 0; c < f.clauses.size(); c++) {
            const ClauseSpec& cl = f.clauses[c];
            int s = cl.polarity == Polarity::Positive ? 1 : 0;
            for (const std::string& name : cl.literals)
                usesBySide[s][varIndex[name]].push_back(static_cast<int>(c));
        }
        for (int s = 0; s < 2; s++)
            for (int v = 0; v < nVars; v++)
                std::sort(usesBySide[s][v].begin(), usesBySide[s][v].end(),
                          [&](int a, int b) { return f.clauses[a].depth < f.clauses[b].depth; });

        // same-polarity spans: disjoint or nested with the shallower inside
        for (size_t a = 0; a < f.clauses.size(); a++) {
            for (size_t b = a + 1; b < f.clauses.size(); b++) {
                const ClauseSpec &A = f.clauses[a], &B = f.clauses[b];
                if (A.polarity != B.polarity) continue;
                int aLo = varIndex[A.literals.front()], aHi = varIndex[A.literals.back()];
                int bLo = varIndex[B.literals.front()], bHi = varIndex[B.literals.back()];
                bool disjoint = aHi < bLo || bHi < aLo;
                bool aInB = bLo <= aLo && aHi <= bHi;
                bool bInA = aLo <= bLo && bHi <= aHi;
                if (disjoint) {
                    if (A.depth == B.depth && (aHi + 1 == bLo || bHi + 1 == aLo))
                        fail("same-depth clauses on adjacent variables share a wall; "
                             "use distinct depths");
                    continue;
                }
                if (A.depth == B.depth) fail("crossing clause legs: overlapping spans at "
                                             "equal depth");
                const auto& inner = A.depth < B.depth ? A : B;
                bool nested = A.depth < B.depth ? aInB : bInA;
                (void)inner;
                if (!nested) fail("crossing clause legs: spans overlap without nesting");
            }
        }

        // middle literals may not have deeper same-side uses
        for (size_t c = 0; c < f.clauses.size(); c++) {
            const ClauseSpec& cl = f.clauses[c];
            int s = cl.polarity == Polarity::Positive ? 1 : 0;
            for (size_t li = 1; li + 1 < cl.literals.size(); li++) {
                int v = varIndex[cl.literals[li]];
                for (int other : usesBySide[s][v])
                    if (f.clauses[other].depth > cl.depth)
                        fail("variable " + cl.literals[li] +
                             " is a middle literal but has deeper uses on the same side");
            }
        }
    }

    void planTunnels() {
        lay.nVars = nVars;
        lay.slots.assign(nVars, 1);
        for (int v = 0; v < nVars; v++)
            lay.slots[v] = std::max<int>(
                1, std::max(usesBySide[0][v].size(), usesBySide[1][v].size()));
        slotPrefix.assign(nVars + 1, 0);
        for (int v = 0; v < nVars; v++) slotPrefix[v + 1] = slotPrefix[v] + lay.slots[v];
        lay.totalWidth = kPitch * slotPrefix[nVars] + kWallW;

        // slot assignment: shallowest use first; a clause takes the rightmost
        // free slot when the variable is its leftmost literal, the leftmost
        // free slot otherwise (ends consume inward, splits duplicate rightward)
        std::map<std::pair<int, int>, TunnelKey> literalTunnel;  // (clause, var)
        for (int s = 0; s < 2; s++) {
            int side = s == 1 ? 1 : -1;
            for (int v = 0; v < nVars; v++) {
                const auto& uses = usesBySide[s][v];
                int lo = 0, hi = static_cast<int>(uses.size()) - 1;
                if (uses.empty()) {
                    ReductionLayout::Tunnel t;
                    t.key = {v, side, 0};
                    t.clauseIdx = -1;
                    t.readerStep = 1;
                    tunnels[t.key] = t;
                    continue;
                }
                for (int c : uses) {
                    const ClauseSpec& cl = f.clauses[c];
                    bool leftmost = varIndex[cl.literals.front()] == v;
                    int slot = leftmost ? hi-- : lo++;
                    ReductionLayout::Tunnel t;
                    t.key = {v, side, slot};
                    t.clauseIdx = c;
                    tunnels[t.key] = t;
                    literalTunnel[{c, v}] = t.key;
                }
                // splits: parent slot j spawns slot j+1
                int used = static_cast<int>(uses.size());
                for (int j = 0; j + 1 < used; j++) {
                    ReductionLayout::Split sp;
                    sp.var = v;
                    sp.side = side;
                    sp.parentSlot = j;
                    sp.step = side > 0 ? 2 * j + 1 : 2 * j + 2;
                    lay.splits.push_back(sp);
                    tunnels[{v, side, j + 1}].bornStep = sp.step;
                }
            }
        }

        for (size_t c = 0; c < f.clauses.size(); c++) {
            ReductionLayout::Clause cp;
            cp.idx = static_cast<int>(c);
            cp.polarity = f.clauses[c].polarity;
            cp.depth = f.clauses[c].depth;
            for (const std::string& name : f.clauses[c].literals)
                cp.literals.push_back(literalTunnel.at({static_cast<int>(c), varIndex[name]}));
            lay.clauses.push_back(cp);
        }
    }

    int minReaderStep(const ReductionLayout::Tunnel& t) const {
        int m = 1;
        for (const auto& sp : lay.splits) {
            if (sp.var != t.key.var || sp.side != t.key.side) continue;
            if (sp.parentSlot == t.key.slot || sp.parentSlot + 1 == t.key.slot)
                m = std::max(m, sp.step + (t.key.side > 0 ? 2 : 3));
        }
        return m;
    }

    void scheduleSide(int side) {
        std::map<int, std::vector<int>> byDepth;  // depth -> clause idxs on this side
        for (const auto& cp : lay.clauses)
            if ((cp.polarity == Polarity::Positive) == (side > 0)) byDepth[cp.depth].push_back(cp.idx);
        int frontier = 1;
        for (auto& [depth, idxs] : byDepth) {
            int r = std::max(frontier, 2 * depth - 1);  // depth = distance from the variable row
            for (int c : idxs)
                for (const TunnelKey& k : lay.clauses[c].literals)
                    r = std::max(r, minReaderStep(tunnels.at(k)));
            if (r % 2 == 0) r++;
            for (int c : idxs) {
                lay.clauses[c].readerStep = r;
                lay.clauses[c].sliderStep = r + 1;
                lay.clauses[c].floorStep = r + 2;
                for (const TunnelKey& k : lay.clauses[c].literals)
                    tunnels.at(k).readerStep = r;
            }
            frontier = r + 3;
        }
    }

    void planLayers() {
        scheduleSide(1);
        scheduleSide(-1);
        int posH = 1, negH = 1;
        for (const auto& [key, t] : tunnels) {
            int top = t.readerStep;
            if (t.clauseIdx >= 0) top = lay.clauses[t.clauseIdx].floorStep;
            (key.side > 0 ? posH : negH) = std::max(key.side > 0 ? posH : negH, top);
        }
        lay.uRowLayer = negH + 1;
        lay.vRowLayer = negH + 2;
        lay.totalLayers = negH + posH + 2;
        for (const auto& [key, t] : tunnels) lay.tunnels.push_back(t);
    }

    // ---- geometry helpers ---------------------------------------------------

    int tunnelIdx(int var, int slot) const { return slotPrefix[var] + slot; }
    int tunnelXOf(const TunnelKey& k) const { return kWallW + kPitch * tunnelIdx(k.var, k.slot); }
    int wallXOf(int wall) const { return kPitch * wall; }

    bool tunnelExists(const TunnelKey& k) const { return tunnels.count(k) > 0; }

    const ReductionLayout::Tunnel* tunnelAt(int var, int side, int slot) const {
        auto it = tunnels.find({var, side, slot});
        return it == tunnels.end() ? nullptr : &it->second;
    }

    // split whose bar layer covers this tunnel at this step, if any
    const ReductionLayout::Split* splitAt(const TunnelKey& k, int step) const {
        for (const auto& sp : lay.splits)
            if (sp.var == k.var && sp.side == k.side && sp.step == step &&
                (sp.parentSlot == k.slot || sp.parentSlot + 1 == k.slot))
                return &sp;
        return nullptr;
    }

    // presence interval of a tunnel on its side, in steps
    std::pair<int, int> presence(const ReductionLayout::Tunnel& t) const {
        int lo = t.key.slot == 0 ? 0 : t.bornStep - 1;
        int hi = t.readerStep;
        return {lo, hi};
    }

    // what a tunnel holds at a step: row kinds per the global alternation
    RowKind contentAt(const ReductionLayout::Tunnel& t, int step) const {
        auto [lo, hi] = presence(t);
        if (step < lo || step > hi) return RowKind::None;
        if (step == t.readerStep) return RowKind::Reader;
        if (splitAt(t.key, step)) return RowKind::SplitLayer;
        if (t.key.slot > 0 && step == t.bornStep - 1) return RowKind::Filler;
        bool pos = t.key.side > 0;
        if (step == 0) return pos ? RowKind::Row5 : RowKind::Row3;
        bool odd = step % 2 == 1;
        if (pos) return odd ? RowKind::Row3 : RowKind::Row5;
        return odd ? RowKind::Row5 : RowKind::Row3;
    }

    const ReductionLayout::Clause* clauseOfWallBoundary(int wall, int side, int step,
                                                        bool& isLeft) const {
        for (const auto& cp : lay.clauses) {
            if ((cp.polarity == Polarity::Positive) != (side > 0)) continue;
            int loW = tunnelIdx(cp.literals.front().var, cp.literals.front().slot);
            int hiW = tunnelIdx(cp.literals.back().var, cp.literals.back().slot) + 1;
            if (step != cp.sliderStep && step != cp.floorStep) continue;
            if (wall == loW) { isLeft = true; return &cp; }
            if (wall == hiW) { isLeft = false; return &cp; }
        }
        return nullptr;
    }

    bool wallHasCells(int wall, int side, int step) const {
        // presence from adjacent tunnels
        int lo = 1 << 30, hi = -1;
        for (int tIdx : {wall - 1, wall}) {
            if (tIdx < 0 || tIdx >= slotPrefix[nVars]) continue;
            int var = static_cast<int>(std::upper_bound(slotPrefix.begin(), slotPrefix.end(),
                                                        tIdx) - slotPrefix.begin()) - 1;
            int slot = tIdx - slotPrefix[var];
            const ReductionLayout::Tunnel* t = tunnelAt(var, side, slot);
            if (!t) continue;
            auto [plo, phi] = presence(*t);
            lo = std::min(lo, plo);
            hi = std::max(hi, phi);
        }
        if (hi < 0 || step < lo || step > hi) return false;
        // interrupted by a split bar between the two adjacent tunnels
        for (const auto& sp : lay.splits)
            if (sp.side == side && sp.step == step &&
                tunnelIdx(sp.var, sp.parentSlot) + 1 == wall)
                return false;
        // interrupted by a clause: inside the span at slider/floor steps
        for (const auto& cp : lay.clauses) {
            if ((cp.polarity == Polarity::Positive) != (side > 0)) continue;
            if (step != cp.sliderStep && step != cp.floorStep) continue;
            int loW = tunnelIdx(cp.literals.front().var, cp.literals.front().slot);
            int hiW = tunnelIdx(cp.literals.back().var, cp.literals.back().slot) + 1;
            if (wall >= loW && wall <= hiW) return false;
        }
        return true;
    }

    // ---- emission -----------------------------------------------------------

    VertexRef put(int layer, int width, const std::string& tag, PosRule rule) {
        VertexRef ref = inst.graph.addVertex(layer, width, tag);
        rules[packRef(ref)] = rule;
        inst.provenance[packRef(ref)] = tag;
        return ref;
    }

    PosRule fixed(int x) {
        PosRule r;
        r.kind = PosRule::Fixed;
        r.fixedX = x;
        return r;
    }

    void emitLayer(int layer) {
        int side = layer >= lay.vRowLayer ? 1 : -1;
        int step = side > 0 ? layer - lay.vRowLayer : lay.uRowLayer - layer;

        // clause structures covering block ranges at this step
        struct Cover { const ReductionLayout::Clause* cp; int loW, hiW; };
        std::vector<Cover> covers;
        for (const auto& cp : lay.clauses) {
            if ((cp.polarity == Polarity::Positive) != (side > 0)) continue;
            if (step != cp.sliderStep && step != cp.floorStep) continue;
            covers.push_back({&cp, tunnelIdx(cp.literals.front().var, cp.literals.front().slot),
                              tunnelIdx(cp.literals.back().var, cp.literals.back().slot) + 1});
        }

        int nT = slotPrefix[nVars];
        for (int w = 0; w <= nT; w++) {
            const Cover* cov = nullptr;
            for (const auto& c : covers)
                if (w == c.loW) cov = &c;
            if (cov) {
                if (step == cov->cp->sliderStep) emitSliderLayer(*cov->cp, layer);
                else emitFloor(*cov->cp, layer);
                w = cov->hiW;  // outer walls and the interior are consumed
            } else if (wallHasCells(w, side, step)) {
                for (int col = 0; col < 3; col++)
                    wallCells[{w, layer, col}] =
                        put(layer, 1, "wall" + std::to_string(w) + ":c" + std::to_string(col),
                            fixed(wallXOf(w) + col));
            }
            if (w == nT) break;

            // tunnel block w
            int var = static_cast<int>(std::upper_bound(slotPrefix.begin(), slotPrefix.end(), w) -
                                       slotPrefix.begin()) - 1;
            int slot = w - slotPrefix[var];
            const ReductionLayout::Tunnel* t = tunnelAt(var, side, slot);
            if (!t) continue;
            emitTunnelContent(*t, step, layer);
        }
    }

    std::string tunnelTag(const TunnelKey& k) const {
        return f.variables[k.var] + (k.side > 0 ? "+" : "-") + "s" + std::to_string(k.slot);
    }

    void emitTunnelContent(const ReductionLayout::Tunnel& t, int step, int layer) {
        RowKind kind = contentAt(t, step);
        const TunnelKey& k = t.key;
        int P = tunnelXOf(k);
        std::string base = tunnelTag(k);
        switch (kind) {
            case RowKind::None:
                return;
            case RowKind::Row5:
                for (int i = 0; i < 5; i++) {
                    PosRule r;
                    r.kind = PosRule::RowCell;
                    r.tunnel = k;
                    r.row5 = true;
                    r.cellIdx = i;
                    r.fixedX = P;
                    std::string tag = step == 0 && k.side > 0
                                          ? "var:" + f.variables[k.var] + ":v" + std::to_string(i + 1)
                                          : "prop:" + base + ":r5@" + std::to_string(step) + ":" +
                                                std::to_string(i + 1);
                    rowCells[{k, step, i}] = put(layer, 1, tag, r);
                }
                return;
            case RowKind::Row3:
                for (int i = 0; i < 3; i++) {
                    PosRule r;
                    r.kind = PosRule::RowCell;
                    r.tunnel = k;
                    r.row5 = false;
                    r.cellIdx = i;
                    r.fixedX = P;
                    std::string tag = step == 0 && k.side < 0
                                          ? "var:" + f.variables[k.var] + ":u" + std::to_string(i + 1)
                                          : "prop:" + base + ":r3@" + std::to_string(step) + ":" +
                                                std::to_string(i + 1);
                    rowCells[{k, step, i}] = put(layer, k3W[i], tag, r);
                }
                return;
            case RowKind::Reader: {
                PosRule r;
                r.kind = PosRule::ReaderPos;
                r.tunnel = k;
                r.fixedX = P;
                readers[k] = put(layer, 3, "reader:" + base, r);
                return;
            }
            case RowKind::Filler:
                fillers[k] = put(layer, kTunnelW, "split:" + base + ":floor", fixed(P));
                return;
            case RowKind::SplitLayer: {
                const ReductionLayout::Split* sp = splitAt(k, step);
                if (k.slot != sp->parentSlot) return;  // emitted with the parent block
                // p1 p2 bar | q2 q1 spanning parent + inner wall + duplicate
                int ps = sp->parentSlot;
                std::string sbase = "split:" + f.variables[k.var] + (k.side > 0 ? "+" : "-") +
                                    "s" + std::to_string(ps);
                PosRule p2r; p2r.kind = PosRule::SplitP2; p2r.tunnel = k; p2r.fixedX = P;
                PosRule barR; barR.kind = PosRule::SplitBar; barR.tunnel = k; barR.fixedX = P;
                PosRule q2r; q2r.kind = PosRule::SplitQ2; q2r.tunnel = k; q2r.fixedX = P;
                splitPieces[{k.var, k.side, ps, 0}] = put(layer, 2, sbase + ":p1", fixed(P));
                splitPieces[{k.var, k.side, ps, 1}] = put(layer, 1, sbase + ":p2", p2r);
                splitPieces[{k.var, k.side, ps, 2}] = put(layer, 8, sbase + ":bar", barR);
                splitPieces[{k.var, k.side, ps, 3}] = put(layer, 1, sbase + ":q2", q2r);
                splitPieces[{k.var, k.side, ps, 4}] = put(layer, 2, sbase + ":q1", fixed(P + 13));
                return;
            }
        }
    }

    void emitSliderLayer(const ReductionLayout::Clause& cp, int layer) {
        int loW = tunnelIdx(cp.literals.front().var, cp.literals.front().slot);
        int hiW = tunnelIdx(cp.literals.back().var, cp.literals.back().slot) + 1;
        std::string base = "clause" + std::to_string(cp.idx);
        wallConts[{cp.idx, 0}] = put(layer, 3, base + ":wallL", fixed(wallXOf(loW)));
        PosRule sr;
        sr.kind = PosRule::SliderPos;
        sr.clause = cp.idx;
        sliders[cp.idx] = put(layer, 2, base + ":slider", sr);
        wallConts[{cp.idx, 1}] = put(layer, 3, base + ":wallR", fixed(wallXOf(hiW)));
    }

    void emitFloor(const ReductionLayout::Clause& cp, int layer) {
        int loW = tunnelIdx(cp.literals.front().var, cp.literals.front().slot);
        int hiW = tunnelIdx(cp.literals.back().var, cp.literals.back().slot) + 1;
        int left = wallXOf(loW);
        int right = wallXOf(hiW) + kWallW;
        std::string base = "clause" + std::to_string(cp.idx) + ":floor";
        int idx = 0;
        auto cell = [&](int x, int w, const std::string& name) {
            floorCells[{cp.idx, idx}] = put(layer, w, base + ":" + name, fixed(x));
            floorSpan[{cp.idx, idx}] = {x, w};
            idx++;
        };
        cell(left, 1, "l1");
        cell(left + 1, 1, "l2");
        int m = static_cast<int>(cp.literals.size());
        for (int j = 0; j < m; j++) {
            int P = tunnelXOf(cp.literals[j]);
            if (j == 0) {
                cell(P - 1, 2, "t1");
            } else {
                int prevRight = floorSpan[{cp.idx, idx - 1}].first +
                                floorSpan[{cp.idx, idx - 1}].second;
                cell(prevRight, P - prevRight, "b" + std::to_string(j));
                cell(P, 2, "t" + std::to_string(j + 1));
            }
        }
        int prevRight = floorSpan[{cp.idx, idx - 1}].first + floorSpan[{cp.idx, idx - 1}].second;
        cell(prevRight, right - 2 - prevRight, "b" + std::to_string(m));
        cell(right - 2, 1, "r1");
        cell(right - 1, 1, "r2");
    }

    // ---- wiring -------------------------------------------------------------

    bool tri() const { return variant == ReductionVariant::Triangulated; }

    void edge(VertexRef a, VertexRef b) { inst.graph.addEdge(a, b); }

    template <class K, class M>
    const VertexRef* get(const M& m, const K& key) const {
        auto it = m.find(key);
        return it == m.end() ? nullptr : &it->second;
    }

    void wireWalls() {
        int nT = slotPrefix[nVars];
        for (int w = 0; w <= nT; w++) {
            for (int layer = 1; layer <= lay.totalLayers; layer++) {
                const VertexRef* c0 = get(wallCells, std::tuple{w, layer, 0});
                if (!c0) continue;
                VertexRef c1 = wallCells.at({w, layer, 1});
                VertexRef c2 = wallCells.at({w, layer, 2});
                edge(*c0, c1);
                edge(c1, c2);
                for (int col = 0; col < 3; col++) {
                    if (const VertexRef* up = get(wallCells, std::tuple{w, layer + 1, col}))
                        edge(wallCells.at({w, layer, col}), *up);
                    if (tri() && col < 2) {
                        if (const VertexRef* diag = get(wallCells, std::tuple{w, layer + 1, col + 1}))
                            edge(wallCells.at({w, layer, col}), *diag);
                    }
                }
            }
        }
    }

    // the piece standing in the wall's columns next to a tunnel at one layer
    const VertexRef* flankPiece(int wall, int layer, bool towardRight) const {
        // towardRight: the tunnel is right of the wall, wants the wall's col 2
        if (const VertexRef* c = get(wallCells, std::tuple{wall, layer, towardRight ? 2 : 0}))
            return c;
        for (const auto& cp : lay.clauses) {
            int loW = tunnelIdx(cp.literals.front().var, cp.literals.front().slot);
            int hiW = tunnelIdx(cp.literals.back().var, cp.literals.back().slot) + 1;
            int side = cp.polarity == Polarity::Positive ? 1 : -1;
            if (wall != loW && wall != hiW) continue;
            if (layer == lay.layerOf(side, cp.sliderStep))
                return get(wallConts, std::pair{cp.idx, wall == loW ? 0 : 1});
            if (layer == lay.layerOf(side, cp.floorStep)) {
                if (wall == loW && !towardRight) return get(floorCells, std::pair{cp.idx, 0});
                if (wall == hiW && towardRight) {
                    int last = 0;
                    while (floorCells.count({cp.idx, last + 1})) last++;
                    return get(floorCells, std::pair{cp.idx, last});
                }
            }
        }
        return nullptr;
    }

    void wireFlanks(const TunnelKey& k, int layer, VertexRef first, VertexRef last) {
        int w = tunnelIdx(k.var, k.slot);
        if (const VertexRef* l = flankPiece(w, layer, true)) edge(*l, first);
        if (const VertexRef* r = flankPiece(w + 1, layer, false)) edge(last, *r);
    }

    // interface edge sets between a 3-row X and a 5-row Y (adjacent layers)
    void wire3to5(const TunnelKey& k3, int step3, const TunnelKey& k5, int step5, bool middle) {
        auto x = [&](int i) { return rowCells.at({k3, step3, i}); };
        auto y = [&](int i) { return rowCells.at({k5, step5, i}); };
        edge(x(0), y(0));
        edge(x(0), y(1));
        edge(x(0), y(2));
        if (middle) {
            edge(x(1), y(2));
            edge(x(1), y(3));
        } else {
            if (tri()) edge(x(0), y(3));  // the long triangulation edge
            edge(x(1), y(3));
        }
        edge(x(2), y(3));
        edge(x(2), y(4));
    }

    void wireTunnels() {
        for (const auto& [key, t] : tunnels) {
            auto [lo, hi] = presence(t);
            for (int s = lo; s <= hi; s++) {
                RowKind kind = contentAt(t, s);
                int layer = lay.layerOf(key.side, s);

                // horizontal chain + flanks
                if (kind == RowKind::Row5) {
                    for (int i = 0; i + 1 < 5; i++)
                        edge(rowCells.at({key, s, i}), rowCells.at({key, s, i + 1}));
                    wireFlanks(key, layer, rowCells.at({key, s, 0}), rowCells.at({key, s, 4}));
                } else if (kind == RowKind::Row3) {
                    edge(rowCells.at({key, s, 0}), rowCells.at({key, s, 1}));
                    edge(rowCells.at({key, s, 1}), rowCells.at({key, s, 2}));
                    wireFlanks(key, layer, rowCells.at({key, s, 0}), rowCells.at({key, s, 2}));
                } else if (kind == RowKind::Reader) {
                    VertexRef r = readers.at(key);
                    wireFlanks(key, layer, r, r);
                } else if (kind == RowKind::Filler) {
                    VertexRef f0 = fillers.at(key);
                    wireFlanks(key, layer, f0, f0);
                }

                // vertical interface to the next step away from the variables
                if (s == hi) continue;
                RowKind next = contentAt(t, s + 1);
                if (kind == RowKind::Row5 && next == RowKind::Row3)
                    wire3to5(key, s + 1, key, s, true);
                else if (kind == RowKind::Row3 && next == RowKind::Row5)
                    wire3to5(key, s, key, s + 1, true);
                else if (next == RowKind::Reader)
                    wireReader(t, s);
            }
        }

        // the variable-gadget interface: u-row under v-row, no middle edge
        for (int v = 0; v < nVars; v++) {
            TunnelKey up{v, 1, 0}, down{v, -1, 0};
            wire3to5(down, 0, up, 0, false);
        }

        for (const auto& sp : lay.splits) wireSplit(sp);
    }

    void wireReader(const ReductionLayout::Tunnel& t, int rowStep) {
        const TunnelKey& k = t.key;
        VertexRef r = readers.at(k);
        RowKind rk = contentAt(t, rowStep);
        int cells = rk == RowKind::Row5 ? 5 : 3;
        for (int i = 0; i < cells; i++) edge(r, rowCells.at({k, rowStep, i}));
        if (tri()) {
            int layer = lay.layerOf(k.side, rowStep);
            int w = tunnelIdx(k.var, k.slot);
            if (const VertexRef* c = get(wallCells, std::tuple{w, layer, 2})) edge(r, *c);
            if (const VertexRef* c = get(wallCells, std::tuple{w + 1, layer, 0})) edge(r, *c);
        }
    }

    void wireSplit(const ReductionLayout::Split& sp) {
        TunnelKey parent{sp.var, sp.side, sp.parentSlot};
        TunnelKey dup{sp.var, sp.side, sp.parentSlot + 1};
        VertexRef p1 = splitPieces.at({sp.var, sp.side, sp.parentSlot, 0});
        VertexRef p2 = splitPieces.at({sp.var, sp.side, sp.parentSlot, 1});
        VertexRef bar = splitPieces.at({sp.var, sp.side, sp.parentSlot, 2});
        VertexRef q2 = splitPieces.at({sp.var, sp.side, sp.parentSlot, 3});
        VertexRef q1 = splitPieces.at({sp.var, sp.side, sp.parentSlot, 4});
        int e = sp.step;
        int barLayer = lay.layerOf(sp.side, e);

        edge(p1, p2);
        edge(p2, bar);
        edge(bar, q2);
        edge(q2, q1);
        int wL = tunnelIdx(sp.var, sp.parentSlot);
        if (const VertexRef* c = get(wallCells, std::tuple{wL, barLayer, 2})) edge(*c, p1);
        if (const VertexRef* c = get(wallCells, std::tuple{wL + 2, barLayer, 0})) edge(q1, *c);

        VertexRef f0 = fillers.at(dup);
        edge(bar, f0);
        edge(q2, f0);
        edge(q1, f0);

        // A-row (variable side) and B/C 5-rows (clause side)
        for (int dir : {-1, +1}) {
            int s = e + dir;
            bool varSide = dir == -1;
            auto a = [&](const TunnelKey& kk, int i) { return rowCells.at({kk, s, i}); };
            if (varSide || contentAt(tunnels.at(parent), s) == RowKind::Row5) {
                edge(p1, a(parent, 0));
                edge(p1, a(parent, 1));
                edge(p2, a(parent, 2));
                edge(bar, a(parent, 3));
                edge(bar, a(parent, 4));
            }
            if (!varSide && contentAt(tunnels.at(dup), s) == RowKind::Row5) {
                edge(bar, a(dup, 0));
                edge(bar, a(dup, 1));
                edge(q2, a(dup, 2));
                edge(q1, a(dup, 3));
                edge(q1, a(dup, 4));
            }
            // inner wall cells above/below the bar
            int layer = lay.layerOf(sp.side, s);
            for (int col = 0; col < 3; col++)
                if (const VertexRef* c = get(wallCells, std::tuple{wL + 1, layer, col}))
                    edge(bar, *c);
        }
    }

    void wireClauses() {
        for (const auto& cp : lay.clauses) {
            int side = cp.polarity == Polarity::Positive ? 1 : -1;
            VertexRef vs = sliders.at(cp.idx);
            VertexRef wcl = wallConts.at({cp.idx, 0});
            VertexRef wcr = wallConts.at({cp.idx, 1});
            edge(wcl, vs);
            edge(vs, wcr);

            for (const TunnelKey& k : cp.literals) edge(vs, readers.at(k));
            // inner wall cells on the reader layer
            int readerLayer = lay.layerOf(side, cp.readerStep);
            int loW = tunnelIdx(cp.literals.front().var, cp.literals.front().slot);
            int hiW = tunnelIdx(cp.literals.back().var, cp.literals.back().slot) + 1;
            for (int w = loW + 1; w < hiW; w++)
                for (int col = 0; col < 3; col++)
                    if (const VertexRef* c = get(wallCells, std::tuple{w, readerLayer, col}))
                        if (tri() || col == 2) edge(vs, *c);

            // wall continuations: wall cells toward the variables, floor away
            for (int sideIdx2 = 0; sideIdx2 < 2; sideIdx2++) {
                int w = sideIdx2 == 0 ? loW : hiW;
                VertexRef wc = wallConts.at({cp.idx, sideIdx2});
                for (int col = 0; col < 3; col++)
                    if (const VertexRef* c = get(wallCells, std::tuple{w, readerLayer, col}))
                        edge(wc, *c);
            }

            // floor chain and its neighbors
            int nCells = 0;
            while (floorCells.count({cp.idx, nCells})) nCells++;
            int floorLayer = lay.layerOf(side, cp.floorStep);
            int beyondLayer = lay.layerOf(side, cp.floorStep + 1);
            for (int i = 0; i < nCells; i++) {
                VertexRef c = floorCells.at({cp.idx, i});
                if (i + 1 < nCells) edge(c, floorCells.at({cp.idx, i + 1}));
                auto [x, wdt] = floorSpan.at({cp.idx, i});
                // slider reaches every t/b cell strictly inside the walls
                if (x + wdt > wallXOf(loW) + kWallW && x < wallXOf(hiW)) edge(vs, c);
                // wall continuations cover the outermost three cells each side
                if (x < wallXOf(loW) + kWallW) edge(wallConts.at({cp.idx, 0}), c);
                if (x + wdt > wallXOf(hiW)) edge(wallConts.at({cp.idx, 1}), c);
                // resumed walls beyond the floor
                for (int w : {loW, hiW}) {
                    for (int col = 0; col < 3; col++) {
                        if (const VertexRef* rc = get(wallCells, std::tuple{w, beyondLayer, col})) {
                            int wx = wallXOf(w) + col;
                            if (wx >= x && wx < x + wdt) edge(c, *rc);
                        }
                    }
                }
            }
            // flanking tunnel rows outside the span meet the floor's edge cells
            VertexRef first = floorCells.at({cp.idx, 0});
            VertexRef last = floorCells.at({cp.idx, nCells - 1});
            wireFloorNeighbors(cp, side, loW, hiW, floorLayer, first, last);
        }
    }

    void wireFloorNeighbors(const ReductionLayout::Clause& cp, int side, int loW, int hiW,
                            int floorLayer, VertexRef first, VertexRef last) {
        (void)cp;
        (void)side;
        // left neighbor tunnel's last cell at this layer, if a row exists there
        auto neighborEdge = [&](int w, bool leftOfSpan) {
            int tIdx = leftOfSpan ? w - 1 : w;
            if (tIdx < 0 || tIdx >= slotPrefix[nVars]) return;
            int var = static_cast<int>(std::upper_bound(slotPrefix.begin(), slotPrefix.end(),
                                                        tIdx) - slotPrefix.begin()) - 1;
            int slot = tIdx - slotPrefix[var];
            int sideLocal = floorLayer >= lay.vRowLayer ? 1 : -1;
            int step = sideLocal > 0 ? floorLayer - lay.vRowLayer : lay.uRowLayer - floorLayer;
            const ReductionLayout::Tunnel* t = tunnelAt(var, sideLocal, slot);
            if (!t) return;
            RowKind kind = contentAt(*t, step);
            VertexRef piece;
            if (kind == RowKind::Row5) piece = rowCells.at({t->key, step, leftOfSpan ? 4 : 0});
            else if (kind == RowKind::Row3) piece = rowCells.at({t->key, step, leftOfSpan ? 2 : 0});
            else if (kind == RowKind::Reader) piece = readers.at(t->key);
            else if (kind == RowKind::Filler) piece = fillers.at(t->key);
            else return;
            edge(piece, leftOfSpan ? first : last);
        };
        neighborEdge(loW, true);
        neighborEdge(hiW, false);
    }

    // ---- canonical positions -------------------------------------------------

    bool pattern(const TunnelKey& k, const std::vector<bool>& a,
                 const WitnessOptions& opts) const {
        if (k.slot == 0) return k.side > 0 ? a[k.var] : !a[k.var];
        auto it = opts.duplicatePattern.find(k);
        if (it != opts.duplicatePattern.end()) return it->second;
        return pattern({k.var, k.side, k.slot - 1}, a, opts);
    }

    int sliderX(const ReductionLayout::Clause& cp, const std::vector<bool>& a,
                const WitnessOptions& opts) const {
        int firstP = tunnelXOf(cp.literals.front());
        for (size_t j = 0; j < cp.literals.size(); j++) {
            if (pattern(cp.literals[j], a, opts)) {
                int P = tunnelXOf(cp.literals[j]);
                return j == 0 ? P : P - 1;
            }
        }
        return firstP;  // three-contact fallback
    }

    Representation makeWitness(const std::vector<bool>& a, const WitnessOptions& opts) const {
        Representation rep = Representation::zeros(inst.graph, CoordModel::Integer);
        for (int layer = 1; layer <= lay.totalLayers; layer++) {
            for (int pos = 1; pos <= inst.graph.layerSize(layer); pos++) {
                VertexRef ref{layer, pos};
                rep.set(ref, Rational(innerX(rules.at(packRef(ref)), a, opts)));
            }
        }
        return rep;
    }

    // ---- frame ---------------------------------------------------------------

    void addFrame() {
        int w = lay.totalWidth;
        int h = lay.totalLayers;
        long long thickness = static_cast<long long>(w) * h;
        if (thickness > maxFrameThickness)
            throw BudgetError("frame of thickness " + std::to_string(thickness) +
                              " exceeds the size guard of " +
                              std::to_string(maxFrameThickness));
        int T = static_cast<int>(thickness);
        lay.frameThickness = T;

        LayeredGraph framedGraph;
        std::map<std::uint64_t, PosRule> newRules;
        std::map<std::uint64_t, std::string> newProv;
        int L2 = h + 2 * T;

        std::vector<std::vector<VertexRef>> mapOld(h + 1);
        std::vector<VertexRef> sideL(L2 + 1), sideR(L2 + 1), rows(L2 + 1);

        for (int layer = 1; layer <= L2; layer++) {
            sideL[layer] = framedGraph.addVertex(layer, T, "frame:left");
            newRules[packRef(sideL[layer])] = fixed(0);
            if (layer <= T) {
                rows[layer] = framedGraph.addVertex(layer, w, "frame:bottom" + std::to_string(layer));
                newRules[packRef(rows[layer])] = fixed(T);
            } else if (layer > h + T) {
                rows[layer] = framedGraph.addVertex(layer, w, "frame:top" + std::to_string(layer - h - T));
                newRules[packRef(rows[layer])] = fixed(T);
            } else {
                int inner = layer - T;
                mapOld[inner].resize(inst.graph.layerSize(inner) + 1);
                for (int pos = 1; pos <= inst.graph.layerSize(inner); pos++) {
                    const Vertex& v = inst.graph.vertex({inner, pos});
                    VertexRef nr = framedGraph.addVertex(layer, v.width, v.label);
                    mapOld[inner][pos] = nr;
                    PosRule r = rules.at(packRef(VertexRef{inner, pos}));
                    newRules[packRef(nr)] = r;  // witness adds the frame offset later
                    newProv[packRef(nr)] = v.label;
                }
            }
            sideR[layer] = framedGraph.addVertex(layer, T, "frame:right");
            newRules[packRef(sideR[layer])] = fixed(T + w);
        }

        for (const Edge& e : inst.graph.edges())
            framedGraph.addEdge(mapOld[e.first.layer][e.first.pos],
                                mapOld[e.second.layer][e.second.pos]);

        for (int layer = 1; layer <= L2; layer++) {
            if (layer < L2) {
                framedGraph.addEdge(sideL[layer], sideL[layer + 1]);
                framedGraph.addEdge(sideR[layer], sideR[layer + 1]);
            }
            if (layer <= T || layer > h + T) {
                framedGraph.addEdge(sideL[layer], rows[layer]);
                framedGraph.addEdge(rows[layer], sideR[layer]);
                if (layer < T) framedGraph.addEdge(rows[layer], rows[layer + 1]);
                if (layer > h + T && layer < L2) framedGraph.addEdge(rows[layer], rows[layer + 1]);
            } else {
                int inner = layer - T;
                if (inst.graph.layerSize(inner) > 0) {
                    framedGraph.addEdge(sideL[layer], mapOld[inner][1]);
                    framedGraph.addEdge(mapOld[inner][inst.graph.layerSize(inner)], sideR[layer]);
                }
            }
        }
        // the innermost frame rows touch every vertex on the boundary layers
        for (int pos = 1; pos <= inst.graph.layerSize(1); pos++)
            framedGraph.addEdge(rows[T], mapOld[1][pos]);
        for (int pos = 1; pos <= inst.graph.layerSize(h); pos++)
            framedGraph.addEdge(rows[h + T + 1], mapOld[h][pos]);

        inst.graph = std::move(framedGraph);
        rules = std::move(newRules);
        inst.provenance.clear();
        for (int layer = 1; layer <= L2; layer++)
            for (int pos = 1; pos <= inst.graph.layerSize(layer); pos++)
                inst.provenance[packRef({layer, pos})] = inst.graph.vertex({layer, pos}).label;
    }

    // frame-aware canonical witness
    Representation frameWitness(const std::vector<bool>& a, const WitnessOptions& opts) const {
        Representation rep = Representation::zeros(inst.graph, CoordModel::Integer);
        int T = lay.frameThickness;
        for (int layer = 1; layer <= inst.graph.layerCount(); layer++) {
            for (int pos = 1; pos <= inst.graph.layerSize(layer); pos++) {
                VertexRef ref{layer, pos};
                const PosRule& r = rules.at(packRef(ref));
                int x;
                if (r.kind == PosRule::Fixed) {
                    x = r.fixedX;
                    const std::string& tag = inst.graph.vertex(ref).label;
                    bool framePiece = tag.rfind("frame:", 0) == 0;
                    if (!framePiece) x += T;
                } else {
                    x = innerX(r, a, opts) + T;
                }
                rep.set(ref, Rational(x));
            }
        }
        return rep;
    }

    int innerX(const PosRule& r, const std::vector<bool>& a, const WitnessOptions& opts) const {
        switch (r.kind) {
            case PosRule::Fixed:
                return r.fixedX;
            case PosRule::RowCell: {
                bool pat = pattern(r.tunnel, a, opts);
                const int* off = r.row5 ? (pat ? k5T : k5F) : (pat ? k3T : k3F);
                return r.fixedX + off[r.cellIdx];
            }
            case PosRule::ReaderPos:
                return r.fixedX + (pattern(r.tunnel, a, opts) ? 0 : 3);
            case PosRule::SplitP2:
                return r.fixedX + (pattern(r.tunnel, a, opts) ? 2 : 3);
            case PosRule::SplitBar:
                return r.fixedX + (pattern(r.tunnel, a, opts) ? 3 : 4);
            case PosRule::SplitQ2: {
                bool parentPat = pattern(r.tunnel, a, opts);
                TunnelKey dup{r.tunnel.var, r.tunnel.side, r.tunnel.slot + 1};
                return r.fixedX + (parentPat && pattern(dup, a, opts) ? 11 : 12);
            }
            case PosRule::SliderPos:
                return sliderX(lay.clauses[r.clause], a, opts);
        }
        return 0;
    }

    // ---- top level -----------------------------------------------------------

    void build() {
        checkFormula();
        planTunnels();
        planLayers();
        for (int layer = 1; layer <= lay.totalLayers; layer++) emitLayer(layer);
        wireWalls();
        wireTunnels();
        wireClauses();

        if (variant == ReductionVariant::PlanarPruned) pruneEdges();
        if (framed) addFrame();

        // k from the deficit law on a reference assignment
        std::vector<bool> allTrue(nVars, true);
        Representation w = framed ? frameWitness(allTrue, {}) : makeWitness(allTrue, {});
        ContactReport rep = evaluate(inst.graph, w);
        if (!rep.valid)
            throw std::logic_error("canonical reference witness is invalid");
        inst.k = rep.totalContacts + unsatisfiedCount(f, allTrue);
    }

    static std::uint64_t edgeKey64(const Edge& e) {
        auto p = [](VertexRef v) {
            return (static_cast<std::uint64_t>(static_cast<std::uint16_t>(v.layer)) << 16) |
                   static_cast<std::uint16_t>(v.pos);
        };
        return (p(e.first) << 32) | p(e.second);
    }

    void pruneEdges() {
        // keep edges realized in some canonical drawing, plus the slider's
        // full travel freedom
        std::set<std::uint64_t> keep;
        auto keepEdge = [&](const Edge& e) { keep.insert(edgeKey64(e)); };
        int enumVars = std::min(nVars, 12);
        for (std::uint64_t bits = 0; bits < (1ULL << enumVars); bits++) {
            std::vector<bool> a(nVars, true);
            for (int v = 0; v < enumVars; v++) a[v] = (bits >> v) & 1;
            for (int dupMode = 0; dupMode < 2; dupMode++) {
                WitnessOptions opts;
                if (dupMode == 1)
                    for (const auto& sp : lay.splits)
                        opts.duplicatePattern[{sp.var, sp.side, sp.parentSlot + 1}] = false;
                ContactReport rep = evaluate(inst.graph, makeWitness(a, opts));
                if (!rep.valid) throw std::logic_error("canonical witness invalid during pruning");
                for (const Edge& e : rep.realizedEdges) keepEdge(e);
            }
        }
        for (const auto& [c, vs] : sliders)
            for (const Edge& e : inst.graph.edges())
                if (e.first == vs || e.second == vs) keepEdge(e);

        LayeredGraph pruned;
        pruned.layers = inst.graph.layers;
        for (const Edge& e : inst.graph.edges())
            if (keep.count(edgeKey64(e))) pruned.addEdge(e.first, e.second);
        inst.graph = std::move(pruned);
    }
};

} // namespace

int ReductionLayout::tunnelX(TunnelKey k) const {
    int idx = 0;
    for (int v = 0; v < k.var; v++) idx += slots[v];
    return kWallW + kPitch * (idx + k.slot);
}

ReductionInstance compile(const RectilinearFormula& f, ReductionVariant variant, bool framed,
                          int maxFrameThickness) {
    Builder b(f, variant, framed);
    b.maxFrameThickness = maxFrameThickness;
    b.build();
    return std::move(b.inst);
}

// Positions are recomputed from a fresh layout pass; the emission is
// deterministic, so vertex references line up with the compiled graph.
Representation witness(const ReductionInstance& inst, const std::vector<bool>& assignment,
                       const WitnessOptions& opts) {
    if (static_cast<int>(assignment.size()) != static_cast<int>(inst.formula.variables.size()))
        throw std::invalid_argument("assignment size does not match the variable count");
    Builder b(inst.formula, inst.variant, inst.framed);
    b.maxFrameThickness = 1 << 30;  // the compiled instance already passed its guard
    b.checkFormula();
    b.planTunnels();
    b.planLayers();
    for (int layer = 1; layer <= b.lay.totalLayers; layer++) b.emitLayer(layer);
    if (inst.framed) {
        b.addFrame();
        return b.frameWitness(assignment, opts);
    }
    return b.makeWitness(assignment, opts);
}

long long unsatisfiedCount(const RectilinearFormula& f, const std::vector<bool>& assignment) {
    std::map<std::string, bool> val;
    for (size_t i = 0; i < f.variables.size(); i++) val[f.variables[i]] = assignment[i];
    long long unsat = 0;
    for (const ClauseSpec& c : f.clauses) {
        bool sat = false;
        for (const std::string& lit : c.literals) {
            bool v = val.at(lit);
            if (c.polarity == Polarity::Positive ? v : !v) sat = true;
        }
        if (!sat) unsat++;
    }
    return unsat;
}

ReductionInstance buildVariableGadget(const std::string& name) {
    RectilinearFormula f;
    f.variables = {name};
    return compile(f);
}

ReductionInstance buildPropagation(const std::string& name, int steps) {
    RectilinearFormula f;
    f.variables = {name};
    f.clauses = {{{name}, Polarity::Positive, std::max(1, steps)}};
    return compile(f);
}

LayeredGraph buildWall(int layers) {
    LayeredGraph g;
    for (int l = 1; l <= layers; l++)
        for (int c = 0; c < 3; c++) g.addVertex(l, 1, "wall:c" + std::to_string(c));
    for (int l = 1; l <= layers; l++) {
        g.addEdge({l, 1}, {l, 2});
        g.addEdge({l, 2}, {l, 3});
        if (l < layers) {
            for (int c = 1; c <= 3; c++) g.addEdge({l, c}, {l + 1, c});
            g.addEdge({l, 1}, {l + 1, 2});
            g.addEdge({l, 2}, {l + 1, 3});
        }
    }
    return g;
}

ReductionInstance buildClauseGadget(const ClauseSpec& clause,
                                    const std::vector<std::string>& variables) {
    RectilinearFormula f;
    f.variables = variables;
    f.clauses = {clause};
    return compile(f);
}

ReductionInstance buildSplitGadget(const std::string& name) {
    RectilinearFormula f;
    f.variables = {name};
    f.clauses = {{{name}, Polarity::Positive, 1}, {{name}, Polarity::Positive, 2}};
    return compile(f);
}

LayeredGraph buildFrame(const LayeredGraph& inner, int maxThickness) {
    int h = inner.layerCount();
    long long w = 0;
    for (const auto& layer : inner.layers) {
        long long s = 0;
        for (const Vertex& v : layer) s += v.width;
        w = std::max(w, s);
    }
    long long thickness = w * h;
    if (thickness > maxThickness)
        throw BudgetError("frame of thickness " + std::to_string(thickness) +
                          " exceeds the size guard of " + std::to_string(maxThickness));
    int T = static_cast<int>(thickness);
    int wi = static_cast<int>(w);

    LayeredGraph out;
    int L2 = h + 2 * T;
    std::vector<std::vector<VertexRef>> mapOld(h + 1);
    std::vector<VertexRef> sideL(L2 + 1), sideR(L2 + 1), rows(L2 + 1);
    for (int layer = 1; layer <= L2; layer++) {
        sideL[layer] = out.addVertex(layer, T, "frame:left");
        if (layer <= T) {
            rows[layer] = out.addVertex(layer, wi, "frame:bottom" + std::to_string(layer));
        } else if (layer > h + T) {
            rows[layer] = out.addVertex(layer, wi, "frame:top" + std::to_string(layer - h - T));
        } else {
            int innerLayer = layer - T;
            mapOld[innerLayer].resize(inner.layerSize(innerLayer) + 1);
            for (int pos = 1; pos <= inner.layerSize(innerLayer); pos++) {
                const Vertex& v = inner.vertex({innerLayer, pos});
                mapOld[innerLayer][pos] = out.addVertex(layer, v.width, v.label);
            }
        }
        sideR[layer] = out.addVertex(layer, T, "frame:right");
    }
    for (const Edge& e : inner.edges())
        out.addEdge(mapOld[e.first.layer][e.first.pos], mapOld[e.second.layer][e.second.pos]);
    for (int layer = 1; layer <= L2; layer++) {
        if (layer < L2) {
            out.addEdge(sideL[layer], sideL[layer + 1]);
            out.addEdge(sideR[layer], sideR[layer + 1]);
        }
        if (layer <= T || layer > h + T) {
            out.addEdge(sideL[layer], rows[layer]);
            out.addEdge(rows[layer], sideR[layer]);
            if (layer < T) out.addEdge(rows[layer], rows[layer + 1]);
            if (layer > h + T && layer < L2) out.addEdge(rows[layer], rows[layer + 1]);
        } else {
            int innerLayer = layer - T;
            if (inner.layerSize(innerLayer) > 0) {
                out.addEdge(sideL[layer], mapOld[innerLayer][1]);
                out.addEdge(mapOld[innerLayer][inner.layerSize(innerLayer)], sideR[layer]);
            }
        }
    }
    for (int pos = 1; pos <= inner.layerSize(1); pos++) out.addEdge(rows[T], mapOld[1][pos]);
    for (int pos = 1; pos <= inner.layerSize(h); pos++)
        out.addEdge(rows[h + T + 1], mapOld[h][pos]);
    return out;
}

} // namespace lrc
