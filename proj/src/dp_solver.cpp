#include "lrc/dp_solver.hpp"

#include <algorithm>
#include <climits>
#include <cstring>
#include <string>
#include <unordered_map>

namespace lrc {

namespace {

// Per-layer cursor ordinals: vertex j (1-based) with progress l maps to
// pre[j-1] + l, nil maps to pre[n]. Options one column to the right are then
// always among {o, o+1, o+2}, which keeps the enumeration branchless-ish.
struct LayerTable {
    int n = 0;
    std::vector<int> widths;        // by vertex index (0-based)
    std::vector<int> pre;           // pre[j] = sum_{t<j} (w_t + 1), size n+1
    std::vector<LayerCursor> decode; // ordinal -> cursor
    int nilOrd = 0;
    int radix = 1;

    void build(const std::vector<Vertex>& layer) {
        n = static_cast<int>(layer.size());
        widths.resize(n);
        pre.assign(n + 1, 0);
        for (int j = 0; j < n; j++) {
            widths[j] = layer[j].width;
            pre[j + 1] = pre[j] + layer[j].width + 1;
        }
        nilOrd = pre[n];
        radix = nilOrd + 1;
        decode.resize(radix);
        for (int j = 0; j < n; j++)
            for (int l = 0; l <= widths[j]; l++) decode[pre[j] + l] = {j + 1, l};
        decode[nilOrd] = {0, 0};
    }
};

struct Candidate {
    std::vector<int> ords;
    bool stall = false;
    int contacts = 0;
};

// Shared successor enumeration. Returns feasible successors of `ords`
// (ordinal form) under the stall rule; used by both the public successors()
// and the solver.
class Machine {
public:
    const LayeredGraph& g;
    std::vector<LayerTable> tables;
    int L;

    explicit Machine(const LayeredGraph& graph) : g(graph), L(graph.layerCount()) {
        tables.resize(L);
        for (int i = 0; i < L; i++) tables[i].build(graph.layers[i]);
    }

    bool allNil(const std::vector<int>& ords) const {
        for (int i = 0; i < L; i++)
            if (ords[i] != tables[i].nilOrd) return false;
        return true;
    }

    // Option list for one layer: ordinals reachable one column to the right.
    // Order is fixed: geometry-advancing option first where there is a choice.
    void layerOptions(int i, int ord, int out[2], int& count) const {
        const LayerTable& t = tables[i];
        LayerCursor c = t.decode[ord];
        if (c.vertexPos == 0) {                 // nil stays nil
            out[0] = ord; count = 1;
        } else if (c.progress == 0) {           // pending: place or stay
            out[0] = ord + 1; out[1] = ord; count = 2;
        } else if (c.progress < t.widths[c.vertexPos - 1]) {
            out[0] = ord + 1; count = 1;        // mid-rectangle: forced continue
        } else if (c.vertexPos < t.n) {         // right edge: next flush or with gap
            out[0] = ord + 2; out[1] = ord + 1; count = 2;
        } else {
            out[0] = ord + 1; count = 1;        // right edge of the last vertex: nil
        }
    }

    // Evaluates one successor combination. Returns false if infeasible.
    bool evalCombo(const std::vector<int>& cur, const std::vector<int>& succ,
                   bool curStalled, bool& stallOut, int& contactsOut) const {
        int contacts = 0;
        bool covered = false;
        for (int i = 0; i < L; i++) {
            LayerCursor sc = tables[i].decode[succ[i]];
            if (sc.progress >= 1) covered = true;
            // flush placement of the next vertex against the previous one
            LayerCursor cc = tables[i].decode[cur[i]];
            if (sc.progress == 1 && cc.vertexPos >= 1 && sc.vertexPos == cc.vertexPos + 1) {
                VertexRef a{i + 1, cc.vertexPos}, b{i + 1, sc.vertexPos};
                if (!g.hasEdge(a, b)) return false;  // false adjacency
                contacts++;
            }
        }
        bool stall = !covered;
        if (stall && curStalled) return false;  // never two globally empty columns in a row

        for (int i = 0; i + 1 < L; i++) {
            LayerCursor a = tables[i].decode[succ[i]];
            LayerCursor b = tables[i + 1].decode[succ[i + 1]];
            if (a.progress >= 1 && b.progress >= 1 && (a.progress == 1 || b.progress == 1)) {
                // first column this pair shares
                VertexRef u{i + 1, a.vertexPos}, v{i + 2, b.vertexPos};
                if (!g.hasEdge(u, v)) return false;  // false adjacency
                contacts++;
            }
        }
        stallOut = stall;
        contactsOut = contacts;
        return true;
    }

    template <class Fn>
    void forEachSuccessor(const std::vector<int>& cur, bool curStalled, Fn&& fn) const {
        std::vector<int> opts(2 * L);
        std::vector<int> counts(L);
        for (int i = 0; i < L; i++) {
            int tmp[2], c;
            layerOptions(i, cur[i], tmp, c);
            opts[2 * i] = tmp[0];
            opts[2 * i + 1] = c > 1 ? tmp[1] : 0;
            counts[i] = c;
        }
        std::vector<int> pick(L, 0);
        std::vector<int> succ(L);
        while (true) {
            for (int i = 0; i < L; i++) succ[i] = opts[2 * i + pick[i]];
            bool stall;
            int contacts;
            if (evalCombo(cur, succ, curStalled, stall, contacts))
                fn(succ, stall, contacts, pick);
            int i = 0;
            for (; i < L; i++) {
                if (++pick[i] < counts[i]) break;
                pick[i] = 0;
            }
            if (i == L) break;
        }
    }
};

struct Entry {
    long long value = -1;           // -1 = infeasible
    std::uint32_t choice = 0;       // per-layer option bits of the best successor
    bool choiceStall = false;
};

constexpr long long kInfeasible = -1;

class Solver {
public:
    Machine m;
    SolveConfig cfg;
    bool packed;
    int colRadix;                    // 1 when unbounded
    std::vector<unsigned long long> strides;
    std::unordered_map<std::uint64_t, Entry> memoPacked;
    std::unordered_map<std::string, Entry> memoStr;

    Solver(const LayeredGraph& g, const SolveConfig& c) : m(g), cfg(c) {
        colRadix = cfg.maxColumns ? *cfg.maxColumns + 2 : 1;
        const __int128 limit = static_cast<__int128>(1) << 62;
        __int128 prod = 2 * static_cast<__int128>(colRadix);
        packed = true;
        strides.assign(m.L, 1);
        unsigned long long s = 1;
        for (int i = 0; i < m.L; i++) {
            strides[i] = s;
            if (prod > limit / m.tables[i].radix) {
                packed = false;  // fall back to string-keyed memoization
                break;
            }
            prod *= m.tables[i].radix;
            s *= m.tables[i].radix;
        }
    }

    std::uint64_t packKey(const std::vector<int>& ords, bool stalled, int col) const {
        unsigned long long k = 0;
        for (int i = 0; i < m.L; i++) k += ords[i] * strides[i];
        k = k * 2 + (stalled ? 1 : 0);
        return k * colRadix + (cfg.maxColumns ? std::min(col, *cfg.maxColumns + 1) : 0);
    }

    std::string strKey(const std::vector<int>& ords, bool stalled, int col) const {
        std::string k(2 * m.L + 3, '\0');
        for (int i = 0; i < m.L; i++) {
            k[2 * i] = static_cast<char>(ords[i] & 0xff);
            k[2 * i + 1] = static_cast<char>((ords[i] >> 8) & 0xff);
        }
        k[2 * m.L] = stalled ? 1 : 0;
        int c = cfg.maxColumns ? std::min(col, *cfg.maxColumns + 1) : 0;
        k[2 * m.L + 1] = static_cast<char>(c & 0xff);
        k[2 * m.L + 2] = static_cast<char>((c >> 8) & 0xff);
        return k;
    }

    long long memoSize() const {
        return packed ? static_cast<long long>(memoPacked.size())
                      : static_cast<long long>(memoStr.size());
    }

    Entry* find(const std::vector<int>& ords, bool stalled, int col) {
        if (packed) {
            auto it = memoPacked.find(packKey(ords, stalled, col));
            return it == memoPacked.end() ? nullptr : &it->second;
        }
        auto it = memoStr.find(strKey(ords, stalled, col));
        return it == memoStr.end() ? nullptr : &it->second;
    }

    void store(const std::vector<int>& ords, bool stalled, int col, const Entry& e) {
        if (packed) memoPacked[packKey(ords, stalled, col)] = e;
        else memoStr[strKey(ords, stalled, col)] = e;
        if (memoSize() > cfg.maxStates)
            throw BudgetError("solver state budget exceeded: more than " +
                              std::to_string(cfg.maxStates) + " memoized states");
    }

    long long solve(const std::vector<int>& ords, bool stalled, int col) {
        if (m.allNil(ords)) return 0;
        if (cfg.maxColumns) {
            // a cursor ordinal advances by at most 2 per column, so layers
            // too far behind can never exhaust inside the box
            long long remaining = *cfg.maxColumns + 1 - col;
            for (int i = 0; i < m.L; i++)
                if (m.tables[i].nilOrd - ords[i] > 2 * remaining) return kInfeasible;
        }
        if (Entry* e = find(ords, stalled, col)) return e->value;

        Entry best;
        std::vector<int> bestSucc;
        bool bounded = cfg.maxColumns.has_value();
        m.forEachSuccessor(ords, stalled, [&](const std::vector<int>& succ, bool stall,
                                              int contacts, const std::vector<int>& pick) {
            if (bounded && !stall && col >= *cfg.maxColumns) return;  // box is full
            long long sub = solve(succ, stall, col + 1);
            if (sub == kInfeasible) return;
            long long val = contacts + sub;
            bool better = val > best.value;
            if (!better && val == best.value && best.value >= 0) {
                // deterministic witnesses: prefer the lexicographically
                // smallest successor state, nil ordinals sorting last
                if (succ < bestSucc) better = true;
            }
            if (better) {
                best.value = val;
                best.choiceStall = stall;
                best.choice = 0;
                for (int i = 0; i < m.L; i++)
                    if (pick[i]) best.choice |= 1u << i;
                bestSucc = succ;
            }
        });
        store(ords, stalled, col, best);
        return best.value;
    }
};

} // namespace

std::vector<std::pair<CutState, int>> successors(const LayeredGraph& g, const CutState& s) {
    Machine m(g);
    if (static_cast<int>(s.cursors.size()) != m.L)
        throw std::invalid_argument("cut state layer count mismatch");
    std::vector<int> ords(m.L);
    for (int i = 0; i < m.L; i++) {
        const LayerCursor& c = s.cursors[i];
        if (c.vertexPos == 0) ords[i] = m.tables[i].nilOrd;
        else ords[i] = m.tables[i].pre[c.vertexPos - 1] + c.progress;
    }
    std::vector<std::pair<CutState, int>> out;
    m.forEachSuccessor(ords, s.stalledLast, [&](const std::vector<int>& succ, bool stall,
                                                int contacts, const std::vector<int>&) {
        CutState next;
        next.stalledLast = stall;
        next.cursors.resize(m.L);
        for (int i = 0; i < m.L; i++) next.cursors[i] = m.tables[i].decode[succ[i]];
        out.push_back({std::move(next), contacts});
    });
    return out;
}

long long cutStateBound(const LayeredGraph& g) {
    __int128 bound = 2;
    for (const auto& layer : g.layers) {
        long long perLayer = 1;
        for (const Vertex& v : layer) perLayer += v.width + 1;
        bound *= perLayer;
        if (bound > static_cast<__int128>(LLONG_MAX)) return LLONG_MAX;
    }
    return static_cast<long long>(bound);
}

SolveResult solveExact(const LayeredGraph& g, const SolveConfig& cfg) {
    {
        auto violations = validateInstance(g);
        if (!violations.empty())
            throw std::invalid_argument("invalid instance: " + violations.front().rule + ": " +
                                        violations.front().detail);
    }

    Solver solver(g, cfg);
    Machine& m = solver.m;

    std::vector<int> start(m.L, 0);
    for (int i = 0; i < m.L; i++)
        start[i] = m.tables[i].n > 0 ? 0 : m.tables[i].nilOrd;

    long long value = solver.solve(start, false, 0);
    if (value == kInfeasible)
        throw std::invalid_argument("no valid drawing exists within the column budget");

    SolveResult res;
    res.contacts = value;
    res.witness = Representation::zeros(g, CoordModel::Integer);
    res.stats.visitedStates = solver.memoSize();
    res.stats.stateBound = cutStateBound(g);

    // Walk stored choices, recording each vertex's start column.
    std::vector<int> cur = start;
    bool stalled = false;
    int col = 0;
    while (!m.allNil(cur)) {
        Entry* e = solver.find(cur, stalled, col);
        if (!e || e->value == kInfeasible)
            throw std::logic_error("dp reconstruction lost its path");
        std::vector<int> succ(m.L);
        for (int i = 0; i < m.L; i++) {
            int tmp[2], c;
            m.layerOptions(i, cur[i], tmp, c);
            int p = (e->choice >> i) & 1u;
            succ[i] = tmp[p < c ? p : 0];
        }
        for (int i = 0; i < m.L; i++) {
            LayerCursor sc = m.tables[i].decode[succ[i]];
            if (sc.progress == 1)
                res.witness.set({i + 1, sc.vertexPos}, Rational(col));
        }
        cur = std::move(succ);
        stalled = e->choiceStall;
        col++;
    }
    return res;
}

DecisionResult solveDecision(const LayeredGraph& g, long long k, const SolveConfig& cfg) {
    SolveResult r = solveExact(g, cfg);
    DecisionResult d;
    d.contacts = r.contacts;
    d.satisfied = r.contacts >= k;
    d.stats = r.stats;
    if (d.satisfied) d.witness = std::move(r.witness);
    return d;
}

} // namespace lrc
