#include "lrc/oracle.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

namespace {

struct LayerTuples {
    int n = 0;
    std::vector<int> widths;
    std::vector<int> flat;          // count * n positions, lexicographic order
    std::vector<long long> intra;   // horizontal contacts per tuple, -1 = invalid

    long long count() const {
        return n == 0 ? 1 : static_cast<long long>(flat.size()) / n;
    }
    const int* tuple(long long t) const { return flat.data() + t * n; }
};

// Number of monotone placements of the layer in [0, budget]:
// slack distributed over n+1 gaps.
long long tupleCountFormula(long long slack, int n, long long cap) {
    if (slack < 0) return 0;
    if (n == 0) return 1;
    __int128 num = 1;
    for (int i = 1; i <= n; i++) {
        num = num * (slack + i) / i;
        if (num > cap * 4) return LLONG_MAX / 2;
    }
    return static_cast<long long>(num);
}

void enumerateLayer(const LayeredGraph& g, int layer, int budget, LayerTuples& out) {
    const auto& cells = g.layers[layer - 1];
    out.n = static_cast<int>(cells.size());
    out.widths.resize(out.n);
    for (int j = 0; j < out.n; j++) out.widths[j] = cells[j].width;
    if (out.n == 0) {
        out.intra.push_back(0);
        return;
    }

    std::vector<int> suffix(out.n + 1, 0);
    for (int j = out.n - 1; j >= 0; j--) suffix[j] = suffix[j + 1] + out.widths[j];

    std::vector<int> xs(out.n);
    auto rec = [&](auto&& self, int j, int minX, long long contacts, bool valid) -> void {
        if (j == out.n) {
            for (int x : xs) out.flat.push_back(x);
            out.intra.push_back(valid ? contacts : -1);
            return;
        }
        for (int x = minX; x + suffix[j] <= budget; x++) {
            xs[j] = x;
            long long c = contacts;
            bool v = valid;
            if (j > 0 && x == xs[j - 1] + out.widths[j - 1]) {
                if (g.hasEdge({layer, j}, {layer, j + 1})) c++;
                else v = false;  // flush pair without an edge
            }
            self(self, j + 1, x + out.widths[j], c, v);
        }
    };
    rec(rec, 0, 0, 0, true);
}

// Vertical contacts between two placed layers, or -1 on a false adjacency.
long long pairContacts(const LayeredGraph& g, int lo, const LayerTuples& a, const int* pa,
                       const LayerTuples& b, const int* pb) {
    long long contacts = 0;
    int i = 0, j = 0;
    while (i < a.n && j < b.n) {
        int aLo = pa[i], aHi = pa[i] + a.widths[i];
        int bLo = pb[j], bHi = pb[j] + b.widths[j];
        int overlap = std::min(aHi, bHi) - std::max(aLo, bLo);
        if (overlap > 0) {
            if (g.hasEdge({lo, i + 1}, {lo + 1, j + 1})) contacts++;
            else return -1;
        }
        if (aHi < bHi) i++;
        else if (bHi < aHi) j++;
        else { i++; j++; }
    }
    return contacts;
}

} // namespace

OracleResult bruteForce(const LayeredGraph& g, const OracleConfig& cfg) {
    const int L = g.layerCount();
    int budget = cfg.widthBudget
                     ? *cfg.widthBudget
                     : static_cast<int>(std::min<long long>(2 * g.totalWidth() + 1, INT_MAX));

    OracleResult res;
    res.widthBudget = budget;
    res.witness = Representation::zeros(g, CoordModel::Integer);
    if (L == 0 || g.vertexCount() == 0) return res;

    // Refuse before enumerating if the work estimate exceeds the cap.
    std::vector<long long> counts(L);
    __int128 estimate = 0;
    for (int i = 1; i <= L; i++) {
        long long s = budget;
        for (const Vertex& v : g.layers[i - 1]) s -= v.width;
        counts[i - 1] = tupleCountFormula(s, g.layerSize(i), cfg.enumerationCap);
        estimate += counts[i - 1];
    }
    for (int i = 0; i + 1 < L; i++) estimate += static_cast<__int128>(counts[i]) * counts[i + 1];
    if (estimate > cfg.enumerationCap)
        throw BudgetError("oracle enumeration estimate exceeds cap of " +
                          std::to_string(cfg.enumerationCap));

    std::vector<LayerTuples> layers(L);
    for (int i = 1; i <= L; i++) {
        enumerateLayer(g, i, budget, layers[i - 1]);
        if (layers[i - 1].count() == 0)
            throw std::invalid_argument("width budget smaller than layer " + std::to_string(i));
    }

    // Fold right to left: best[t] = max contacts of layers i.. given tuple t on layer i.
    std::vector<std::vector<long long>> best(L);
    best[L - 1] = layers[L - 1].intra;
    for (int i = L - 2; i >= 0; i--) {
        const LayerTuples& cur = layers[i];
        const LayerTuples& nxt = layers[i + 1];
        best[i].assign(cur.count(), -1);
        for (long long t = 0; t < cur.count(); t++) {
            if (cur.intra[t] < 0) continue;
            long long b = -1;
            for (long long u = 0; u < nxt.count(); u++) {
                if (best[i + 1][u] < 0) continue;
                long long pc = pairContacts(g, i + 1, cur, cur.tuple(t), nxt, nxt.tuple(u));
                if (pc < 0) continue;
                b = std::max(b, pc + best[i + 1][u]);
            }
            if (b >= 0) best[i][t] = cur.intra[t] + b;
        }
    }

    long long opt = -1;
    for (long long v : best[0]) opt = std::max(opt, v);
    if (opt < 0) throw std::invalid_argument("no valid placement exists within the width budget");
    res.contacts = opt;

    // Lexicographically smallest witness: tuples are enumerated in lex order,
    // so the first consistent choice per layer is the lex-min overall.
    long long prevTuple = -1;
    long long remaining = opt;
    for (int i = 0; i < L; i++) {
        const LayerTuples& cur = layers[i];
        for (long long t = 0; t < cur.count(); t++) {
            if (best[i][t] < 0) continue;
            long long link = 0;
            if (i > 0) {
                link = pairContacts(g, i, layers[i - 1], layers[i - 1].tuple(prevTuple), cur,
                                    cur.tuple(t));
                if (link < 0) continue;
            }
            if (link + best[i][t] == remaining) {
                for (int j = 0; j < cur.n; j++)
                    res.witness.set({i + 1, j + 1}, Rational(cur.tuple(t)[j]));
                remaining -= link + cur.intra[t];
                prevTuple = t;
                break;
            }
        }
    }

    ContactReport check = evaluate(g, res.witness);
    if (!check.valid || check.totalContacts != opt)
        throw std::logic_error("oracle witness failed re-evaluation");
    return res;
}

} // namespace lrc
