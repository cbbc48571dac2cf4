#include "lrc/approx.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

namespace {

BlockSolution solveBlock(const LayeredGraph& g, int lo, int hi, const SolveConfig& cfg) {
    BlockSolution b;
    b.loLayer = lo;
    b.hiLayer = hi;
    LayerSlice slice = inducedLayerSlice(g, lo, hi);
    SolveResult r = solveExact(slice.graph, cfg);
    b.contacts = r.contacts;
    b.witness = std::move(r.witness);
    return b;
}

Rational blockMaxExtent(const LayeredGraph& g, const BlockSolution& b) {
    Rational hi(0);
    for (int i = b.loLayer; i <= b.hiLayer; i++) {
        for (int j = 1; j <= g.layerSize(i); j++) {
            Rational right = b.witness.positions[i - b.loLayer][j - 1] +
                             Rational(g.width({i, j}));
            hi = max(hi, right);
        }
    }
    return hi;
}

} // namespace

Representation assembleGroup(const LayeredGraph& g,
                             const std::vector<const BlockSolution*>& blocks) {
    std::vector<bool> covered(g.layerCount() + 1, false);
    for (const BlockSolution* b : blocks)
        for (int i = b->loLayer; i <= b->hiLayer; i++) {
            if (covered[i])
                throw std::invalid_argument("overlapping slice ranges in group assembly");
            covered[i] = true;
        }

    Representation out = Representation::zeros(g, CoordModel::Integer);
    Rational offset(0);

    std::vector<const BlockSolution*> ordered = blocks;
    std::sort(ordered.begin(), ordered.end(),
              [](const BlockSolution* a, const BlockSolution* b) {
                  return a->loLayer < b->loLayer;
              });

    for (const BlockSolution* b : ordered) {
        for (int i = b->loLayer; i <= b->hiLayer; i++)
            for (int j = 1; j <= g.layerSize(i); j++)
                out.set({i, j}, b->witness.positions[i - b->loLayer][j - 1] + offset);
        offset += blockMaxExtent(g, *b) + Rational(1);
    }

    // Leftover layers: one fresh region per layer, unit gaps, zero contacts.
    for (int i = 1; i <= g.layerCount(); i++) {
        if (covered[i] || g.layerSize(i) == 0) continue;
        Rational x = offset;
        for (int j = 1; j <= g.layerSize(i); j++) {
            out.set({i, j}, x);
            x += Rational(g.width({i, j}) + 1);
        }
        offset = x;
    }
    return out;
}

ApproxReport approxHalf(const LayeredGraph& g, const SolveConfig& cfg) {
    {
        auto violations = validateInstance(g);
        if (!violations.empty())
            throw std::invalid_argument("invalid instance: " + violations.front().detail);
    }
    const int L = g.layerCount();
    if (L < 1) throw std::invalid_argument("approxHalf requires at least one layer");

    ApproxReport rep;
    rep.ratioBound = {1, 2};

    if (L == 1) {
        // Degenerate: no vertical slices; a single one-layer exact solve.
        SliceSolution s;
        s.index = 1;
        s.blocks.push_back(solveBlock(g, 1, 1, cfg));
        s.contacts = s.blocks[0].contacts;
        rep.slices.push_back(std::move(s));
        rep.groups = {{1}, {}};
        rep.groupContacts = {rep.slices[0].contacts, 0};
        rep.chosenGroup = 0;
        rep.witness = assembleGroup(g, {&rep.slices[0].blocks[0]});
        rep.totalContacts = rep.slices[0].contacts;
        rep.ratioBound = {1, 1};
        return rep;
    }

    for (int i = 1; i <= L - 1; i++) {
        SliceSolution s;
        s.index = i;
        s.blocks.push_back(solveBlock(g, i, i + 1, cfg));
        s.contacts = s.blocks[0].contacts;
        rep.slices.push_back(std::move(s));
    }

    rep.groups.assign(2, {});
    rep.groupContacts.assign(2, 0);
    for (const SliceSolution& s : rep.slices) {
        int grp = s.index % 2 == 1 ? 0 : 1;  // odd slices first
        rep.groups[grp].push_back(s.index);
        rep.groupContacts[grp] += s.contacts;
    }
    // Members of one group are vertex-disjoint: odd = {1,2},{3,4},...; even = {2,3},{4,5},...
    rep.chosenGroup = rep.groupContacts[0] >= rep.groupContacts[1] ? 0 : 1;

    std::vector<const BlockSolution*> blocks;
    for (int idx : rep.groups[rep.chosenGroup])
        blocks.push_back(&rep.slices[idx - 1].blocks[0]);

    rep.witness = assembleGroup(g, blocks);
    rep.totalContacts = rep.groupContacts[rep.chosenGroup];
    return rep;
}

ApproxReport approxPtas(const LayeredGraph& g, int ell, const SolveConfig& cfg) {
    if (ell < 1) throw std::invalid_argument("ptas parameter must be >= 1");
    {
        auto violations = validateInstance(g);
        if (!violations.empty())
            throw std::invalid_argument("invalid instance: " + violations.front().detail);
    }
    const int L = g.layerCount();

    ApproxReport rep;
    rep.ratioBound = {ell - 1, ell};

    if (ell >= L) {
        // Solvable exactly within the same time bound.
        SolveResult r = solveExact(g, cfg);
        SliceSolution s;
        s.index = 1;
        s.blocks.push_back(BlockSolution{1, L, r.contacts, r.witness});
        s.contacts = r.contacts;
        rep.slices.push_back(std::move(s));
        rep.groups = {{1}};
        rep.groupContacts = {r.contacts};
        rep.chosenGroup = 0;
        rep.totalContacts = r.contacts;
        rep.witness = std::move(r.witness);
        rep.ratioBound = {1, 1};
        return rep;
    }

    // Pad with empty dummy layers on top until the count divides evenly.
    LayeredGraph padded = g;
    int Lp = L;
    while (Lp % ell != 0) {
        padded.layers.emplace_back();
        Lp++;
    }

    // Cyclic slices A_i over layers i..i+ell-1 (layer 0 read as layer Lp);
    // a wrapped slice is solved as its contiguous blocks.
    for (int i = 1; i <= Lp; i++) {
        SliceSolution s;
        s.index = i;
        int hi = i + ell - 1;
        if (hi <= Lp) {
            s.blocks.push_back(solveBlock(padded, i, hi, cfg));
        } else {
            s.blocks.push_back(solveBlock(padded, i, Lp, cfg));
            s.blocks.push_back(solveBlock(padded, 1, hi - Lp, cfg));
        }
        for (const BlockSolution& b : s.blocks) s.contacts += b.contacts;
        rep.slices.push_back(std::move(s));
    }

    rep.groups.assign(ell, {});
    rep.groupContacts.assign(ell, 0);
    for (int j = 1; j <= ell; j++) {
        for (int i = j; i <= Lp; i += ell) {
            rep.groups[j - 1].push_back(i);
            rep.groupContacts[j - 1] += rep.slices[i - 1].contacts;
        }
    }
    rep.chosenGroup = 0;
    for (int j = 1; j < ell; j++)
        if (rep.groupContacts[j] > rep.groupContacts[rep.chosenGroup]) rep.chosenGroup = j;

    std::vector<const BlockSolution*> blocks;
    for (int idx : rep.groups[rep.chosenGroup])
        for (const BlockSolution& b : rep.slices[idx - 1].blocks) blocks.push_back(&b);

    Representation assembled = assembleGroup(padded, blocks);
    // Dummy layers hold no vertices, so the assembled positions restrict to g.
    rep.witness = Representation::zeros(g, CoordModel::Integer);
    for (int i = 1; i <= L; i++)
        rep.witness.positions[i - 1] = assembled.positions[i - 1];
    rep.totalContacts = rep.groupContacts[rep.chosenGroup];
    return rep;
}

} // namespace lrc
