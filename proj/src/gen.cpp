#include "lrc/gen.hpp"

namespace lrc {

namespace {

// splitmix64: portable, stable across platforms and library versions
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int percent) { return uniform(1, 100) <= percent; }
};

} // namespace

LayeredGraph randomInstance(const RandomSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    LayeredGraph g;
    for (int i = 1; i <= spec.layers; i++) {
        int n = rng.uniform(1, spec.perLayer);
        for (int j = 0; j < n; j++)
            g.addVertex(i, rng.uniform(1, spec.maxWidth),
                        "v" + std::to_string(i) + "_" + std::to_string(j + 1));
    }

    for (int i = 1; i <= spec.layers; i++)
        for (int j = 1; j + 1 <= g.layerSize(i); j++)
            if (rng.chance(spec.edgePercent)) g.addEdge({i, j}, {i, j + 1});

    // staircase walk keeps vertical edges non-crossing
    for (int i = 1; i + 1 <= spec.layers; i++) {
        int j = 1, k = 1;
        int nj = g.layerSize(i), nk = g.layerSize(i + 1);
        while (j <= nj && k <= nk) {
            if (rng.chance(spec.edgePercent)) g.addEdge({i, j}, {i + 1, k});
            bool stepJ = (j < nj) && (k == nk || rng.chance(50));
            if (stepJ) j++;
            else if (k < nk) k++;
            else break;
        }
    }
    return g;
}

} // namespace lrc
