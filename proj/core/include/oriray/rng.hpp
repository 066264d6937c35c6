#pragma once

#include <cstdint>
#include <vector>

#include "oriray/graph.hpp"

namespace oriray {

/// SplitMix64. Self-contained so that seeded runs are byte-identical across
/// platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) via 128-bit multiply (no modulo bias worth
    /// worrying about at our bounds; deterministic everywhere).
    uint64_t below(uint64_t bound) { return uint64_t((__uint128_t(next()) * bound) >> 64); }

    /// Uniform in [0, 1).
    double unit() { return double(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    uint64_t state_;
};

inline Graph random_graph(int n, double p, SplitMix64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

inline Graph random_connected_graph(int n, double p, SplitMix64& rng) {
    for (;;) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
}

inline std::vector<uint64_t> random_bits(int count, SplitMix64& rng) {
    std::vector<uint64_t> bits((count + 63) / 64, 0);
    for (auto& w : bits) w = rng.next();
    if (count % 64) bits.back() &= (~uint64_t{0}) >> (64 - count % 64);
    return bits;
}

} // namespace oriray
