#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oriray/graph.hpp"
#include "oriray/rng.hpp"

namespace oriray {

inline constexpr int kOrientationEnumCap = 40;

/// A direction flag for every edge of a host graph, indexed by the host's
/// sorted edge list. Flag 0 orients edge {u,v} (u<v) as u -> v.
struct Orientation {
    Graph host;
    std::vector<uint64_t> bits; // bit i directs edges()[i]

    Orientation() = default;
    explicit Orientation(Graph g)
        : host(std::move(g)), bits((host.edge_count() + 63) / 64, 0) {}
    Orientation(Graph g, std::vector<uint64_t> b) : host(std::move(g)), bits(std::move(b)) {}

    bool bit(int i) const { return (bits[i >> 6] >> (i & 63)) & 1u; }
    void set_bit(int i, bool v) {
        if (v)
            bits[i >> 6] |= uint64_t{1} << (i & 63);
        else
            bits[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    /// The arc carried by edge index i.
    std::pair<int, int> arc(int i) const {
        auto [u, v] = host.edges()[i];
        return bit(i) ? std::pair{v, u} : std::pair{u, v};
    }

    /// Direction of the edge {u,v}; requires the edge to exist.
    bool arc_from_to(int u, int v) const;

    Digraph to_digraph() const;
};

Orientation random_orientation(const Graph& g, SplitMix64& rng);

/// Fixes the first `length` direction bits; `bits` is read MSB-first, i.e.
/// edge j gets flag (bits >> (length-1-j)) & 1. Enumerating prefix values
/// 0..2^length-1 in integer order and concatenating the streams reproduces
/// the unpartitioned stream in order.
struct OrientationPrefix {
    int length = 0;
    uint64_t bits = 0;
};

/// Orientations of g in lexicographic bit order (edge-0 flag most
/// significant). The visitor may return false to stop early. Returns the
/// number of orientations visited. Throws CapExceeded when the free edge
/// count exceeds `cap`.
uint64_t enumerate_orientations(const Graph& g,
                                const std::function<bool(const Orientation&)>& visit,
                                std::optional<OrientationPrefix> prefix = std::nullopt,
                                int cap = kOrientationEnumCap);

/// Orientation whose bit string is `counter` read MSB-first over m edges;
/// counter 0 is the all-low-to-high orientation.
Orientation orientation_from_counter(const Graph& g, uint64_t counter);
uint64_t orientation_counter(const Orientation& o);

/// Test helper: materializes the stream.
std::vector<Orientation> collect_orientations(const Graph& g,
                                              std::optional<OrientationPrefix> prefix = std::nullopt,
                                              int cap = kOrientationEnumCap);

} // namespace oriray
