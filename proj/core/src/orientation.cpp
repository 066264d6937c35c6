#include "oriray/orientation.hpp"

#include <stdexcept>

#include "oriray/errors.hpp"

namespace oriray {

bool Orientation::arc_from_to(int u, int v) const {
    int idx = host.edge_index(u, v);
    if (idx < 0) throw std::invalid_argument("orientation: no such edge");
    auto [a, b] = arc(idx);
    return a == u && b == v;
}

Digraph Orientation::to_digraph() const {
    Digraph d(host.vertex_count());
    int m = host.edge_count();
    for (int i = 0; i < m; ++i) {
        auto [u, v] = arc(i);
        d.add_arc(u, v);
    }
    return d;
}

Orientation random_orientation(const Graph& g, SplitMix64& rng) {
    int m = g.edge_count();
    return Orientation(g, random_bits(m, rng));
}

Orientation orientation_from_counter(const Graph& g, uint64_t counter) {
    int m = g.edge_count();
    Orientation o((Graph(g)));
    for (int i = 0; i < m; ++i) o.set_bit(i, (counter >> (m - 1 - i)) & 1u);
    return o;
}

uint64_t orientation_counter(const Orientation& o) {
    int m = o.host.edge_count();
    uint64_t c = 0;
    for (int i = 0; i < m; ++i) c = (c << 1) | (o.bit(i) ? 1u : 0u);
    return c;
}

uint64_t enumerate_orientations(const Graph& g,
                                const std::function<bool(const Orientation&)>& visit,
                                std::optional<OrientationPrefix> prefix,
                                int cap) {
    int m = g.edge_count();
    int fixed = prefix ? prefix->length : 0;
    if (fixed < 0 || fixed > m) throw std::invalid_argument("enumerate_orientations: bad prefix length");
    int free = m - fixed;
    if (free > cap)
        throw CapExceeded("enumerate_orientations: " + std::to_string(free) + " free edges exceeds cap " + std::to_string(cap));

    Orientation o((Graph(g)));
    for (int i = 0; i < fixed; ++i) o.set_bit(i, (prefix->bits >> (fixed - 1 - i)) & 1u);

    uint64_t total = free >= 64 ? 0 : (uint64_t{1} << free); // free==64 unreachable under cap
    uint64_t visited = 0;
    for (uint64_t c = 0; c < total; ++c) {
        // Suffix bits in lexicographic order: bit of edge `fixed` is the most
        // significant bit of c.
        for (int i = 0; i < free; ++i) o.set_bit(fixed + i, (c >> (free - 1 - i)) & 1u);
        ++visited;
        if (!visit(o)) break;
    }
    return visited;
}

std::vector<Orientation> collect_orientations(const Graph& g,
                                              std::optional<OrientationPrefix> prefix,
                                              int cap) {
    std::vector<Orientation> out;
    enumerate_orientations(g, [&](const Orientation& o) {
        out.push_back(o);
        return true;
    }, prefix, cap);
    return out;
}

} // namespace oriray
