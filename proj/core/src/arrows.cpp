#include "oriray/arrows.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "oriray/chromatic.hpp"
#include "oriray/errors.hpp"

namespace oriray {
namespace {

std::vector<Digraph> sort_family(std::vector<Digraph> family) {
    // Larger patterns first (they fail faster); ties by canonical form.
    std::stable_sort(family.begin(), family.end(), [](const Digraph& a, const Digraph& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() > b.vertex_count();
        if (a.vertex_count() <= kCanonicalCap)
            return canonical_form(a) < canonical_form(b);
        return a.arcs() < b.arcs();
    });
    return family;
}

// Scans counters [begin, end); returns the first counter whose orientation
// misses some pattern, or UINT64_MAX. May stop early once `cutoff` holds a
// smaller counter.
uint64_t scan_range(const Graph& g, const std::vector<PreparedPattern>& pats,
                    const DistanceMatrix& host_dist, Variant variant,
                    uint64_t begin, uint64_t end, const std::atomic<uint64_t>* cutoff) {
    int n = g.vertex_count(), m = g.edge_count();
    std::vector<Bits> out(n, Bits(n));
    for (uint64_t c = begin; c < end; ++c) {
        if (cutoff && (c & 1023) == 0 && cutoff->load(std::memory_order_relaxed) < c)
            return UINT64_MAX;
        for (int v = 0; v < n; ++v) out[v] = Bits(n);
        for (int i = 0; i < m; ++i) {
            auto [u, v] = g.edges()[i];
            if ((c >> (m - 1 - i)) & 1u)
                out[v].set(u);
            else
                out[u].set(v);
        }
        for (const auto& pp : pats) {
            if (!find_embedding_map(pp, n, out, host_dist, variant)) return c;
        }
    }
    return UINT64_MAX;
}

} // namespace

ArrowVerdict arrow_check(const Graph& g, const std::vector<Digraph>& family, Variant variant,
                         const ArrowOptions& opt) {
    int m = g.edge_count();
    if (m > opt.enum_cap)
        throw CapExceeded("arrow_check: " + std::to_string(m) + " edges exceeds cap " + std::to_string(opt.enum_cap));

    std::vector<PreparedPattern> pats;
    for (const Digraph& h : sort_family(family)) pats.push_back(prepare_pattern(h));
    DistanceMatrix host_dist = distance_matrix(g);

    uint64_t total = uint64_t{1} << m;
    uint64_t first_fail = UINT64_MAX;

    int threads = std::max(1, opt.threads);
    if (threads == 1 || total < 1024) {
        first_fail = scan_range(g, pats, host_dist, variant, 0, total, nullptr);
    } else {
        std::atomic<uint64_t> best(UINT64_MAX);
        uint64_t chunk = (total + threads - 1) / threads;
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            uint64_t b = uint64_t(t) * chunk, e = std::min(total, b + chunk);
            if (b >= e) continue;
            pool.emplace_back([&, b, e]() {
                uint64_t r = scan_range(g, pats, host_dist, variant, b, e, &best);
                if (r != UINT64_MAX) {
                    uint64_t cur = best.load();
                    while (r < cur && !best.compare_exchange_weak(cur, r)) {}
                }
            });
        }
        for (auto& th : pool) th.join();
        first_fail = best.load();
    }

    if (first_fail == UINT64_MAX) return {true, total, std::nullopt};
    return {false, first_fail + 1, orientation_from_counter(g, first_fail)};
}

int ddiam(const Graph& g, FamilyKind kind, const ArrowOptions& opt) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    int bound = std::min(chromatic_number(g, std::max(n, kChromaticCap)),
                         max_component_diameter(g) + 1);
    int best = 0;
    for (int k = 1; k <= bound; ++k) {
        std::vector<Digraph> family;
        if (kind == FamilyKind::paths)
            family.push_back(directed_path(k));
        else
            family = enumerate_oriented_trees(k);
        if (!arrow_check(g, family, Variant::isometric, opt).holds) break;
        best = k;
    }
    return best;
}

IrSearchResult ir_search(const std::vector<Digraph>& family, int max_n, const ArrowOptions& opt) {
    if (max_n > kAtlasCap)
        throw CapExceeded("ir_search: max_n=" + std::to_string(max_n) + " exceeds atlas cap " + std::to_string(kAtlasCap));
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            if (arrow_check(g, family, Variant::isometric, opt).holds)
                return {true, n, g};
        }
    }
    return {false, 0, std::nullopt};
}

int longest_directed_path(const Digraph& d, int cap) {
    int n = d.vertex_count();
    if (n > cap)
        throw CapExceeded("longest_directed_path: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
    if (n == 0) return 0;
    std::vector<uint32_t> outmask(n, 0);
    for (auto [u, v] : d.arcs()) outmask[u] |= uint32_t{1} << v;
    // dp[mask] = set of possible final vertices of a simple directed path
    // visiting exactly `mask`.
    std::vector<uint32_t> dp(size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) dp[uint32_t{1} << v] = uint32_t{1} << v;
    int best = 1;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        uint32_t ends = dp[mask];
        if (!ends) continue;
        best = std::max(best, std::popcount(mask) > 0 ? std::popcount(mask) : 1);
        uint32_t rest = ends;
        while (rest) {
            int last = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t nexts = outmask[last] & ~mask;
            while (nexts) {
                int nx = std::countr_zero(nexts);
                nexts &= nexts - 1;
                dp[mask | (uint32_t{1} << nx)] |= uint32_t{1} << nx;
            }
        }
    }
    return best;
}

GhrvResult ghrv_check(const Graph& g, const ArrowOptions& opt) {
    int n = g.vertex_count();
    if (n == 0) return {0, 0};
    int chi = chromatic_number(g, std::max(n, kChromaticCap));
    int min_longest = n + 1;
    enumerate_orientations(g, [&](const Orientation& o) {
        min_longest = std::min(min_longest, longest_directed_path(o.to_digraph(), std::max(n, kLongestPathCap)));
        return true;
    }, std::nullopt, opt.enum_cap);
    return {chi, min_longest};
}

} // namespace oriray
