#include "oriray/constructions.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "oriray/arrows.hpp"
#include "oriray/chromatic.hpp"
#include "oriray/errors.hpp"

namespace oriray {

TowerFamily tower_family(int n, int materialize_cap) {
    if (n < 1) throw std::invalid_argument("tower_family: need n >= 1");
    if (materialize_cap > 4)
        throw CapExceeded("tower_family: cannot materialize levels beyond 4 (level 5 has 1806*1807 vertices)");
    TowerFamily fam;
    fam.sizes.push_back(BigUint(1));
    for (int k = 2; k <= n; ++k) {
        const BigUint& a = fam.sizes.back();
        fam.sizes.push_back(a.times(a.plus(1)));
    }
    int levels = std::min(n, materialize_cap);
    if (levels >= 1) fam.levels.push_back(Graph(1));
    for (int k = 2; k <= levels; ++k) {
        uint64_t prev_size = fam.sizes[k - 2].as_u64();
        fam.levels.push_back(rectangular_product(fam.levels.back(), complete_graph(int(prev_size) + 1)));
    }
    return fam;
}

BfsOrientationResult bfs_parity_orientation(const Graph& g, int root) {
    int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("bfs_parity_orientation: root out of range");
    if (!is_connected(g)) throw std::invalid_argument("bfs_parity_orientation: graph is disconnected");
    std::vector<int> norm = bfs_distances(g, root);
    Orientation o((Graph(g)));
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i]; // u < v
        int nu = norm[u], nv = norm[v];
        if (nu == nv) {
            o.set_bit(int(i), false); // same layer: low index -> high index
            continue;
        }
        int lo = nu < nv ? u : v; // endpoint one layer closer to the root
        bool arc_up = norm[lo] % 2 == 0; // even layers shoot upward, odd absorb
        bool from_u = (lo == u) ? arc_up : !arc_up;
        o.set_bit(int(i), !from_u);
    }
    return {std::move(o), std::move(norm)};
}

int norm_span_check(const BfsOrientationResult& r) {
    const Graph& g = r.orientation.host;
    int n = g.vertex_count();
    std::vector<Bits> out(n, Bits(n));
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = r.orientation.arc(i);
        out[a].set(b);
    }
    int span = 0;
    std::vector<int> stack;
    std::vector<bool> seen(n);
    for (int s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), false);
        seen[s] = true;
        stack.assign(1, s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[u].for_each([&](int v) {
                if (!seen[v]) {
                    seen[v] = true;
                    span = std::max(span, std::abs(r.norms[s] - r.norms[v]));
                    stack.push_back(v);
                }
            });
        }
    }
    return span;
}

namespace {

// Backtracking transitive-orientation search with closure propagation.
struct TransSearch {
    const Graph& g;
    int n;
    std::vector<int8_t> dir; // dir[u*n+v]: 1 arc u->v, -1 arc v->u (seen from u), 0 unset
    std::vector<std::pair<int, int>> trail;

    explicit TransSearch(const Graph& gr) : g(gr), n(gr.vertex_count()), dir(size_t(n) * n, 0) {}

    int get(int u, int v) const { return dir[size_t(u) * n + v]; }

    bool assign(int u, int v) { // orient edge {u,v} as u -> v, propagate closure
        if (get(u, v) == 1) return true;
        if (get(u, v) == -1) return false;
        dir[size_t(u) * n + v] = 1;
        dir[size_t(v) * n + u] = -1;
        trail.push_back({u, v});
        size_t head = trail.size() - 1;
        while (head < trail.size()) {
            auto [x, y] = trail[head++];
            // (x,y) with (y,z) forces (x,z); (w,x) with (x,y) forces (w,y).
            for (int z = 0; z < n; ++z) {
                if (get(y, z) == 1 && z != x) {
                    if (!g.has_edge(x, z)) return false;
                    if (get(x, z) == -1) return false;
                    if (get(x, z) == 0) {
                        dir[size_t(x) * n + z] = 1;
                        dir[size_t(z) * n + x] = -1;
                        trail.push_back({x, z});
                    }
                }
                if (get(z, x) == 1 && z != y) {
                    if (!g.has_edge(z, y)) return false;
                    if (get(z, y) == -1) return false;
                    if (get(z, y) == 0) {
                        dir[size_t(z) * n + y] = 1;
                        dir[size_t(y) * n + z] = -1;
                        trail.push_back({z, y});
                    }
                }
            }
        }
        return true;
    }

    void rollback(size_t mark) {
        while (trail.size() > mark) {
            auto [u, v] = trail.back();
            trail.pop_back();
            dir[size_t(u) * n + v] = 0;
            dir[size_t(v) * n + u] = 0;
        }
    }

    bool solve(size_t edge_idx) {
        const auto& edges = g.edges();
        while (edge_idx < edges.size() && get(edges[edge_idx].first, edges[edge_idx].second) != 0)
            ++edge_idx;
        if (edge_idx == edges.size()) return true;
        auto [u, v] = edges[edge_idx];
        for (int attempt = 0; attempt < 2; ++attempt) {
            size_t mark = trail.size();
            int a = attempt == 0 ? u : v, b = attempt == 0 ? v : u;
            if (assign(a, b) && solve(edge_idx + 1)) return true;
            rollback(mark);
        }
        return false;
    }
};

} // namespace

std::optional<Orientation> transitive_orientation(const Graph& g, int edge_cap) {
    if (g.edge_count() > edge_cap)
        throw CapExceeded("transitive_orientation: " + std::to_string(g.edge_count()) +
                          " edges exceeds cap " + std::to_string(edge_cap));
    TransSearch search(g);
    if (!search.solve(0)) return std::nullopt;
    Orientation o((Graph(g)));
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        o.set_bit(int(i), search.get(edges[i].first, edges[i].second) != 1);
    return o;
}

namespace {

// Kosaraju strongly connected components on a small digraph given as
// adjacency lists.
std::vector<int> scc_ids(const std::vector<std::vector<int>>& adj) {
    int n = int(adj.size());
    std::vector<std::vector<int>> radj(n);
    for (int u = 0; u < n; ++u)
        for (int v : adj[u]) radj[v].push_back(u);
    std::vector<int> order;
    std::vector<bool> seen(n, false);
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        stack.push_back({s, 0});
        seen[s] = true;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i < adj[u].size()) {
                int v = adj[u][i++];
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back({v, 0});
                }
            } else {
                order.push_back(u);
                stack.pop_back();
            }
        }
    }
    std::vector<int> comp(n, -1);
    int cid = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != -1) continue;
        std::vector<int> dfs = {*it};
        comp[*it] = cid;
        while (!dfs.empty()) {
            int u = dfs.back();
            dfs.pop_back();
            for (int v : radj[u])
                if (comp[v] == -1) {
                    comp[v] = cid;
                    dfs.push_back(v);
                }
        }
        ++cid;
    }
    return comp;
}

} // namespace

bool odd_cycle_chord_check(const Graph& g, int vertex_cap) {
    int n = g.vertex_count();
    if (n > vertex_cap)
        throw CapExceeded("odd_cycle_chord_check: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(vertex_cap));
    // Nodes are ordered arcs. A step (a,b) -> (b,c) is legal when {a,c} is
    // not an edge (in particular c may equal a: the walk sequences allow
    // repeated vertices, and {v_i, v_{i+2}} carries no chord requirement
    // when the two coincide). The graph fails the check iff some legal
    // closed walk has odd length, iff some strongly connected component of
    // the transition digraph carries an odd cycle.
    int m = g.edge_count();
    int nodes = 2 * m;
    auto node_id = [&](int a, int b) { // arc a -> b over edge {a,b}
        int idx = g.edge_index(a, b);
        return 2 * idx + (a < b ? 0 : 1);
    };
    std::vector<std::vector<int>> adj(nodes);
    std::vector<std::pair<int, int>> arc_of(nodes);
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edges()[i];
        arc_of[2 * i] = {u, v};
        arc_of[2 * i + 1] = {v, u};
    }
    for (int id = 0; id < nodes; ++id) {
        auto [a, b] = arc_of[id];
        g.neighbors(b).for_each([&](int c) {
            if (!g.has_edge(a, c)) adj[id].push_back(node_id(b, c));
        });
    }
    std::vector<int> comp = scc_ids(adj);
    // Odd cycle inside an SCC <=> no parity-consistent 2-coloring.
    int ncomp = 0;
    for (int c : comp) ncomp = std::max(ncomp, c + 1);
    std::vector<int> color(nodes, -1);
    for (int s = 0; s < nodes; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue = {s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : adj[u]) {
                if (comp[v] != comp[u]) continue;
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false; // odd chordless closed walk exists
                }
            }
        }
    }
    return true;
}

bool is_weak_homomorphism(const WeakHomomorphism& f) {
    if (int(f.map.size()) != f.source.vertex_count()) return false;
    for (int v : f.map)
        if (v < 0 || v >= f.target.vertex_count()) return false;
    for (auto [u, v] : f.source.edges()) {
        if (f.map[u] != f.map[v] && !f.target.has_edge(f.map[u], f.map[v])) return false;
    }
    return true;
}

Fiber fiber_of(const WeakHomomorphism& f, int y) {
    Fiber fib;
    std::vector<int> local(f.source.vertex_count(), -1);
    for (int v = 0; v < f.source.vertex_count(); ++v)
        if (f.map[v] == y) {
            local[v] = int(fib.vertices.size());
            fib.vertices.push_back(v);
        }
    fib.graph = Graph(int(fib.vertices.size()));
    for (auto [u, v] : f.source.edges())
        if (f.map[u] == y && f.map[v] == y) fib.graph.add_edge(local[u], local[v]);
    return fib;
}

Orientation composite_orientation(const WeakHomomorphism& f,
                                  const std::vector<int>& coloring,
                                  const std::vector<Orientation>& fiber_orientations) {
    if (!is_weak_homomorphism(f)) throw std::invalid_argument("composite_orientation: not a weak homomorphism");
    if (int(coloring.size()) != f.target.vertex_count())
        throw std::invalid_argument("composite_orientation: coloring size mismatch");
    for (auto [a, b] : f.target.edges())
        if (coloring[a] == coloring[b])
            throw std::invalid_argument("composite_orientation: coloring not proper on target edge {" +
                                        std::to_string(a) + "," + std::to_string(b) + "}");
    if (int(fiber_orientations.size()) != f.target.vertex_count())
        throw std::invalid_argument("composite_orientation: need one orientation per fiber");

    std::vector<Fiber> fibers;
    std::vector<int> local(f.source.vertex_count(), -1);
    for (int y = 0; y < f.target.vertex_count(); ++y) {
        fibers.push_back(fiber_of(f, y));
        if (!(fiber_orientations[y].host == fibers[y].graph))
            throw std::invalid_argument("composite_orientation: fiber orientation " + std::to_string(y) +
                                        " does not match the fiber graph");
        for (size_t i = 0; i < fibers[y].vertices.size(); ++i) local[fibers[y].vertices[i]] = int(i);
    }

    Orientation o((Graph(f.source)));
    const auto& edges = f.source.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i]; // u < v
        int yu = f.map[u], yv = f.map[v];
        bool from_u;
        if (yu == yv) {
            int idx = fibers[yu].graph.edge_index(local[u], local[v]);
            auto [a, b] = fiber_orientations[yu].arc(idx);
            (void)b;
            from_u = a == local[u];
        } else {
            from_u = coloring[yu] < coloring[yv];
        }
        o.set_bit(int(i), !from_u);
    }
    return o;
}

WeakHomBound weak_hom_bound_check(const WeakHomomorphism& f) {
    if (!is_weak_homomorphism(f)) throw std::invalid_argument("weak_hom_bound_check: not a weak homomorphism");
    int tn = f.target.vertex_count();
    if (tn > 20) throw CapExceeded("weak_hom_bound_check: target too large for subset enumeration");
    int lhs = ddiam(f.source, FamilyKind::paths);
    std::vector<int> fiber_dd(tn, 0);
    for (int y = 0; y < tn; ++y) {
        Fiber fib = fiber_of(f, y);
        fiber_dd[y] = fib.graph.vertex_count() == 0 ? 0 : ddiam(fib.graph, FamilyKind::paths);
    }
    int chi = tn == 0 ? 0 : chromatic_number(f.target, std::max(tn, kChromaticCap));
    int rhs = 0;
    for (uint32_t sel = 0; sel < (uint32_t{1} << tn); ++sel) {
        if (std::popcount(sel) > chi) continue;
        int sum = 0;
        for (int y = 0; y < tn; ++y)
            if ((sel >> y) & 1) sum += fiber_dd[y];
        rhs = std::max(rhs, sum);
    }
    return {lhs, rhs};
}

SubEmbedder exhaustive_sub_embedder() {
    return [](const Orientation& copy, const Digraph& tree) -> std::optional<std::vector<int>> {
        auto cert = find_embedding(tree, copy, Variant::isometric);
        if (!cert) return std::nullopt;
        return cert->map;
    };
}

Orientation extract_copy_orientation(const Graph& g, int copies, const Orientation& host, int u) {
    Orientation o((Graph(g)));
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        int idx = host.host.edge_index(a * copies + u, b * copies + u);
        if (idx < 0) throw std::invalid_argument("extract_copy_orientation: host is not the expected product");
        o.set_bit(int(i), host.bit(idx)); // low/high endpoints agree between g and the product
    }
    return o;
}

EmbeddingCertificate pigeonhole_embed(const Graph& g, int copies, const SubEmbedder& sub,
                                      const Orientation& host, const Digraph& tree) {
    int gn = g.vertex_count();
    if (copies < gn + 1)
        throw std::invalid_argument("pigeonhole_embed: need at least |g|+1 copies");
    {
        Graph expected = rectangular_product(g, complete_graph(copies));
        if (!(host.host == expected))
            throw std::invalid_argument("pigeonhole_embed: host is not g x K_copies");
    }
    int tn = tree.vertex_count();
    if (tn < 2) throw std::invalid_argument("pigeonhole_embed: tree needs at least 2 vertices");
    Graph tree_shadow = tree.shadow();

    // Lowest-index pendant vertex and its unique neighbor.
    int pendant = -1;
    for (int v = 0; v < tn && pendant < 0; ++v)
        if (tree_shadow.degree(v) == 1) pendant = v;
    if (pendant < 0) throw std::invalid_argument("pigeonhole_embed: pattern has no pendant vertex (not a tree)");
    int anchor = tree_shadow.neighbors(pendant).to_vector()[0];
    bool arc_to_pendant = tree.has_arc(anchor, pendant);

    // Subtree with the pendant removed, relabeled to 0..tn-2.
    auto local = [&](int v) { return v < pendant ? v : v - 1; };
    Digraph subtree(tn - 1);
    for (auto [a, b] : tree.arcs())
        if (a != pendant && b != pendant) subtree.add_arc(local(a), local(b));

    // One sub-embedding per copy; the anchor's g-coordinate drives the
    // pigeonhole.
    std::vector<std::vector<int>> maps(copies);
    std::vector<int> anchor_at(copies);
    for (int u = 0; u < copies; ++u) {
        auto m = sub(extract_copy_orientation(g, copies, host, u), subtree);
        if (!m) throw std::runtime_error("pigeonhole_embed: sub-embedder failed on copy " + std::to_string(u));
        maps[u] = *m;
        anchor_at[u] = maps[u][local(anchor)];
    }
    int ca = -1, cb = -1;
    for (int a = 0; a < copies && ca < 0; ++a)
        for (int b = a + 1; b < copies; ++b)
            if (anchor_at[a] == anchor_at[b]) {
                ca = a;
                cb = b;
                break;
            }
    if (ca < 0) throw std::logic_error("pigeonhole_embed: no agreeing pair; copies <= |g| ?");

    int x = anchor_at[ca];
    bool k_edge_a_to_b = host.arc_from_to(x * copies + ca, x * copies + cb);
    // Whichever way the K-edge points, one of the two agreeing copies extends
    // with the correct arc direction toward the pendant's image.
    int base_copy, pendant_copy;
    if (arc_to_pendant == k_edge_a_to_b) {
        base_copy = ca;
        pendant_copy = cb;
    } else {
        base_copy = cb;
        pendant_copy = ca;
    }

    std::vector<int> map(tn);
    for (int t = 0; t < tn; ++t) {
        if (t == pendant)
            map[t] = x * copies + pendant_copy;
        else
            map[t] = maps[base_copy][local(t)] * copies + base_copy;
    }
    return EmbeddingCertificate{tree, host, std::move(map), Variant::isometric};
}

SubEmbedder pigeonhole_sub_embedder(const Graph& inner_g, int inner_copies, const SubEmbedder& inner_sub) {
    return [inner_g, inner_copies, inner_sub](const Orientation& copy, const Digraph& tree)
               -> std::optional<std::vector<int>> {
        if (tree.vertex_count() == 1) {
            if (copy.host.vertex_count() == 0) return std::nullopt;
            return std::vector<int>{0};
        }
        try {
            return pigeonhole_embed(inner_g, inner_copies, inner_sub, copy, tree).map;
        } catch (const std::runtime_error&) {
            return std::nullopt;
        }
    };
}

} // namespace oriray
