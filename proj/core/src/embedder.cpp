#include "oriray/embedder.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "oriray/errors.hpp"

namespace oriray {

std::optional<Condition1Witness> check_condition1(const Graph& g, int k, double d_k, EmbedMode mode,
                                                  long long pair_cap) {
    if (k < 2) throw std::invalid_argument("check_condition1: need k >= 2");
    int n = g.vertex_count();
    long long tuples = 1;
    for (int i = 0; i < k; ++i) {
        tuples *= n;
        if (tuples > pair_cap)
            throw CapExceeded("check_condition1: |V|^k exceeds cap " + std::to_string(pair_cap));
    }

    // dist in G - v from each candidate s, recomputed per v.
    for (int v = 0; v < n; ++v) {
        std::vector<std::vector<int>> dist_without(n);
        for (int s = 0; s < n; ++s)
            if (s != v) dist_without[s] = bfs_distances_without(g, s, v);

        std::vector<int> tuple(k - 1, -1);
        std::vector<bool> in_tuple(n, false);
        // Ordered tuples of distinct vertices, lexicographic.
        auto rec = [&](auto&& self, int pos) -> std::optional<Condition1Witness> {
            if (pos == k - 1) {
                std::vector<int> y;
                g.neighbors(v).for_each([&](int cand) {
                    if (in_tuple[cand]) return;
                    for (int i = 1; i < k; ++i) {
                        int bound = mode == EmbedMode::isometric ? i : 1;
                        if (dist_without[tuple[i - 1]][cand] <= bound) {
                            y.push_back(cand);
                            return;
                        }
                    }
                });
                if (double(y.size()) > d_k) return Condition1Witness{v, tuple, y};
                return std::nullopt;
            }
            for (int s = 0; s < n; ++s) {
                if (s == v || in_tuple[s]) continue;
                tuple[pos] = s;
                in_tuple[s] = true;
                auto w = self(self, pos + 1);
                in_tuple[s] = false;
                if (w) return w;
            }
            return std::nullopt;
        };
        if (auto w = rec(rec, 0)) return w;
    }
    return std::nullopt;
}

namespace {

long long span_of_mask(const Graph& g, uint32_t mask) {
    long long spanned = 0;
    for (auto [u, v] : g.edges())
        if (((mask >> u) & 1u) && ((mask >> v) & 1u)) ++spanned;
    return spanned;
}

std::vector<int> mask_to_vector(uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; v < 32; ++v)
        if ((mask >> v) & 1u) out.push_back(v);
    return out;
}

} // namespace

std::optional<Condition2Witness> check_condition2_exact(const Graph& g, int k, double w_k, double d_k,
                                                        int vertex_cap) {
    int n = g.vertex_count();
    if (n > vertex_cap)
        throw CapExceeded("check_condition2_exact: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(vertex_cap));
    long double threshold = (long double)(d_k + k - 1) * (long double)w_k;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        if (double(std::popcount(mask)) <= w_k) continue;
        long long spanned = span_of_mask(g, mask);
        if (!((long double)spanned > threshold)) return Condition2Witness{mask_to_vector(mask), spanned};
    }
    return std::nullopt;
}

std::optional<Condition2Witness> check_condition2_sampled(const Graph& g, int k, double w_k, double d_k,
                                                          int trials, SplitMix64& rng) {
    int n = g.vertex_count();
    int min_size = int(w_k) + 1;
    while (double(min_size) <= w_k) ++min_size;
    if (min_size > n) return std::nullopt; // no qualifying W exists
    long double threshold = (long double)(d_k + k - 1) * (long double)w_k;
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int t = 0; t < trials; ++t) {
        int size = min_size + int(rng.below(uint64_t(n - min_size + 1)));
        for (int i = 0; i < size; ++i) {
            int j = i + int(rng.below(uint64_t(n - i)));
            std::swap(pool[i], pool[j]);
        }
        uint32_t mask = 0;
        for (int i = 0; i < size; ++i) mask |= uint32_t{1} << pool[i];
        long long spanned = span_of_mask(g, mask);
        if (!((long double)spanned > threshold)) {
            auto w_set = mask_to_vector(mask);
            return Condition2Witness{w_set, spanned};
        }
    }
    return std::nullopt;
}

bool check_condition3(const std::vector<double>& w, int n_vertices) {
    long double sum = 0;
    for (double x : w) sum += x;
    return sum < (long double)n_vertices;
}

long long min_edge_span(const Graph& g, int m, int vertex_cap) {
    int n = g.vertex_count();
    if (n > vertex_cap)
        throw CapExceeded("min_edge_span: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(vertex_cap));
    if (m < 0 || m > n) throw std::invalid_argument("min_edge_span: m out of range");
    if (m <= 1) return 0;
    // span(mask) = span(mask - lowbit) + |N(lowbit) & (mask - lowbit)|
    std::vector<uint32_t> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= uint32_t{1} << v;
        nbr[v] |= uint32_t{1} << u;
    }
    std::vector<int32_t> span(size_t(1) << n, 0);
    long long best = -1;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        int low = std::countr_zero(mask);
        uint32_t rest = mask & (mask - 1);
        span[mask] = span[rest] + std::popcount(nbr[low] & rest);
        if (std::popcount(mask) == m && (best < 0 || span[mask] < best)) best = span[mask];
    }
    return best;
}

bool greedy_succeeded(const GreedyResult& r) { return std::holds_alternative<EmbeddingCertificate>(r); }

namespace {

struct PeelStage {
    int pendant = -1;
    int anchor = -1;
    bool out_direction = true; // arc anchor -> pendant
};

} // namespace

GreedyResult greedy_tree_embed(const Orientation& host, const Digraph& tree, const PikhParameters& params) {
    const Graph& g = host.host;
    int n = g.vertex_count();
    int tn = tree.vertex_count();
    if (tn != params.n) throw std::invalid_argument("greedy_tree_embed: params.n != |tree|");
    if (int(params.w.size()) != tn - 1 || int(params.d.size()) != tn - 1)
        throw std::invalid_argument("greedy_tree_embed: sequences must have length n-1");
    for (double x : params.w)
        if (!(x > 0)) throw std::invalid_argument("greedy_tree_embed: w entries must be positive");
    for (double x : params.d)
        if (!(x > 0)) throw std::invalid_argument("greedy_tree_embed: d entries must be positive");

    Graph tree_shadow = tree.shadow();
    DistanceMatrix tree_dist = distance_matrix(tree_shadow);

    // Peel pendants from the top: stage k+1 removes the lowest-index pendant
    // of the remaining k+1 vertex subtree.
    std::vector<PeelStage> stage(tn + 1); // stage[j] peels the j-th vertex, j = tn..2
    {
        std::vector<int> deg(tn);
        std::vector<bool> alive(tn, true);
        for (int v = 0; v < tn; ++v) deg[v] = tree_shadow.degree(v);
        for (int j = tn; j >= 2; --j) {
            int pend = -1;
            for (int v = 0; v < tn && pend < 0; ++v)
                if (alive[v] && deg[v] == 1) pend = v;
            if (pend < 0) throw std::invalid_argument("greedy_tree_embed: pattern is not an oriented tree");
            int anch = -1;
            tree_shadow.neighbors(pend).for_each([&](int u) {
                if (alive[u] && anch < 0) anch = u;
            });
            stage[j] = {pend, anch, tree.has_arc(anch, pend)};
            alive[pend] = false;
            --deg[anch];
            deg[pend] = 0;
        }
    }

    // Host arc structure.
    std::vector<Bits> out(n, Bits(n)), in(n, Bits(n));
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = host.arc(i);
        out[a].set(b);
        in[b].set(a);
    }

    // Downward chain of admissible sets: U[tn] = V, U[k] = U[k+1] minus the
    // low-degree set W[k] of the stage that extends T_k to T_{k+1}.
    std::vector<Bits> u_sets(tn + 1), w_sets(tn + 1);
    u_sets[tn] = Bits(n);
    for (int v = 0; v < n; ++v) u_sets[tn].set(v);
    for (int k = tn - 1; k >= 1; --k) {
        const Bits& u_cur = u_sets[k + 1];
        bool use_out = stage[k + 1].out_direction;
        double threshold = params.d[k - 1] + k - 1;
        Bits w(n), u_next = u_cur;
        u_cur.for_each([&](int x) {
            int deg_inside = use_out ? out[x].count_and(u_cur) : in[x].count_and(u_cur);
            if (double(deg_inside) <= threshold) {
                w.set(x);
                u_next.reset(x);
            }
        });
        w_sets[k] = std::move(w);
        u_sets[k] = std::move(u_next);
    }

    std::vector<int> image(tn, -1);
    std::vector<int> placed; // tree vertices in placement order

    // Base: the vertex surviving all peels goes to the smallest admissible
    // host vertex.
    int root = 0;
    {
        std::vector<bool> removed(tn, false);
        for (int j = 2; j <= tn; ++j) removed[stage[j].pendant] = true;
        for (int v = 0; v < tn; ++v)
            if (!removed[v]) root = v;
    }
    int base_vertex = -1;
    u_sets[1].for_each([&](int v) {
        if (base_vertex < 0) base_vertex = v;
    });
    if (base_vertex < 0) {
        FailureTrace t;
        t.step_k = 1;
        t.tree_vertex = root;
        t.u_set = u_sets[1].to_vector();
        return t;
    }
    image[root] = base_vertex;
    placed.push_back(root);

    for (int k = 1; k <= tn - 1; ++k) {
        const PeelStage& st = stage[k + 1];
        int fv = image[st.anchor];
        // s_1..s_{k-1}: embedded vertices minus the anchor, ordered by tree
        // distance to the anchor (ties by vertex index), so dist(s_i, v) <= i.
        std::vector<int> s_tree;
        for (int t : placed)
            if (t != st.anchor) s_tree.push_back(t);
        std::sort(s_tree.begin(), s_tree.end(), [&](int a, int b) {
            int da = tree_dist.at(a, st.anchor), db = tree_dist.at(b, st.anchor);
            if (da != db) return da < db;
            return a < b;
        });
        std::vector<int> s_images(s_tree.size());
        for (size_t i = 0; i < s_tree.size(); ++i) s_images[i] = image[s_tree[i]];

        // Blocked neighbors of the anchor image: within distance i of s_i in
        // G minus the anchor image (distance 1 in plain mode).
        Bits blocked(n);
        for (size_t i = 0; i < s_images.size(); ++i) {
            int bound = params.mode == EmbedMode::isometric ? int(i) + 1 : 1;
            auto dist = bfs_distances_without(g, s_images[i], fv);
            g.neighbors(fv).for_each([&](int y) {
                if (!is_infinite(dist[y]) && dist[y] <= bound) blocked.set(y);
            });
        }
        Bits y_set = blocked;
        for (int img : s_images) y_set.reset(img); // Y excludes S by definition

        // Extension candidates live in the current admissible set and avoid
        // the blocked set Y plus the vertices already used. W is not
        // excluded here: the degree count behind the step only discounts S
        // and Y, and a W image is harmless (the recursion never descends
        // into it).
        const Bits& candidates_dir = st.out_direction ? out[fv] : in[fv];
        int chosen = -1;
        candidates_dir.for_each([&](int y) {
            if (chosen >= 0) return;
            if (!u_sets[k + 1].test(y)) return;
            if (y_set.test(y)) return;
            if (y == fv) return;
            for (int img : s_images)
                if (img == y) return;
            chosen = y;
        });
        if (chosen < 0) {
            FailureTrace t;
            t.step_k = k;
            t.tree_vertex = st.pendant;
            t.anchor_vertex = st.anchor;
            t.anchor_image = fv;
            t.out_direction = st.out_direction;
            t.u_set = u_sets[k + 1].to_vector();
            t.w_set = w_sets[k].to_vector();
            t.y_set = y_set.to_vector();
            t.s_images = s_images;
            return t;
        }
        image[st.pendant] = chosen;
        placed.push_back(st.pendant);
    }

    EmbeddingCertificate cert;
    cert.pattern = tree;
    cert.host = host;
    cert.map = image;
    cert.variant = params.mode == EmbedMode::isometric ? Variant::isometric : Variant::oriented;
    return cert;
}

bool failure_trace_reverifies(const Orientation& host, const Digraph& tree, const PikhParameters& params,
                              const FailureTrace& trace) {
    (void)tree;
    (void)params;
    if (trace.anchor_vertex < 0) return trace.u_set.empty(); // base case
    const Graph& g = host.host;
    auto in_list = [](const std::vector<int>& xs, int v) {
        return std::find(xs.begin(), xs.end(), v) != xs.end();
    };
    for (int y : trace.u_set) {
        if (y == trace.anchor_image) continue;
        if (in_list(trace.y_set, y) || in_list(trace.s_images, y)) continue;
        if (!g.has_edge(trace.anchor_image, y)) continue;
        bool arc_ok = trace.out_direction ? host.arc_from_to(trace.anchor_image, y)
                                          : host.arc_from_to(y, trace.anchor_image);
        if (arc_ok) return false; // a viable candidate exists after all
    }
    return true;
}

} // namespace oriray
