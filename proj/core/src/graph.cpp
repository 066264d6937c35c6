#include "oriray/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace oriray {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("graph: loop edge");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("graph: vertex out of range");
    if (u > v) std::swap(u, v);
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
    edges_.insert(pos, {u, v});
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
    if (pos == edges_.end() || *pos != std::pair{u, v}) return -1;
    return int(pos - edges_.begin());
}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arcs) : Digraph(n) {
    for (auto [u, v] : arcs) add_arc(u, v);
}

void Digraph::add_arc(int u, int v) {
    if (u == v) throw std::invalid_argument("digraph: loop arc");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("digraph: vertex out of range");
    if (out_[u].test(v)) return;
    if (out_[v].test(u)) throw std::invalid_argument("digraph: opposite arc pair");
    out_[u].set(v);
    in_[v].set(u);
    auto pos = std::lower_bound(arcs_.begin(), arcs_.end(), std::pair{u, v});
    arcs_.insert(pos, {u, v});
}

Graph Digraph::shadow() const {
    Graph g(n_);
    for (auto [u, v] : arcs_) g.add_edge(u, v);
    return g;
}

Digraph Digraph::reversed() const {
    Digraph r(n_);
    for (auto [u, v] : arcs_) r.add_arc(v, u);
    return r;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), kInfiniteDistance);
    dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        g.neighbors(u).for_each([&](int v) {
            if (is_infinite(dist[v])) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        });
    }
    return dist;
}

std::vector<int> bfs_distances_without(const Graph& g, int source, int removed) {
    std::vector<int> dist(g.vertex_count(), kInfiniteDistance);
    if (source == removed) return dist;
    dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        g.neighbors(u).for_each([&](int v) {
            if (v != removed && is_infinite(dist[v])) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        });
    }
    return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
    int n = g.vertex_count();
    DistanceMatrix m(n);
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) m.set(s, v, dist[v]);
    }
    return m;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    auto dist = bfs_distances(g, 0);
    for (int v = 0; v < n; ++v)
        if (is_infinite(dist[v])) return false;
    return true;
}

bool is_acyclic(const Digraph& d) {
    int n = d.vertex_count();
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = d.in_degree(v);
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) q.push(v);
    int seen = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        ++seen;
        d.out_neighbors(u).for_each([&](int v) {
            if (--indeg[v] == 0) q.push(v);
        });
    }
    return seen == n;
}

int max_component_diameter(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v)
            if (!is_infinite(dist[v])) best = std::max(best, dist[v]);
    }
    return best;
}

Graph rectangular_product(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph p(ng * nh);
    for (int i = 0; i < ng; ++i)
        for (auto [a, b] : h.edges()) p.add_edge(i * nh + a, i * nh + b);
    for (auto [a, b] : g.edges())
        for (int j = 0; j < nh; ++j) p.add_edge(a * nh + j, b * nh + j);
    return p;
}

Graph complete_graph(int m) {
    if (m < 1) throw std::invalid_argument("complete_graph: need m >= 1");
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle_graph: need m >= 3");
    Graph g(m);
    for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, m - 1);
    return g;
}

Graph path_graph(int m) {
    if (m < 1) throw std::invalid_argument("path_graph: need m >= 1");
    Graph g(m);
    for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph build_graph(GraphKind kind, int m) {
    switch (kind) {
    case GraphKind::complete: return complete_graph(m);
    case GraphKind::cycle: return cycle_graph(m);
    case GraphKind::path: return path_graph(m);
    }
    throw std::invalid_argument("build_graph: unknown kind");
}

int girth(const Graph& g) {
    // Per-root BFS; the shortest cycle through the root closes at the first
    // non-tree edge. Minimizing over roots gives the exact girth.
    int n = g.vertex_count();
    int best = kInfiniteDistance;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kInfiniteDistance);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            g.neighbors(u).for_each([&](int v) {
                if (is_infinite(dist[v])) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (len < best) best = len;
                }
            });
        }
    }
    return best;
}

Digraph acyclic_orientation(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (int(order.size()) != n) throw std::invalid_argument("acyclic_orientation: order size mismatch");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("acyclic_orientation: not a permutation");
        pos[v] = i;
    }
    Digraph d(n);
    for (auto [u, v] : g.edges()) {
        if (pos[u] < pos[v])
            d.add_arc(u, v);
        else
            d.add_arc(v, u);
    }
    return d;
}

} // namespace oriray
