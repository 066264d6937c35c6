#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "oriray/bitset.hpp"

namespace oriray {

/// Sentinel for the distance between vertices in different components.
/// Ordered above every finite distance.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

inline bool is_infinite(int d) { return d == kInfiniteDistance; }

/// Saturating distance addition (infinity absorbs).
inline int dist_add(int a, int b) {
    if (is_infinite(a) || is_infinite(b)) return kInfiniteDistance;
    return a + b;
}

/// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges.
/// Edges are kept sorted lexicographically with u < v; this ordering is the
/// canonical edge indexing used by Orientation bit vectors, so it must be
/// stable across runs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bits(n)) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }

    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
    void add_edge(int u, int v);

    const Bits& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    /// Sorted edge list, each pair with first < second.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Index of {u,v} in the sorted edge list, or -1.
    int edge_index(int u, int v) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Bits> adj_;
    std::vector<std::pair<int, int>> edges_;
};

/// Directed graph: no loops and no pair of opposite arcs.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n), out_(n, Bits(n)), in_(n, Bits(n)) {}
    Digraph(int n, const std::vector<std::pair<int, int>>& arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return int(arcs_.size()); }

    bool has_arc(int u, int v) const { return u != v && out_[u].test(v); }
    void add_arc(int u, int v);

    const Bits& out_neighbors(int v) const { return out_[v]; }
    const Bits& in_neighbors(int v) const { return in_[v]; }
    int out_degree(int v) const { return out_[v].count(); }
    int in_degree(int v) const { return in_[v].count(); }

    /// Sorted arc list.
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    /// The underlying undirected graph.
    Graph shadow() const;

    /// All arcs reversed.
    Digraph reversed() const;

    bool operator==(const Digraph&) const = default;

private:
    int n_ = 0;
    std::vector<Bits> out_, in_;
    std::vector<std::pair<int, int>> arcs_;
};

/// All-pairs hop distances; entries are BFS-exact or kInfiniteDistance.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(size_t(n) * n, kInfiniteDistance) {}

    int size() const { return n_; }
    int at(int u, int v) const { return d_[size_t(u) * n_ + v]; }
    void set(int u, int v, int value) { d_[size_t(u) * n_ + v] = value; }

    bool operator==(const DistanceMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<int> d_;
};

DistanceMatrix distance_matrix(const Graph& g);

/// BFS distances from a single source.
std::vector<int> bfs_distances(const Graph& g, int source);

/// BFS distances in g with one vertex removed.
std::vector<int> bfs_distances_without(const Graph& g, int source, int removed);

bool is_connected(const Graph& g);
bool is_acyclic(const Digraph& d);

/// Diameter of the largest component (max finite distance), 0 for empty graph.
int max_component_diameter(const Graph& g);

/// Cartesian ("rectangular") product; vertex (i,j) of G x H gets index i*|H|+j.
Graph rectangular_product(const Graph& g, const Graph& h);

inline int product_vertex(int i, int j, const Graph& h) { return i * h.vertex_count() + j; }

Graph complete_graph(int m);
Graph cycle_graph(int m);
Graph path_graph(int m);

enum class GraphKind { complete, cycle, path };
Graph build_graph(GraphKind kind, int m);

/// Length of the shortest cycle, kInfiniteDistance for forests.
int girth(const Graph& g);

/// Orientation of g induced by a linear order: arc (u,v) iff {u,v} is an edge
/// and u precedes v. The result is always acyclic.
Digraph acyclic_orientation(const Graph& g, const std::vector<int>& order);

} // namespace oriray
