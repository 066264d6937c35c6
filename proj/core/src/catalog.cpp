#include "oriray/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "oriray/errors.hpp"

namespace oriray {

Digraph directed_path(int n) {
    if (n < 1) throw std::invalid_argument("directed_path: need n >= 1");
    Digraph d(n);
    for (int i = 1; i < n; ++i) d.add_arc(i - 1, i);
    return d;
}

namespace {

template <typename T>
std::vector<T> sorted_by_form(std::map<CanonicalForm, T>&& bucket) {
    std::vector<T> out;
    out.reserve(bucket.size());
    for (auto& [form, item] : bucket) out.push_back(std::move(item));
    return out;
}

} // namespace

std::vector<Graph> enumerate_free_trees(int n, int cap) {
    if (n < 1) throw std::invalid_argument("enumerate_free_trees: need n >= 1");
    if (n > cap) throw CapExceeded("enumerate_free_trees: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<Graph> trees = {Graph(1)};
    for (int size = 2; size <= n; ++size) {
        // Every tree on `size` vertices arises from a tree on size-1 vertices
        // by attaching a leaf; generate all attachments and dedupe.
        std::map<CanonicalForm, Graph> bucket;
        for (const Graph& t : trees) {
            for (int attach = 0; attach < size - 1; ++attach) {
                Graph bigger(size);
                for (auto [u, v] : t.edges()) bigger.add_edge(u, v);
                bigger.add_edge(attach, size - 1);
                bucket.emplace(canonical_form(bigger, size), bigger);
            }
        }
        trees = sorted_by_form(std::move(bucket));
    }
    return trees;
}

namespace {

Digraph orient_by_bits(const Graph& g, uint64_t bits) {
    Digraph d(g.vertex_count());
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if ((bits >> i) & 1)
            d.add_arc(v, u);
        else
            d.add_arc(u, v);
    }
    return d;
}

} // namespace

std::vector<Digraph> enumerate_oriented_trees(int n, int cap) {
    if (n < 1) throw std::invalid_argument("enumerate_oriented_trees: need n >= 1");
    if (n > cap) throw CapExceeded("enumerate_oriented_trees: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::map<CanonicalForm, Digraph> bucket;
    for (const Graph& tree : enumerate_free_trees(n, cap)) {
        uint64_t total = uint64_t{1} << tree.edge_count();
        for (uint64_t bits = 0; bits < total; ++bits) {
            Digraph d = orient_by_bits(tree, bits);
            bucket.emplace(canonical_form(d, n), std::move(d));
        }
    }
    return sorted_by_form(std::move(bucket));
}

std::vector<Graph> enumerate_graphs(int n, int cap) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs: need n >= 1");
    if (n > cap) throw CapExceeded("enumerate_graphs: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<Graph> atlas = {Graph(1)};
    for (int size = 2; size <= n; ++size) {
        // Extend each (size-1)-graph by one vertex with every possible
        // neighborhood; every graph has a vertex whose deletion realizes it
        // as such an extension.
        std::map<CanonicalForm, Graph> bucket;
        for (const Graph& g : atlas) {
            for (uint64_t nb = 0; nb < (uint64_t{1} << (size - 1)); ++nb) {
                Graph bigger(size);
                for (auto [u, v] : g.edges()) bigger.add_edge(u, v);
                for (int v = 0; v < size - 1; ++v)
                    if ((nb >> v) & 1) bigger.add_edge(v, size - 1);
                bucket.emplace(canonical_form(bigger, size), bigger);
            }
        }
        atlas = sorted_by_form(std::move(bucket));
    }
    return atlas;
}

Digraph gamma_construction(const Digraph& h, int root) {
    int n = h.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("gamma_construction: root out of range");
    if (!is_acyclic(h)) throw std::invalid_argument("gamma_construction: input digraph is cyclic");
    if (!is_connected(h.shadow())) throw std::invalid_argument("gamma_construction: input digraph is disconnected");
    Digraph gamma(2 * n);
    gamma.add_arc(root, n + root);
    for (auto [u, v] : h.arcs()) {
        gamma.add_arc(u, v);
        gamma.add_arc(n + v, n + u);
    }
    return gamma;
}

} // namespace oriray
