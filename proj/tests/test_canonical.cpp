#include "doctest.h"

#include <set>

#include "oriray/canonical.hpp"
#include "oriray/catalog.hpp"
#include "oriray/errors.hpp"
#include "oriray/rng.hpp"

using namespace oriray;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.vertex_count());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Digraph relabel(const Digraph& d, const std::vector<int>& perm) {
    Digraph out(d.vertex_count());
    for (auto [u, v] : d.arcs()) out.add_arc(perm[u], perm[v]);
    return out;
}

std::vector<int> random_perm(int n, SplitMix64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(uint64_t(i))]);
    return p;
}

} // namespace

TEST_CASE("canonical form identifies relabelings") {
    Graph p3a(3, {{0, 1}, {1, 2}});
    Graph p3b(3, {{1, 0}, {0, 2}}); // same path through vertex 0
    CHECK(canonical_form(p3a) == canonical_form(p3b));

    Digraph path3 = directed_path(3);
    Digraph instar(3, {{0, 1}, {2, 1}});
    CHECK(canonical_form(path3) != canonical_form(instar));

    Digraph rev = path3.reversed();
    CHECK(canonical_form(path3) == canonical_form(rev));
}

TEST_CASE("canonical form is invariant under random relabelings") {
    SplitMix64 rng(17);
    Graph g = random_graph(8, 0.4, rng);
    auto key = canonical_form(g);
    for (int t = 0; t < 1000; ++t)
        CHECK(canonical_form(relabel(g, random_perm(8, rng))) == key);

    Digraph d(7);
    Graph shape = random_graph(7, 0.5, rng);
    for (auto [u, v] : shape.edges())
        if (rng.chance(0.5))
            d.add_arc(u, v);
        else
            d.add_arc(v, u);
    auto dkey = canonical_form(d);
    for (int t = 0; t < 1000; ++t)
        CHECK(canonical_form(relabel(d, random_perm(7, rng))) == dkey);
}

TEST_CASE("canonical form separates non-isomorphic graphs (exhaustive n=4)") {
    // all 4-vertex graphs: equal key must mean isomorphic; 11 classes total.
    std::set<CanonicalForm> keys;
    std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int mask = 0; mask < 64; ++mask) {
        Graph g(4);
        for (int i = 0; i < 6; ++i)
            if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
        keys.insert(canonical_form(g));
    }
    CHECK(keys.size() == 11);
}

TEST_CASE("canonical cap") {
    CHECK_THROWS_AS(canonical_form(Graph(11)), CapExceeded);
    CHECK(canonical_form(Graph(11), 12).n == 11);
    SplitMix64 rng(23);
    Graph big = random_graph(40, 0.2, rng);
    auto h1 = iso_invariant_hash(big);
    auto h2 = iso_invariant_hash(relabel(big, random_perm(40, rng)));
    CHECK(h1 == h2);
}
