#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "oriray/arrows.hpp"
#include "oriray/embedder.hpp"
#include "oriray/errors.hpp"
#include "oriray/rng.hpp"

using namespace oriray;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

} // namespace

TEST_CASE("condition 1 on reference graphs") {
    CHECK_FALSE(check_condition1(petersen(), 2, 1.0, EmbedMode::isometric).has_value());

    auto w = check_condition1(complete_graph(5), 2, 2.0, EmbedMode::isometric);
    REQUIRE(w.has_value());
    CHECK(w->v == 0);
    CHECK(w->s == std::vector<int>{1});
    CHECK(w->y == std::vector<int>{2, 3, 4});

    // d_k at least the max degree: Y is a set of neighbors of v
    SplitMix64 rng(89);
    for (int t = 0; t < 5; ++t) {
        Graph g = random_graph(7, 0.5, rng);
        int maxdeg = 0;
        for (int v = 0; v < 7; ++v) maxdeg = std::max(maxdeg, g.degree(v));
        CHECK_FALSE(check_condition1(g, 2, double(maxdeg), EmbedMode::isometric).has_value());
    }

    CHECK_THROWS_AS(check_condition1(Graph(40), 5, 1.0, EmbedMode::isometric), CapExceeded);
}

TEST_CASE("condition 1 plain mode blocks less than isometric mode") {
    // Petersen, k=3: radius-2 balls catch all three neighbors of a vertex,
    // adjacency alone catches at most two (girth 5).
    auto iso = check_condition1(petersen(), 3, 2.5, EmbedMode::isometric);
    CHECK(iso.has_value());
    CHECK(iso->y.size() == 3);
    auto plain = check_condition1(petersen(), 3, 2.5, EmbedMode::plain);
    CHECK_FALSE(plain.has_value());
}

TEST_CASE("condition 2 exact scan") {
    auto w1 = check_condition2_exact(cycle_graph(5), 2, 2.0, 1.0);
    REQUIRE(w1.has_value());
    CHECK(w1->w_set.size() > 2);
    CHECK((long double)w1->spanned <= (long double)(1.0 + 1) * 2.0);
    CHECK(oracles::edges_inside(cycle_graph(5), w1->w_set) == w1->spanned);

    auto w2 = check_condition2_exact(complete_graph(6), 2, 3.0, 1.0);
    REQUIRE(w2.has_value());
    CHECK(w2->w_set.size() == 4);
    CHECK(w2->spanned == 6);

    auto w3 = check_condition2_exact(Graph(5), 2, 2.0, 1.0);
    REQUIRE(w3.has_value());
    CHECK(w3->spanned == 0);

    // dense enough to pass: sets of size 4+ in K_6 span at least 6 > 4.5
    CHECK_FALSE(check_condition2_exact(complete_graph(6), 2, 3.0, 0.5).has_value());

    CHECK_THROWS_AS(check_condition2_exact(Graph(21), 2, 2.0, 1.0), CapExceeded);
}

TEST_CASE("min edge span") {
    CHECK(min_edge_span(cycle_graph(5), 3) == 1);
    CHECK(min_edge_span(complete_graph(4), 3) == 3);
    CHECK(min_edge_span(complete_graph(4), 1) == 0);
    SplitMix64 rng(97);
    for (int t = 0; t < 15; ++t) {
        int n = 2 + int(rng.below(9));
        Graph g = random_graph(n, 0.5, rng);
        for (int m = 0; m <= n; ++m) CHECK(min_edge_span(g, m) == oracles::min_edge_span_naive(g, m));
    }
}

TEST_CASE("condition 1 witnesses re-verify against the definition") {
    SplitMix64 rng(127);
    int reverified = 0;
    while (reverified < 25) {
        int n = 4 + int(rng.below(6));
        Graph g = random_graph(n, 0.5, rng);
        int k = 2 + int(rng.below(2));
        double dk = rng.unit() * 2;
        auto mode = rng.chance(0.5) ? EmbedMode::isometric : EmbedMode::plain;
        auto w = check_condition1(g, k, dk, mode);
        if (!w) continue;
        ++reverified;
        // recompute Y from scratch
        std::set<int> y_fresh;
        for (int y = 0; y < n; ++y) {
            if (y == w->v || !g.has_edge(y, w->v)) continue;
            if (std::find(w->s.begin(), w->s.end(), y) != w->s.end()) continue;
            for (size_t i = 0; i < w->s.size(); ++i) {
                int bound = mode == EmbedMode::isometric ? int(i) + 1 : 1;
                auto dist = bfs_distances_without(g, w->s[i], w->v);
                if (!is_infinite(dist[y]) && dist[y] <= bound) {
                    y_fresh.insert(y);
                    break;
                }
            }
        }
        CHECK(std::set<int>(w->y.begin(), w->y.end()) == y_fresh);
        CHECK(double(y_fresh.size()) > dk);
    }
}

TEST_CASE("condition 2 sampled mode never contradicts exact mode") {
    SplitMix64 rng(101);
    for (int t = 0; t < 40; ++t) {
        int n = 3 + int(rng.below(8));
        Graph g = random_graph(n, 0.4, rng);
        int k = 2 + int(rng.below(2));
        double wk = 1 + rng.unit() * (n - 1);
        double dk = rng.unit() * 3;
        auto exact = check_condition2_exact(g, k, wk, dk);
        SplitMix64 sample_rng(rng.next());
        auto sampled = check_condition2_sampled(g, k, wk, dk, 50, sample_rng);
        if (sampled) {
            CHECK(exact.has_value()); // a sampled witness implies the exact verdict
            CHECK(double(sampled->w_set.size()) > wk);
            CHECK(oracles::edges_inside(g, sampled->w_set) == sampled->spanned);
            CHECK((long double)sampled->spanned <= (long double)(dk + k - 1) * wk);
        }
    }
}

TEST_CASE("condition 3") {
    CHECK(check_condition3({1, 1}, 5));
    CHECK_FALSE(check_condition3({3, 3}, 5));
    CHECK(check_condition3({2.5, 2.4}, 5));
}

TEST_CASE("greedy embedding tiny cases") {
    PikhParameters params{2, {1.0}, {0.5}, EmbedMode::isometric};
    Graph k2 = complete_graph(2);
    for (uint64_t bits : {uint64_t{0}, uint64_t{1}}) {
        Orientation o(k2, {bits});
        auto r = greedy_tree_embed(o, directed_path(2), params);
        REQUIRE(greedy_succeeded(r));
        CHECK(verify_certificate(std::get<EmbeddingCertificate>(r)).valid);
    }

    // no isometric I_3 in a transitive triangle: must fail with a trace
    PikhParameters p3{3, {1.0, 1.0}, {1.0, 1.0}, EmbedMode::isometric};
    Graph k3 = complete_graph(3);
    Orientation tt(k3, {0}); // all low->high: transitive
    auto r3 = greedy_tree_embed(tt, directed_path(3), p3);
    REQUIRE_FALSE(greedy_succeeded(r3));
    CHECK(failure_trace_reverifies(tt, directed_path(3), p3, std::get<FailureTrace>(r3)));
}

TEST_CASE("greedy embedding cross-checked against exhaustive search on the Petersen graph") {
    Graph g = petersen();
    PikhParameters params{3, {1.0, 4.0}, {1.0, 1.0}, EmbedMode::isometric};
    auto trees = enumerate_oriented_trees(3);
    int successes = 0, failures = 0;
    enumerate_orientations(g, [&](const Orientation& o) {
        for (const Digraph& tree : trees) {
            auto r = greedy_tree_embed(o, tree, params);
            if (greedy_succeeded(r)) {
                ++successes;
                const auto& cert = std::get<EmbeddingCertificate>(r);
                REQUIRE(verify_certificate(cert).valid);
                // exhaustive search must agree an embedding exists
                REQUIRE(find_embedding(tree, o, Variant::isometric).has_value());
            } else {
                ++failures;
                REQUIRE(failure_trace_reverifies(o, tree, params, std::get<FailureTrace>(r)));
            }
        }
        return true;
    });
    CHECK(successes + failures == 32768 * 3);
}

TEST_CASE("greedy embedding succeeds routinely on dense hosts") {
    SplitMix64 rng(113);
    int successes = 0;
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(12, 0.6, rng);
        Orientation o = random_orientation(g, rng);
        auto trees = enumerate_oriented_trees(3);
        const Digraph& tree = trees[rng.below(trees.size())];
        PikhParameters params{3, {1.0, 1.0}, {0.5, 0.5}, EmbedMode::isometric};
        auto r = greedy_tree_embed(o, tree, params);
        if (greedy_succeeded(r)) {
            ++successes;
            CHECK(verify_certificate(std::get<EmbeddingCertificate>(r)).valid);
        }
    }
    CHECK(successes > 50);
}

TEST_CASE("greedy mode monotonicity: isometric success implies plain success") {
    SplitMix64 rng(103);
    int tried = 0;
    while (tried < 300) {
        int n = 6 + int(rng.below(7));
        Graph g = random_graph(n, 0.5, rng);
        Orientation o = random_orientation(g, rng);
        auto trees = enumerate_oriented_trees(2 + int(rng.below(3)));
        const Digraph& tree = trees[rng.below(trees.size())];
        int tn = tree.vertex_count();
        PikhParameters iso{tn, std::vector<double>(tn - 1, 1.0), std::vector<double>(tn - 1, 1.0),
                           EmbedMode::isometric};
        PikhParameters plain = iso;
        plain.mode = EmbedMode::plain;
        ++tried;
        auto ri = greedy_tree_embed(o, tree, iso);
        if (!greedy_succeeded(ri)) continue;
        auto rp = greedy_tree_embed(o, tree, plain);
        CHECK(greedy_succeeded(rp));
        CHECK(verify_certificate(std::get<EmbeddingCertificate>(rp)).valid);
        CHECK(std::get<EmbeddingCertificate>(rp).variant == Variant::oriented);
    }
}

TEST_CASE("lemma soundness at testable scale: conditions imply universal success") {
    // Scan the small atlas for any (graph, params) with all three conditions
    // satisfied at n = 3; wherever that happens, the greedy embedding must
    // succeed on every orientation and every 3-vertex oriented tree. The
    // conditions are very demanding at desk scale (singleton and pair sets
    // span too few edges), so qualifying instances are rare or absent; the
    // scan records how many were exercised.
    auto trees = enumerate_oriented_trees(3);
    int qualifying = 0;
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            if (g.edge_count() == 0) continue;
            for (double w2 : {1.0, 2.0, 3.0, 4.0, n / 2.0}) {
                for (double d2 : {0.5, 1.0, 2.0}) {
                    double w1 = 0.5;
                    if (!check_condition3({w1, w2}, n)) continue;
                    if (check_condition1(g, 2, d2, EmbedMode::isometric)) continue;
                    if (check_condition2_exact(g, 2, w2, d2)) continue;
                    ++qualifying;
                    PikhParameters params{3, {w1, w2}, {0.5, d2}, EmbedMode::isometric};
                    enumerate_orientations(g, [&](const Orientation& o) {
                        for (const Digraph& tree : trees) {
                            auto r = greedy_tree_embed(o, tree, params);
                            REQUIRE(greedy_succeeded(r));
                            REQUIRE(verify_certificate(std::get<EmbeddingCertificate>(r)).valid);
                        }
                        return true;
                    });
                }
            }
        }
    }
    MESSAGE("qualifying (graph, params) instances: ", qualifying);
    CHECK(qualifying >= 0); // vacuity is an allowed outcome; Monte-Carlo suites carry the weight
}

TEST_CASE("greedy parameter validation") {
    PikhParameters bad{3, {1.0}, {1.0, 1.0}, EmbedMode::isometric};
    Graph k3 = complete_graph(3);
    Orientation o(k3, {0});
    CHECK_THROWS_AS(greedy_tree_embed(o, directed_path(3), bad), std::invalid_argument);
    PikhParameters neg{3, {1.0, -1.0}, {1.0, 1.0}, EmbedMode::isometric};
    CHECK_THROWS_AS(greedy_tree_embed(o, directed_path(3), neg), std::invalid_argument);
}
