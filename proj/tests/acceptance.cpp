// Acceptance suite: one checkable criterion per function, each printing a
// single PASS/FAIL line (plus indented detail). Usage:
//   acceptance            run everything
//   acceptance all        run everything
//   acceptance <k>        run criterion k (1..12)
// Exit code 0 iff every selected criterion passed.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "oriray/arrows.hpp"
#include "oriray/bounds.hpp"
#include "oriray/catalog.hpp"
#include "oriray/chromatic.hpp"
#include "oriray/constructions.hpp"
#include "oriray/embedder.hpp"
#include "oriray/format.hpp"
#include "oriray/rng.hpp"

using namespace oriray;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<bool(std::ostream&)> run;
};

Graph prism() { return rectangular_product(complete_graph(2), complete_graph(3)); }

// --- C1: exact small values -------------------------------------------------

bool c01(std::ostream& log) {
    bool ok = true;

    auto r1 = ir_search({directed_path(1)}, 2);
    ok &= r1.resolved && r1.value == 1;
    log << "    IR(I_1) = " << r1.value << " (expect 1)\n";

    auto r2 = ir_search({directed_path(2)}, 3);
    ok &= r2.resolved && r2.value == 2;
    log << "    IR(I_2) = " << r2.value << " (expect 2)\n";

    ok &= enumerate_graphs(4).size() == 11;
    ok &= enumerate_graphs(5).size() == 34;
    auto r3 = ir_search({directed_path(3)}, 5);
    bool w3 = r3.resolved && canonical_form(*r3.witness) == canonical_form(cycle_graph(5));
    ok &= r3.resolved && r3.value == 5 && w3;
    log << "    IR(I_3) = " << (r3.resolved ? std::to_string(r3.value) : "?") << " with witness "
        << (r3.resolved ? write_graph6(*r3.witness) : "-") << " (expect 5, C_5; 11-graph atlas at n=4 scanned)\n";

    auto rt = ir_search(enumerate_oriented_trees(3), 6);
    ok &= rt.resolved && rt.value == 6;
    log << "    IR(T_3) = " << (rt.resolved ? std::to_string(rt.value) : "?")
        << " (expect 6; 34-graph atlas at n=5 exhausted), first witness in atlas order: "
        << (rt.resolved ? write_graph6(*rt.witness) : "-") << "\n";
    auto prism_check = arrow_check(prism(), enumerate_oriented_trees(3), Variant::isometric);
    ok &= prism_check.holds && prism_check.orientations_checked == 512;
    log << "    K_2xK_3 verified as a witness: holds over " << prism_check.orientations_checked
        << " orientations x 3 trees (the atlas-first witness above is a second, sparser witness; "
           "the value 6 is what the exact search certifies)\n";
    return ok;
}

// --- C2: constructive product-step embeddings at the paper's witnesses ------

bool c02(std::ostream& log) {
    bool ok = true;

    Graph c5 = cycle_graph(5);
    Graph host1 = rectangular_product(c5, complete_graph(6));
    SplitMix64 rng1(20240001);
    int good1 = 0;
    for (int t = 0; t < 1000; ++t) {
        Orientation host = random_orientation(host1, rng1);
        try {
            auto cert = pigeonhole_embed(c5, 6, exhaustive_sub_embedder(), host, directed_path(4));
            if (verify_certificate(cert).valid) ++good1;
        } catch (const std::exception&) {
        }
    }
    ok &= good1 == 1000;
    log << "    I_4 in C_5 x K_6 (30 vertices): " << good1
        << "/1000 seeded orientations produced verified isometric certificates\n";

    Graph pr = prism();
    Graph host2 = rectangular_product(pr, complete_graph(7));
    auto t4 = enumerate_oriented_trees(4);
    SplitMix64 rng2(20240002);
    int good2 = 0, total2 = 0;
    for (int t = 0; t < 1000; ++t) {
        Orientation host = random_orientation(host2, rng2);
        for (const Digraph& tree : t4) {
            ++total2;
            try {
                auto cert = pigeonhole_embed(pr, 7, exhaustive_sub_embedder(), host, tree);
                if (verify_certificate(cert).valid) ++good2;
            } catch (const std::exception&) {
            }
        }
    }
    ok &= good2 == total2 && total2 == 8000;
    log << "    all 8 trees of T_4 in (K_2xK_3) x K_7 (42 vertices): " << good2 << "/" << total2
        << " verified certificates (2^105 orientations make exhaustion impossible; Monte-Carlo + "
           "certification substitutes)\n";
    return ok;
}

// --- C3: tower bound in big-integer arithmetic -------------------------------

bool c03(std::ostream& log) {
    TowerFamily fam = tower_family(20);
    bool ok = fam.sizes[0] == BigUint(1) && fam.sizes[1] == BigUint(2) && fam.sizes[2] == BigUint(6) &&
              fam.sizes[3] == BigUint(42) && fam.sizes[4] == BigUint(1806);
    for (int k = 1; k < 20; ++k) {
        // a_{k+1} = a_k (a_k + 1), recomputed independently of the stored list
        ok &= fam.sizes[k] == fam.sizes[k - 1].times(fam.sizes[k - 1].plus(1));
    }
    bool bound_ok = true;
    for (int k = 1; k <= 20; ++k)
        bound_ok &= fam.sizes[k - 1].plus(1) <= BigUint::pow2(uint64_t{1} << (k - 1));
    ok &= bound_ok;
    log << "    sizes 1, 2, 6, 42, 1806, ...; recurrence exact for k <= 20; a_20 has "
        << fam.sizes[19].bit_length() << " bits; a_k + 1 <= 2^(2^(k-1)) " << (bound_ok ? "holds" : "FAILS")
        << " for k <= 20\n";
    return ok;
}

// --- C4: GHRV equality on every graph with at most 5 vertices ----------------

bool c04(std::ostream& log) {
    int checked = 0, mismatches = 0;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            auto r = ghrv_check(g);
            ++checked;
            if (r.chi != r.min_longest_path) ++mismatches;
        }
    log << "    " << checked << " graphs checked, " << mismatches << " mismatches\n";
    return checked == 52 && mismatches == 0;
}

// --- C5: comparability equivalences on every graph with at most 6 vertices ---

bool c05(std::ostream& log) {
    int checked = 0, disagreements = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            ++checked;
            bool small = ddiam(g, FamilyKind::paths) <= 2;
            bool comp = transitive_orientation(g).has_value();
            bool chord = odd_cycle_chord_check(g);
            if (small != comp || comp != chord) ++disagreements;
        }
    log << "    " << checked << " graphs checked (expect 208), " << disagreements
        << " disagreements among ddiam_I<=2 / transitive orientation / odd-walk chord\n";
    return checked == 208 && disagreements == 0;
}

// --- C6: odd cycles ----------------------------------------------------------

bool c06(std::ostream& log) {
    bool ok = true;
    for (int m : {5, 7, 9}) {
        int di = ddiam(cycle_graph(m), FamilyKind::paths);
        int dt = ddiam(cycle_graph(m), FamilyKind::trees);
        log << "    C_" << m << ": ddiam_I = " << di << " (expect 3), ddiam_T = " << dt << " (expect 2)\n";
        ok &= di == 3 && dt == 2;
    }
    return ok;
}

// --- C7: the K constant -------------------------------------------------------

bool c07(std::ostream& log) {
    auto r = minimize_k();
    bool ok = std::abs(r.k_value - 98.8249) <= 1e-3 && std::abs(r.x_star - 4.92155) <= 1e-3;
    log << "    K = " << r.k_value << " (expect 98.8249 +- 1e-3), x* = " << r.x_star
        << " (expect 4.92155 +- 1e-3)\n";
    return ok;
}

// --- C8: feasibility pipelines, as specified ----------------------------------

bool c08(std::ostream& log) {
    bool ok = true;

    // Part A: random_feasibility(pikh_parameters(n, 0.05, 0.05)) over the
    // reported threshold range up to 10^4.
    bool constraint_ok = pikh_recipe(2, 0.05, 0.05).constraint_ok;
    log << "    pikh_parameters(n, 0.05, 0.05): admissibility 4(1+d)(1-c)/(2+c) > 2+d is "
        << (constraint_ok ? "satisfied" : "violated (1.946 < 2.05); pikh_parameters rejects the pair")
        << "\n";
    auto scan = pikh_threshold_scan(0.05, 0.05, 10000);
    bool overflow_free = true;
    for (int n : {2, 10, 100, 1000, 10000}) {
        auto rep = random_feasibility(pikh_recipe(n, 0.05, 0.05).params);
        for (int i = 0; i < 4; ++i)
            overflow_free &= std::isfinite((double)rep.lhs_log[i]) && std::isfinite((double)rep.rhs_log[i]);
    }
    log << "    threshold scan n in [2, 10^4]: feasible at " << scan.feasible_count << " values, n0 = "
        << (scan.n0 ? std::to_string(*scan.n0) : "none") << "; log-space evaluation "
        << (overflow_free ? "overflow-free" : "OVERFLOWED") << "\n";
    bool part_a = constraint_ok && scan.n0.has_value();
    if (!part_a) {
        auto rep = random_feasibility(pikh_recipe(1000, 0.05, 0.05).params);
        log << "    at n=1000 the condition sides (natural logs) are:\n";
        for (int i = 0; i < 4; ++i)
            log << "      (" << i + 1 << ") lhs " << (double)rep.lhs_log[i] << (i == 3 ? " < " : " > ")
                << "rhs " << (double)rep.rhs_log[i] << " -> " << (rep.cond[i] ? "ok" : "violated") << "\n";
        log << "    condition (2) compares ~1.946 n^2 ln n against (n-1) ln N > 2 n^2 ln n, so no n "
               "satisfies it at (0.05, 0.05); see the decisions ledger\n";
    }
    // supplementary: the pipeline itself works at an admissible choice
    auto demo = pikh_threshold_scan(0.9, 0.05, 10000);
    log << "    [supplementary] at admissible (delta, c) = (0.9, 0.05): n0 = "
        << (demo.n0 ? std::to_string(*demo.n0) : "none") << ", feasible for all n in [n0, 10^4]\n";
    ok &= part_a;

    // Part B: klr feasibility at n = 10^5.
    auto rec = klr_parameters(100000, 0.1);
    auto rep = random_feasibility(rec.params);
    bool finite = true;
    for (int i = 0; i < 4; ++i)
        finite &= std::isfinite((double)rep.lhs_log[i]) && std::isfinite((double)rep.rhs_log[i]);
    log << "    klr_parameters(10^5, 0.1): delta = " << rec.delta << ", c = " << rec.c
        << "; conditions (1')..(4'): " << rep.cond[0] << rep.cond[1] << rep.cond[2] << rep.cond[3]
        << (finite ? " (log-space, overflow-free)" : " OVERFLOW") << "\n";
    if (!rep.all()) {
        for (int i = 0; i < 4; ++i)
            log << "      (" << i + 1 << "') lhs " << (double)rep.lhs_log[i] << (i == 3 ? " < " : " > ")
                << "rhs " << (double)rep.rhs_log[i] << " -> " << (rep.cond[i] ? "ok" : "violated") << "\n";
        log << "    (2') and (4') need n beyond e^500 at any (delta, c) with K delta < 0.1; the paper "
               "claims them only for sufficiently large n. See the decisions ledger.\n";
    }
    ok &= rep.all();
    return ok;
}

// --- C9: layer-parity orientation has norm span at most 1 ---------------------

bool c09(std::ostream& log) {
    bool ok = true;
    for (int n : {10, 50, 200}) {
        double p = n == 10 ? 0.35 : n == 50 ? 0.10 : 0.035;
        SplitMix64 rng(777000 + n);
        int worst = 0;
        for (int t = 0; t < 100; ++t) {
            Graph g = random_connected_graph(n, p, rng);
            int root = int(rng.below(uint64_t(n)));
            worst = std::max(worst, norm_span_check(bfs_parity_orientation(g, root)));
        }
        ok &= worst <= 1;
        log << "    n = " << n << ": max norm span over 100 seeded connected graphs = " << worst << "\n";
    }
    int small = 0, worst_small = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_connected(g) || g.vertex_count() < 2) continue;
            ++small;
            for (int root = 0; root < g.vertex_count(); ++root)
                worst_small = std::max(worst_small, norm_span_check(bfs_parity_orientation(g, root)));
        }
    ok &= worst_small <= 1;
    log << "    all " << small << " connected graphs on 2..6 vertices, every root: max norm span = "
        << worst_small << "\n";
    return ok;
}

// --- C10: the weak-homomorphism bound and its witness orientation -------------

bool c10(std::ostream& log) {
    SplitMix64 rng(424242);
    int checked = 0, bound_fail = 0, witness_fail = 0;
    while (checked < 200) {
        int tn = 1 + int(rng.below(4));
        Graph target = random_graph(tn, 0.6, rng);
        int sn = 2 + int(rng.below(9)); // source <= 10 vertices
        std::vector<int> map(sn);
        for (int v = 0; v < sn; ++v) map[v] = int(rng.below(uint64_t(tn)));
        std::vector<std::pair<int, int>> allowed;
        for (int u = 0; u < sn; ++u)
            for (int v = u + 1; v < sn; ++v)
                if (map[u] == map[v] || target.has_edge(map[u], map[v])) allowed.push_back({u, v});
        // sparse source so exact ddiam stays cheap
        for (size_t i = allowed.size(); i > 1; --i) std::swap(allowed[i - 1], allowed[rng.below(i)]);
        size_t keep = std::min(allowed.size(), size_t(rng.below(14)));
        Graph source(sn);
        for (size_t i = 0; i < keep; ++i) source.add_edge(allowed[i].first, allowed[i].second);
        WeakHomomorphism f{source, target, map};
        ++checked;

        auto b = weak_hom_bound_check(f);
        if (b.lhs > b.rhs) {
            ++bound_fail;
            continue;
        }

        // Build the proof's witness orientation and verify exhaustively that
        // it contains no isometric I_{rhs+1}.
        std::vector<int> coloring = optimal_coloring(target);
        std::vector<Orientation> fiber_orientations;
        bool built = true;
        for (int y = 0; y < tn && built; ++y) {
            Fiber fib = fiber_of(f, y);
            if (fib.graph.vertex_count() == 0) {
                fiber_orientations.push_back(Orientation(fib.graph));
                continue;
            }
            int dd = ddiam(fib.graph, FamilyKind::paths);
            Digraph pattern = directed_path(dd + 1);
            std::optional<Orientation> witness;
            enumerate_orientations(fib.graph, [&](const Orientation& o) {
                if (!find_embedding(pattern, o, Variant::isometric)) {
                    witness = o;
                    return false;
                }
                return true;
            });
            if (!witness) {
                built = false;
                break;
            }
            fiber_orientations.push_back(*witness);
        }
        if (!built) {
            ++witness_fail; // ddiam says an orientation without I_{dd+1} exists
            continue;
        }
        Orientation composite = composite_orientation(f, coloring, fiber_orientations);
        if (find_embedding(directed_path(b.rhs + 1), composite, Variant::isometric)) ++witness_fail;
    }
    log << "    " << checked << " seeded weak homomorphisms: " << bound_fail
        << " bound violations, " << witness_fail << " witness orientations containing isometric I_{m+1}\n";
    return bound_fail == 0 && witness_fail == 0;
}

// --- C11: certificate soundness + mutation detection --------------------------

bool c11(std::ostream& log) {
    SplitMix64 rng(31337);
    long long produced = 0, invalid = 0, mutations = 0, undetected = 0;

    auto process = [&](const EmbeddingCertificate& cert) {
        ++produced;
        if (!verify_certificate(cert).valid) ++invalid;
        if (cert.pattern.vertex_count() >= 2) {
            EmbeddingCertificate mutated = cert;
            mutated.map[0] = mutated.map[1]; // single-entry perturbation
            ++mutations;
            if (verify_certificate(mutated).valid) ++undetected;
        }
    };

    // exhaustive searcher on random dense hosts
    auto t3 = enumerate_oriented_trees(3);
    auto t4 = enumerate_oriented_trees(4);
    while (produced < 40000) {
        int n = 5 + int(rng.below(6));
        Graph g = random_graph(n, 0.55, rng);
        Orientation o = random_orientation(g, rng);
        const Digraph* pat;
        uint64_t pick = rng.below(4);
        if (pick == 0)
            pat = &t3[rng.below(t3.size())];
        else if (pick == 1)
            pat = &t4[rng.below(t4.size())];
        else {
            static const Digraph i2 = directed_path(2), i3 = directed_path(3);
            pat = pick == 2 ? &i2 : &i3;
        }
        Variant var = pick % 2 ? Variant::isometric : Variant::oriented;
        if (auto cert = find_embedding(*pat, o, var)) process(*cert);
    }
    long long after_find = produced;

    // greedy embedder on dense hosts
    while (produced < 70000) {
        int n = 8 + int(rng.below(6));
        Graph g = random_graph(n, 0.55, rng);
        Orientation o = random_orientation(g, rng);
        int tn = 2 + int(rng.below(3));
        const Digraph& tree = tn == 2 ? t3[0] : (tn == 3 ? t3[rng.below(t3.size())] : t4[rng.below(t4.size())]);
        Digraph pattern = tn == 2 ? directed_path(2) : tree;
        PikhParameters params{pattern.vertex_count(),
                              std::vector<double>(pattern.vertex_count() - 1, 1.0),
                              std::vector<double>(pattern.vertex_count() - 1, 0.5),
                              rng.chance(0.5) ? EmbedMode::isometric : EmbedMode::plain};
        auto r = greedy_tree_embed(o, pattern, params);
        if (greedy_succeeded(r)) process(std::get<EmbeddingCertificate>(r));
    }
    long long after_greedy = produced;

    // pigeonhole embedder on the two paper hosts
    Graph c5 = cycle_graph(5);
    Graph host1 = rectangular_product(c5, complete_graph(6));
    Graph pr = prism();
    Graph host2 = rectangular_product(pr, complete_graph(7));
    while (produced < 100000) {
        try {
            if (rng.chance(0.5)) {
                Orientation host = random_orientation(host1, rng);
                process(pigeonhole_embed(c5, 6, exhaustive_sub_embedder(), host, directed_path(4)));
            } else {
                Orientation host = random_orientation(host2, rng);
                process(pigeonhole_embed(pr, 7, exhaustive_sub_embedder(), host, t4[rng.below(t4.size())]));
            }
        } catch (const std::exception&) {
        }
    }

    log << "    " << produced << " certificates (" << after_find << " exhaustive, "
        << after_greedy - after_find << " greedy, " << produced - after_greedy << " pigeonhole): " << invalid
        << " invalid\n";
    log << "    " << mutations << " duplicate-entry mutations: " << mutations - undetected << " detected ("
        << undetected << " undetected)\n";
    return invalid == 0 && undetected == 0 && produced >= 100000;
}

// --- C12: oracle agreements ----------------------------------------------------

bool c12(std::ostream& log) {
    bool ok = true;

    for (int n = 1; n <= 7; ++n) {
        size_t impl = enumerate_oriented_trees(n).size();
        size_t oracle = oracles::oriented_tree_count_via_prufer(n);
        if (impl != oracle) ok = false;
        if (n == 7)
            log << "    oriented tree classes, n=1..7: implementation matches the Prufer oracle (350 at n=7: "
                << (impl == oracle && impl == 350 ? "yes" : "NO") << ")\n";
    }

    SplitMix64 rng(5150);
    int dm_bad = 0;
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + int(rng.below(32));
        Graph g = random_graph(n, 0.12 + rng.unit() * 0.4, rng);
        if (!(distance_matrix(g) == oracles::floyd_warshall(g))) ++dm_bad;
    }
    ok &= dm_bad == 0;
    log << "    distance_matrix vs Floyd-Warshall on 1000 random graphs (n <= 32): " << dm_bad
        << " mismatches\n";

    // condition-2 exact mode against the min-span table on graphs <= 12 vertices
    int c2_checked = 0, c2_bad = 0;
    auto check_graph = [&](const Graph& g) {
        int n = g.vertex_count();
        for (int k : {2, 3}) {
            for (double w : {1.0, n / 3.0, n / 2.0}) {
                for (double d : {0.5, 1.0, 2.0}) {
                    ++c2_checked;
                    bool exact_ok = !check_condition2_exact(g, k, w, d).has_value();
                    bool table_ok = true;
                    for (int m = 0; m <= n; ++m) {
                        if (double(m) <= w) continue;
                        if (!((long double)min_edge_span(g, m) > (long double)(d + k - 1) * w)) table_ok = false;
                    }
                    if (exact_ok != table_ok) ++c2_bad;
                }
            }
        }
    };
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) check_graph(g);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + int(rng.below(12));
        check_graph(random_graph(n, 0.2 + rng.unit() * 0.5, rng));
    }
    ok &= c2_bad == 0;
    log << "    condition-2 exact mode vs min_edge_span scan: " << c2_checked << " cases ("
        << "atlas <= 7 plus 200 random graphs <= 12 vertices), " << c2_bad << " mismatches\n";
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "exact small values IR(I_1..3), IR(T_3) with witnesses", c01},
        {2, "pigeonhole embeddings on C_5xK_6 and (K_2xK_3)xK_7, 1000 seeds each", c02},
        {3, "tower size recurrence and 2^(2^(k-1)) bound, k <= 20", c03},
        {4, "GHRV equality on all graphs <= 5 vertices", c04},
        {5, "comparability equivalences on all graphs <= 6 vertices", c05},
        {6, "odd cycles: ddiam_I = 3, ddiam_T = 2 for C_5, C_7, C_9", c06},
        {7, "K constant and its minimizer", c07},
        {8, "feasibility pipelines at the stated parameters", c08},
        {9, "layer-parity orientation norm span <= 1", c09},
        {10, "weak-homomorphism bound and witness orientation", c10},
        {11, "certificate soundness, 1e5 round trips + mutation detection", c11},
        {12, "oracle agreements (trees, distances, condition 2)", c12},
    };

    int select = 0; // 0 = all
    if (argc > 1 && std::strcmp(argv[1], "all") != 0) select = std::atoi(argv[1]);

    bool all_ok = true;
    for (const auto& c : criteria) {
        if (select != 0 && c.id != select) continue;
        auto start = std::chrono::steady_clock::now();
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail << "    exception: " << e.what() << "\n";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "C" << (c.id < 10 ? "0" : "") << c.id << " " << (ok ? "PASS" : "FAIL") << " ("
                  << secs << "s) " << c.title << "\n"
                  << detail.str();
        all_ok &= ok;
    }
    return all_ok ? 0 : 1;
}
