#include "oriray/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "oriray/errors.hpp"

namespace oriray {
namespace {

std::vector<int> degree_desc_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

void clique_extend(const Graph& g, std::vector<int>& current, const std::vector<int>& candidates, int& best) {
    if (int(current.size()) + int(candidates.size()) <= best) return;
    if (candidates.empty()) {
        best = std::max(best, int(current.size()));
        return;
    }
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (int(current.size()) + int(candidates.size() - i) <= best) return;
        int v = candidates[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < candidates.size(); ++j)
            if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
        current.push_back(v);
        clique_extend(g, current, next, best);
        current.pop_back();
    }
}

// Backtracking k-colorability with static vertex order and color symmetry
// breaking (a vertex may only open one new color).
bool k_colorable(const Graph& g, const std::vector<int>& order, int k, std::vector<int>& colors, int idx, int used) {
    if (idx == int(order.size())) return true;
    int v = order[idx];
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int j = 0; j < idx && ok; ++j)
            if (colors[order[j]] == c && g.has_edge(v, order[j])) ok = false;
        if (!ok) continue;
        colors[v] = c;
        if (k_colorable(g, order, k, colors, idx + 1, std::max(used, c + 1))) return true;
    }
    colors[v] = -1;
    return false;
}

} // namespace

int greedy_coloring_bound(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    auto order = degree_desc_order(g);
    std::vector<int> color(n, -1);
    int used = 0;
    for (int v : order) {
        Bits taken(used + 1);
        g.neighbors(v).for_each([&](int u) {
            if (color[u] >= 0) taken.set(color[u]);
        });
        int c = 0;
        while (c < used && taken.test(c)) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

int max_clique(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    int best = 0;
    std::vector<int> current;
    std::vector<int> candidates(n);
    std::iota(candidates.begin(), candidates.end(), 0);
    clique_extend(g, current, candidates, best);
    return best;
}

int chromatic_number(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("chromatic_number: empty graph");
    if (n > cap) throw CapExceeded("chromatic_number: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
    int lo = max_clique(g);
    int hi = greedy_coloring_bound(g);
    auto order = degree_desc_order(g);
    for (int k = lo; k < hi; ++k) {
        std::vector<int> colors(n, -1);
        if (k_colorable(g, order, k, colors, 0, 0)) return k;
    }
    return hi;
}

std::vector<int> optimal_coloring(const Graph& g, int cap) {
    int chi = chromatic_number(g, cap);
    auto order = degree_desc_order(g);
    std::vector<int> colors(g.vertex_count(), -1);
    bool ok = k_colorable(g, order, chi, colors, 0, 0);
    (void)ok; // chi-colorable by definition of chi
    return colors;
}

} // namespace oriray
