#pragma once

#include "oriray/graph.hpp"

namespace oriray {

inline constexpr int kChromaticCap = 16;

/// Greedy coloring in degree-descending order; an upper bound on chi.
int greedy_coloring_bound(const Graph& g);

/// Exact maximum clique size (branch and bound); a lower bound on chi.
int max_clique(const Graph& g);

/// Exact chromatic number. Branch and bound between the clique lower bound
/// and the greedy upper bound. Throws CapExceeded above `cap` vertices.
int chromatic_number(const Graph& g, int cap = kChromaticCap);

/// A proper coloring with exactly chromatic_number(g) colors, 0-based.
std::vector<int> optimal_coloring(const Graph& g, int cap = kChromaticCap);

} // namespace oriray
