#pragma once

#include <vector>

#include "oriray/canonical.hpp"
#include "oriray/graph.hpp"

namespace oriray {

inline constexpr int kTreeEnumCap = 9;
inline constexpr int kAtlasCap = 7;

/// The directed path I_n: vertices 0..n-1, arcs (i-1, i).
Digraph directed_path(int n);

/// All free (unlabeled) trees on n vertices, one per isomorphism class,
/// ordered by canonical form.
std::vector<Graph> enumerate_free_trees(int n, int cap = kTreeEnumCap);

/// All oriented trees on n vertices up to digraph isomorphism, ordered by
/// canonical form. Throws CapExceeded above the cap.
std::vector<Digraph> enumerate_oriented_trees(int n, int cap = kTreeEnumCap);

/// All undirected graphs on n vertices up to isomorphism, ordered by
/// canonical form. Throws CapExceeded above the cap (default 7).
std::vector<Graph> enumerate_graphs(int n, int cap = kAtlasCap);

/// Two-layer doubling of an acyclic connected digraph h: layer 0 carries h,
/// layer 1 carries h reversed, and a single arc joins the two copies of the
/// root. Vertex (x, layer) gets index layer*|h| + x. The result is acyclic
/// and connected and both layers are isometric copies.
Digraph gamma_construction(const Digraph& h, int root);

} // namespace oriray
