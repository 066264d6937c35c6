#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "oriray/bigint.hpp"
#include "oriray/embedding.hpp"
#include "oriray/graph.hpp"
#include "oriray/orientation.hpp"

namespace oriray {

inline constexpr int kTowerMaterializeCap = 4;
inline constexpr int kTransitiveEdgeCap = 20;
inline constexpr int kOddWalkVertexCap = 10;

/// The recursive product family: level 1 is K_1 and level k+1 is
/// level_k x K_{a_k + 1}, with sizes a_1 = 1, a_{k+1} = a_k (a_k + 1).
/// Level k isometrically arrows every oriented tree on k vertices.
struct TowerFamily {
    std::vector<Graph> levels;   // materialized levels 1..min(n, cap)
    std::vector<BigUint> sizes;  // a_1..a_n
};

TowerFamily tower_family(int n, int materialize_cap = kTowerMaterializeCap);

/// Orientation from breadth-first layers: for an edge climbing one layer,
/// the arc leaves the even-norm endpoint; edges inside a layer run from the
/// lower to the higher vertex index.
struct BfsOrientationResult {
    Orientation orientation;
    std::vector<int> norms; // BFS distance from the root
};

BfsOrientationResult bfs_parity_orientation(const Graph& g, int root);

/// Maximum |norm(u) - norm(v)| over ordered pairs where v is reachable from
/// u along arcs. Always <= 1 for a bfs_parity_orientation.
int norm_span_check(const BfsOrientationResult& r);

/// A transitive orientation if one exists (g is a comparability graph),
/// otherwise nullopt. Backtracking over edge directions with transitive-
/// closure propagation; exact.
std::optional<Orientation> transitive_orientation(const Graph& g, int edge_cap = kTransitiveEdgeCap);

/// True iff every odd closed walk of length >= 5 (no immediate backtracking)
/// has a triangular chord {v_i, v_{i+2}}. Equivalent to g being a
/// comparability graph. Decided via parity of cycles in the chordless-step
/// transition digraph on arcs.
bool odd_cycle_chord_check(const Graph& g, int vertex_cap = kOddWalkVertexCap);

/// Vertex map where every source edge collapses or lands on a target edge.
struct WeakHomomorphism {
    Graph source;
    Graph target;
    std::vector<int> map; // source vertex -> target vertex
};

bool is_weak_homomorphism(const WeakHomomorphism& f);

/// The subgraph of the source induced by one preimage, relabeled 0..k-1.
struct Fiber {
    std::vector<int> vertices; // source ids, ascending; index = local label
    Graph graph;
};

Fiber fiber_of(const WeakHomomorphism& f, int y);

/// Orientation of the source graph: arcs run toward the higher target color
/// across fibers and follow the supplied per-fiber orientation inside them.
/// `coloring` must be proper on the target; fiber_orientations[y] orients
/// fiber_of(f, y).graph.
Orientation composite_orientation(const WeakHomomorphism& f,
                                  const std::vector<int>& coloring,
                                  const std::vector<Orientation>& fiber_orientations);

struct WeakHomBound {
    int lhs = 0; // ddiam_I(source)
    int rhs = 0; // max over F subset of V_target, |F| <= chi(target), of the fiber ddiam sum
};

/// Evaluates both sides of the weak-homomorphism bound; lhs <= rhs always.
WeakHomBound weak_hom_bound_check(const WeakHomomorphism& f);

/// Callable embedding a given oriented tree isometrically into one oriented
/// copy of the base graph; returns the vertex map into the base graph.
using SubEmbedder = std::function<std::optional<std::vector<int>>(const Orientation& copy, const Digraph& tree)>;

/// The exhaustive searcher as a SubEmbedder.
SubEmbedder exhaustive_sub_embedder();

/// Pigeonhole step: host must be an orientation of rectangular_product(g,
/// K_copies) with copies >= |g| + 1. Embeds tree-minus-pendant in every copy
/// via sub, finds two copies agreeing at the attachment image, and extends
/// along the matching K-edge. Throws if a sub-embedding fails.
EmbeddingCertificate pigeonhole_embed(const Graph& g, int copies, const SubEmbedder& sub,
                                      const Orientation& host, const Digraph& tree);

/// pigeonhole_embed itself as a SubEmbedder for product-of-product hosts,
/// enabling recursion across tower levels.
SubEmbedder pigeonhole_sub_embedder(const Graph& inner_g, int inner_copies, const SubEmbedder& inner_sub);

/// The inherited orientation of the copy g x {u} inside an orientation of
/// rectangular_product(g, K_copies).
Orientation extract_copy_orientation(const Graph& g, int copies, const Orientation& host, int u);

} // namespace oriray
