#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "oriray/embedding.hpp"
#include "oriray/graph.hpp"
#include "oriray/orientation.hpp"
#include "oriray/rng.hpp"

namespace oriray {

inline constexpr int kCondition2VertexCap = 20;
inline constexpr long long kCondition1PairCap = 10'000'000;

enum class EmbedMode { isometric, plain };

/// The (w_k, d_k) sequences steering the greedy embedding; sequences are
/// indexed 1..n-1 (stored 0-based). Only positivity is required of w_1, d_1;
/// they enter solely through the budget sum.
struct PikhParameters {
    int n = 0;
    std::vector<double> w;
    std::vector<double> d;
    EmbedMode mode = EmbedMode::isometric;
};

/// A (v, s_1..s_{k-1}) tuple whose blocked neighbor set exceeds d_k.
struct Condition1Witness {
    int v = 0;
    std::vector<int> s;
    std::vector<int> y;
};

/// A vertex set larger than w_k spanning too few edges.
struct Condition2Witness {
    std::vector<int> w_set;
    long long spanned = 0;
};

/// Exhaustive check of the degree/distance condition at index k: for every
/// ordered tuple (s_1..s_{k-1}) and every v outside it, at most d_k
/// neighbors y of v satisfy dist_{G-v}(y, s_i) <= i for some i (<= 1 in
/// plain mode). Returns the lexicographically first violating tuple.
std::optional<Condition1Witness> check_condition1(const Graph& g, int k, double d_k, EmbedMode mode,
                                                  long long pair_cap = kCondition1PairCap);

/// Exhaustive check that every W with |W| > w_k spans more than
/// (d_k + k - 1) * w_k edges; full subset scan via per-cardinality minima.
std::optional<Condition2Witness> check_condition2_exact(const Graph& g, int k, double w_k, double d_k,
                                                        int vertex_cap = kCondition2VertexCap);

/// Randomized falsifier for the same condition; can produce a witness but
/// never certifies.
std::optional<Condition2Witness> check_condition2_sampled(const Graph& g, int k, double w_k, double d_k,
                                                          int trials, SplitMix64& rng);

/// Budget condition: sum of w_k strictly below the vertex count.
bool check_condition3(const std::vector<double>& w, int n_vertices);

/// Minimum number of edges spanned by any m-subset of vertices.
long long min_edge_span(const Graph& g, int m, int vertex_cap = kCondition2VertexCap);

/// Where the greedy induction ran out of extension candidates. All sets are
/// recorded so the emptiness re-verifies from first principles.
struct FailureTrace {
    int step_k = 0;          // size of the subtree being extended
    int tree_vertex = -1;    // pendant being placed (-1: base case on empty set)
    int anchor_vertex = -1;  // its neighbor in the tree
    int anchor_image = -1;
    bool out_direction = true; // arc anchor->pendant (out) vs pendant->anchor
    std::vector<int> u_set;    // admissible host vertices at this step
    std::vector<int> w_set;    // low-degree set of this step (diagnostic only)
    std::vector<int> y_set;    // distance-blocked neighbors of the anchor image
    std::vector<int> s_images; // images of the already-embedded tree minus anchor
};

using GreedyResult = std::variant<EmbeddingCertificate, FailureTrace>;

bool greedy_succeeded(const GreedyResult& r);

/// The inductive pendant-peeling embedding: recursively embeds the tree
/// minus its lowest pendant into the host minus the low-out-degree set W,
/// then extends along an arc of the anchor avoiding the blocked set Y and
/// the used images. Succeeds with an isometric (or, in plain mode, oriented)
/// certificate; failure is a value, not an error.
GreedyResult greedy_tree_embed(const Orientation& host, const Digraph& tree, const PikhParameters& params);

/// Recomputes the candidate set recorded by a FailureTrace; true iff it is
/// genuinely empty.
bool failure_trace_reverifies(const Orientation& host, const Digraph& tree, const PikhParameters& params,
                              const FailureTrace& trace);

} // namespace oriray
