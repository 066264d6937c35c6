#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oriray/catalog.hpp"
#include "oriray/embedding.hpp"
#include "oriray/graph.hpp"
#include "oriray/orientation.hpp"

namespace oriray {

inline constexpr int kLongestPathCap = 16;

struct ArrowOptions {
    int enum_cap = kOrientationEnumCap;
    int threads = 1;
};

/// Outcome of an exhaustive arrow check. When it fails, the counterexample
/// is the lexicographically first orientation missing some family member,
/// and orientations_checked counts the sequential scan up to and including
/// it. When it holds, orientations_checked is the full 2^|E|.
struct ArrowVerdict {
    bool holds = false;
    uint64_t orientations_checked = 0;
    std::optional<Orientation> counterexample;
};

/// Does every orientation of g embed every family member in the given
/// variant? Exhaustive over all 2^|E| orientations; parallelizes over
/// orientation-bit prefixes when opt.threads > 1 with a sequenced reduction,
/// so the verdict is independent of thread count.
ArrowVerdict arrow_check(const Graph& g, const std::vector<Digraph>& family, Variant variant,
                         const ArrowOptions& opt = {});

enum class FamilyKind { paths, trees };

/// Largest n with g => I_n (paths) or g => T_n (trees). Searches upward from
/// n=1; stops at the upper bound min(chi(g), max component diameter + 1).
int ddiam(const Graph& g, FamilyKind kind, const ArrowOptions& opt = {});

struct IrSearchResult {
    bool resolved = false;
    int value = 0;
    std::optional<Graph> witness;
};

/// Smallest n <= max_n such that some graph on n vertices satisfies the
/// isometric arrow for the whole family; scans the atlas in canonical order
/// and returns the first witness.
IrSearchResult ir_search(const std::vector<Digraph>& family, int max_n, const ArrowOptions& opt = {});

/// Maximum number of vertices on a simple directed path (exact, subset DP).
int longest_directed_path(const Digraph& d, int cap = kLongestPathCap);

struct GhrvResult {
    int chi = 0;
    int min_longest_path = 0;
};

/// chi(g) alongside the minimum over all orientations of the longest
/// directed path's vertex count. The two agree on every finite graph.
GhrvResult ghrv_check(const Graph& g, const ArrowOptions& opt = {});

} // namespace oriray
