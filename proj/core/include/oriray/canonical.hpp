#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "oriray/graph.hpp"

namespace oriray {

inline constexpr int kCanonicalCap = 10;

/// Relabeling-invariant key: the lexicographically smallest bit encoding of
/// the adjacency relation over all vertex permutations. Two (di)graphs of the
/// same kind have equal keys iff they are isomorphic.
struct CanonicalForm {
    int n = 0;
    bool directed = false;
    std::vector<uint64_t> key;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Exact canonical form; throws CapExceeded for more than `cap` vertices.
CanonicalForm canonical_form(const Graph& g, int cap = kCanonicalCap);
CanonicalForm canonical_form(const Digraph& d, int cap = kCanonicalCap);

/// Isomorphism-invariant hash usable at any size. Collisions possible; this
/// is explicitly not exact, unlike canonical_form.
uint64_t iso_invariant_hash(const Graph& g);

std::string to_string(const CanonicalForm& f);

} // namespace oriray
