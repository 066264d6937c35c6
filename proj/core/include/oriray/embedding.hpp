#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oriray/graph.hpp"
#include "oriray/orientation.hpp"

namespace oriray {

/// The three arrow flavors. weak: arc-preserving injection. oriented:
/// induced, direction-preserving copy. isometric: oriented plus exact
/// pairwise hop distances in the undirected host.
enum class Variant { weak, oriented, isometric };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct EmbeddingCertificate {
    Digraph pattern;
    Orientation host;
    std::vector<int> map; // pattern vertex -> host vertex
    Variant variant = Variant::isometric;
};

/// Pattern data reused across many hosts/orientations.
struct PreparedPattern {
    Digraph pattern;
    DistanceMatrix dist;
    std::vector<int> order; // placement order, connectivity-respecting
};

PreparedPattern prepare_pattern(const Digraph& pattern);

/// Core search against a host given as out-neighbor bitsets plus the shadow
/// distance matrix. Returns the first embedding in deterministic order, or
/// nullopt. Exact (exhaustive backtracking).
std::optional<std::vector<int>> find_embedding_map(const PreparedPattern& pp,
                                                   int host_n,
                                                   const std::vector<Bits>& host_out,
                                                   const DistanceMatrix& host_dist,
                                                   Variant variant);

std::optional<EmbeddingCertificate> find_embedding(const Digraph& pattern,
                                                   const Orientation& host,
                                                   Variant variant);

struct VerifyResult {
    bool valid = false;
    std::string reason;
};

/// Re-checks a certificate from scratch against the definitional predicate
/// of its variant. Shares no code with the search.
VerifyResult verify_certificate(const EmbeddingCertificate& cert);

} // namespace oriray
