#include "oriray/embedding.hpp"

#include <algorithm>
#include <stdexcept>

namespace oriray {

std::string to_string(Variant v) {
    switch (v) {
    case Variant::weak: return "weak";
    case Variant::oriented: return "oriented";
    case Variant::isometric: return "isometric";
    }
    return "?";
}

Variant variant_from_string(const std::string& s) {
    if (s == "weak") return Variant::weak;
    if (s == "oriented") return Variant::oriented;
    if (s == "isometric") return Variant::isometric;
    throw std::invalid_argument("unknown variant '" + s + "'");
}

PreparedPattern prepare_pattern(const Digraph& pattern) {
    PreparedPattern pp{pattern, {}, {}};
    Graph shadow = pattern.shadow();
    pp.dist = distance_matrix(shadow);
    // BFS order from vertex 0, components appended; keeps each placed vertex
    // adjacent to an earlier one inside its component for tight pruning.
    int n = pattern.vertex_count();
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> queue = {start};
        seen[start] = true;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            pp.order.push_back(u);
            shadow.neighbors(u).for_each([&](int v) {
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            });
        }
    }
    return pp;
}

namespace {

struct Searcher {
    const PreparedPattern& pp;
    int host_n;
    const std::vector<Bits>& host_out;
    const DistanceMatrix& host_dist;
    Variant variant;
    std::vector<int> image;  // pattern vertex -> host vertex or -1
    std::vector<bool> used;  // host vertex occupied

    bool consistent(int q, int h) const {
        const Digraph& pat = pp.pattern;
        for (int idx = 0; idx < int(pp.order.size()); ++idx) {
            int p = pp.order[idx];
            if (image[p] < 0) break; // placement follows pp.order, so q is first unassigned
            int fp = image[p];
            bool arc_pq = pat.has_arc(p, q);
            bool arc_qp = pat.has_arc(q, p);
            bool harc_fp_h = host_out[fp].test(h);
            bool harc_h_fp = host_out[h].test(fp);
            switch (variant) {
            case Variant::weak:
                if (arc_pq && !harc_fp_h) return false;
                if (arc_qp && !harc_h_fp) return false;
                break;
            case Variant::oriented:
                if (arc_pq != harc_fp_h) return false;
                if (arc_qp != harc_h_fp) return false;
                break;
            case Variant::isometric: {
                if (pp.dist.at(p, q) != host_dist.at(fp, h)) return false;
                if (arc_pq && !harc_fp_h) return false;
                if (arc_qp && !harc_h_fp) return false;
                break;
            }
            }
        }
        return true;
    }

    bool search(int idx) {
        if (idx == int(pp.order.size())) return true;
        int q = pp.order[idx];
        for (int h = 0; h < host_n; ++h) {
            if (used[h]) continue;
            if (!consistent(q, h)) continue;
            image[q] = h;
            used[h] = true;
            if (search(idx + 1)) return true;
            used[h] = false;
            image[q] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_embedding_map(const PreparedPattern& pp,
                                                   int host_n,
                                                   const std::vector<Bits>& host_out,
                                                   const DistanceMatrix& host_dist,
                                                   Variant variant) {
    int np = pp.pattern.vertex_count();
    if (np > host_n) return std::nullopt;
    Searcher s{pp, host_n, host_out, host_dist, variant,
               std::vector<int>(np, -1), std::vector<bool>(host_n, false)};
    if (!s.search(0)) return std::nullopt;
    return s.image;
}

std::optional<EmbeddingCertificate> find_embedding(const Digraph& pattern,
                                                   const Orientation& host,
                                                   Variant variant) {
    PreparedPattern pp = prepare_pattern(pattern);
    int hn = host.host.vertex_count();
    std::vector<Bits> out(hn, Bits(hn));
    for (int i = 0; i < host.host.edge_count(); ++i) {
        auto [u, v] = host.arc(i);
        out[u].set(v);
    }
    DistanceMatrix hd = distance_matrix(host.host);
    auto map = find_embedding_map(pp, hn, out, hd, variant);
    if (!map) return std::nullopt;
    return EmbeddingCertificate{pattern, host, *map, variant};
}

VerifyResult verify_certificate(const EmbeddingCertificate& cert) {
    const Digraph& pat = cert.pattern;
    const Graph& hg = cert.host.host;
    int np = pat.vertex_count(), nh = hg.vertex_count();
    if (int(cert.map.size()) != np) return {false, "map size != pattern order"};
    if (np > nh) return {false, "pattern larger than host"};
    if (int(cert.host.bits.size()) != (hg.edge_count() + 63) / 64)
        return {false, "orientation bit vector has wrong length"};

    std::vector<bool> used(nh, false);
    for (int v = 0; v < np; ++v) {
        int h = cert.map[v];
        if (h < 0 || h >= nh) return {false, "map entry out of range at vertex " + std::to_string(v)};
        if (used[h]) return {false, "map not injective at vertex " + std::to_string(v)};
        used[h] = true;
    }

    // Host arcs straight from the definition of the orientation bits.
    auto host_arc = [&](int u, int v) {
        int idx = hg.edge_index(u, v);
        if (idx < 0) return false;
        auto [a, b] = cert.host.arc(idx);
        return a == u && b == v;
    };

    for (auto [u, v] : pat.arcs()) {
        if (!host_arc(cert.map[u], cert.map[v]))
            return {false, "pattern arc (" + std::to_string(u) + "," + std::to_string(v) + ") not carried to a host arc"};
    }
    if (cert.variant == Variant::weak) return {true, ""};

    // oriented: exact arc correspondence in both directions (induced copy).
    for (int u = 0; u < np; ++u)
        for (int v = 0; v < np; ++v) {
            if (u == v) continue;
            if (pat.has_arc(u, v) != host_arc(cert.map[u], cert.map[v]))
                return {false, "arc correspondence fails on pair (" + std::to_string(u) + "," + std::to_string(v) + ")"};
        }
    if (cert.variant == Variant::oriented) return {true, ""};

    // isometric: distances in the pattern shadow equal distances in the host.
    DistanceMatrix pd = distance_matrix(pat.shadow());
    DistanceMatrix hd = distance_matrix(hg);
    for (int u = 0; u < np; ++u)
        for (int v = u + 1; v < np; ++v) {
            if (pd.at(u, v) != hd.at(cert.map[u], cert.map[v]))
                return {false, "distance mismatch on pair (" + std::to_string(u) + "," + std::to_string(v) + ")"};
        }
    return {true, ""};
}

} // namespace oriray
