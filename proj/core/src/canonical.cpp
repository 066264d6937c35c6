#include "oriray/canonical.hpp"

#include <algorithm>

#include "oriray/errors.hpp"

namespace oriray {
namespace {

// Bit-string buffer addressed most-significant-bit-first, so that the packed
// word vector compares lexicographically like the underlying bit string.
struct BitBuf {
    std::vector<uint64_t> words;
    explicit BitBuf(int bits) : words((bits + 63) / 64, 0) {}
    void assign(int pos, bool v) {
        uint64_t mask = uint64_t{1} << (63 - (pos & 63));
        if (v)
            words[pos >> 6] |= mask;
        else
            words[pos >> 6] &= ~mask;
    }
    bool get(int pos) const { return (words[pos >> 6] >> (63 - (pos & 63))) & 1u; }
    void fill_ones_from(int pos) {
        if (words.empty()) return;
        int w = pos >> 6, b = pos & 63;
        words[w] |= (b == 0) ? ~uint64_t{0} : (~uint64_t{0} >> b);
        for (size_t i = w + 1; i < words.size(); ++i) words[i] = ~uint64_t{0};
    }
};

// Finds the permutation minimizing the adjacency bit string. Vertices are
// placed one position at a time; the bit layout is chosen so that placing
// position p appends one contiguous block of bits, enabling prefix pruning
// against the best string found so far.
//
// Undirected layout (column-major upper triangle, the graph6 order):
//   position p contributes bits adj(pi(i), pi(p)) for i = 0..p-1.
// Directed layout:
//   position p contributes adj(pi(i), pi(p)), adj(pi(p), pi(i)) for i = 0..p-1.
//
// best_ is maintained as "committed prefix + all-ones suffix"; whenever a
// block strictly below best_ is found, it is committed and the suffix reset,
// so the search path is always compared tight against best_.
class MinStringSearch {
public:
    MinStringSearch(int n, bool directed, const std::vector<Bits>* out, const std::vector<Bits>* in)
        : n_(n), directed_(directed), out_(out), in_(in),
          total_bits_(directed ? n * (n - 1) : n * (n - 1) / 2),
          best_(total_bits_), cur_(total_bits_), perm_(n), used_(n, false) {}

    std::vector<uint64_t> run() {
        // Seed with the identity permutation so pruning has a baseline.
        int pos = 0;
        for (int p = 0; p < n_; ++p)
            for (int i = 0; i < p; ++i) {
                best_.assign(pos++, (*out_)[i].test(p));
                if (directed_) best_.assign(pos++, (*in_)[i].test(p));
            }
        search(0, 0);
        // fill_ones_from may have set padding bits past total_bits_;
        // normalize so equal strings give equal words.
        if (total_bits_ % 64 && !best_.words.empty())
            best_.words.back() &= ~uint64_t{0} << (64 - total_bits_ % 64);
        return best_.words;
    }

private:
    // Writes the block for placing vertex v at position p into cur_ at bit
    // offset pos. Returns <0 if the block exceeds best_ there, 0 if equal,
    // >0 if strictly smaller.
    int place(int p, int v, int pos) {
        int cmp = 0;
        for (int i = 0; i < p; ++i) {
            bool b = (*out_)[perm_[i]].test(v);
            cur_.assign(pos, b);
            if (cmp == 0 && b != best_.get(pos)) cmp = b ? -1 : 1;
            ++pos;
            if (directed_) {
                bool b2 = in_->at(perm_[i]).test(v);
                cur_.assign(pos, b2);
                if (cmp == 0 && b2 != best_.get(pos)) cmp = b2 ? -1 : 1;
                ++pos;
            }
        }
        return cmp;
    }

    void search(int p, int pos) {
        if (p == n_) return;
        int block = directed_ ? 2 * p : p;
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            perm_[p] = v;
            int cmp = place(p, v, pos);
            if (cmp < 0) continue;
            if (cmp > 0) {
                for (int b = pos; b < pos + block; ++b) best_.assign(b, cur_.get(b));
                best_.fill_ones_from(pos + block);
            }
            used_[v] = true;
            search(p + 1, pos + block);
            used_[v] = false;
        }
    }

    int n_;
    bool directed_;
    const std::vector<Bits>* out_;
    const std::vector<Bits>* in_;
    int total_bits_;
    BitBuf best_, cur_;
    std::vector<int> perm_;
    std::vector<bool> used_;
};

} // namespace

CanonicalForm canonical_form(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap) throw CapExceeded("canonical_form: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
    if (n <= 1) return {n, false, {}};
    std::vector<Bits> adj(n, Bits(n));
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    MinStringSearch s(n, false, &adj, nullptr);
    return {n, false, s.run()};
}

CanonicalForm canonical_form(const Digraph& d, int cap) {
    int n = d.vertex_count();
    if (n > cap) throw CapExceeded("canonical_form: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
    if (n <= 1) return {n, true, {}};
    std::vector<Bits> out(n, Bits(n)), in(n, Bits(n));
    for (int v = 0; v < n; ++v) {
        out[v] = d.out_neighbors(v);
        in[v] = d.in_neighbors(v);
    }
    MinStringSearch s(n, true, &out, &in);
    return {n, true, s.run()};
}

uint64_t iso_invariant_hash(const Graph& g) {
    // Degree multiset plus sorted distance-profile multiset; invariant under
    // relabeling but not collision-free.
    auto dm = distance_matrix(g);
    int n = g.vertex_count();
    std::vector<uint64_t> profile(n, 0);
    for (int v = 0; v < n; ++v) {
        std::vector<int> row(n);
        for (int u = 0; u < n; ++u) row[u] = is_infinite(dm.at(v, u)) ? -1 : dm.at(v, u);
        std::sort(row.begin(), row.end());
        uint64_t h = 1469598103934665603ull;
        for (int x : row) {
            h ^= uint64_t(uint32_t(x));
            h *= 1099511628211ull;
        }
        profile[v] = h;
    }
    std::sort(profile.begin(), profile.end());
    uint64_t h = 1469598103934665603ull ^ uint64_t(n);
    for (uint64_t x : profile) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_string(const CanonicalForm& f) {
    std::string s = (f.directed ? "D" : "G") + std::to_string(f.n) + ":";
    static const char* hex = "0123456789abcdef";
    for (uint64_t w : f.key)
        for (int sh = 60; sh >= 0; sh -= 4) s.push_back(hex[(w >> sh) & 15]);
    return s;
}

} // namespace oriray
