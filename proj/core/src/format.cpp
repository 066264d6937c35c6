#include "oriray/format.hpp"

#include <sstream>

#include "oriray/errors.hpp"

namespace oriray {
namespace {

void append_g6_size(std::string& out, long long n) {
    if (n < 0) throw ParseError("graph6: negative size");
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int sh = 12; sh >= 0; sh -= 6) out.push_back(char(((n >> sh) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int sh = 30; sh >= 0; sh -= 6) out.push_back(char(((n >> sh) & 63) + 63));
    }
}

long long parse_g6_size(const std::string& s, size_t& pos) {
    auto next = [&]() -> int {
        if (pos >= s.size()) throw ParseError("graph6: truncated size field");
        int c = (unsigned char)s[pos++];
        if (c < 63 || c > 126) throw ParseError(std::string("graph6: bad byte '") + char(c) + "'");
        return c - 63;
    };
    int c0 = next();
    if (c0 < 63) return c0;
    // c0 == 63 means byte 126
    int c1 = next();
    if (c1 < 63) {
        long long n = c1;
        for (int i = 0; i < 2; ++i) n = (n << 6) | next();
        return n;
    }
    long long n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    return n;
}

} // namespace

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    append_g6_size(out, n);
    int bit = 0, acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(char(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    if (bit > 0) out.push_back(char((acc << (6 - bit)) + 63));
    return out;
}

Graph read_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("graph6: empty input");
    size_t pos = 0;
    long long n = parse_g6_size(s, pos);
    if (n > 100000) throw ParseError("graph6: size too large: " + std::to_string(n));
    Graph g(static_cast<int>(n));
    long long need = n * (n - 1) / 2;
    long long bit = 0;
    int i = 0, j = 1;
    for (; pos < s.size() && bit < need; ++pos) {
        int c = (unsigned char)s[pos];
        if (c < 63 || c > 126) throw ParseError(std::string("graph6: bad byte '") + char(c) + "'");
        int v = c - 63;
        for (int k = 5; k >= 0 && bit < need; --k, ++bit) {
            if ((v >> k) & 1) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    if (bit < need) throw ParseError("graph6: truncated adjacency bits");
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

std::vector<std::pair<int, int>> read_pair_list(const std::string& text, int& n, const char* what) {
    std::istringstream in(text);
    std::string tok;
    auto next_int = [&](const char* field) -> long long {
        if (!(in >> tok)) throw ParseError(std::string(what) + ": missing " + field);
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw ParseError(std::string(what) + ": bad token '" + tok + "'");
        }
    };
    long long nn = next_int("vertex count");
    long long m = next_int("edge count");
    if (nn < 0 || nn > 100000) throw ParseError(std::string(what) + ": bad vertex count '" + std::to_string(nn) + "'");
    if (m < 0) throw ParseError(std::string(what) + ": bad edge count");
    n = int(nn);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(size_t(m));
    for (long long e = 0; e < m; ++e) {
        long long u = next_int("endpoint");
        long long v = next_int("endpoint");
        if (u < 0 || u >= nn || v < 0 || v >= nn)
            throw ParseError(std::string(what) + ": endpoint out of range '" + std::to_string(u > v ? u : v) + "'");
        pairs.emplace_back(int(u), int(v));
    }
    return pairs;
}

} // namespace

Graph read_edge_list(const std::string& text) {
    int n = 0;
    auto pairs = read_pair_list(text, n, "edge list");
    Graph g(n);
    for (auto [u, v] : pairs) {
        if (u == v) throw ParseError("edge list: loop edge '" + std::to_string(u) + "'");
        g.add_edge(u, v);
    }
    return g;
}

std::string write_arc_list(const Digraph& d) {
    std::ostringstream out;
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

Digraph read_arc_list(const std::string& text) {
    int n = 0;
    auto pairs = read_pair_list(text, n, "arc list");
    Digraph d(n);
    for (auto [u, v] : pairs) {
        if (u == v) throw ParseError("arc list: loop arc '" + std::to_string(u) + "'");
        d.add_arc(u, v);
    }
    return d;
}

std::string arc_line(const Digraph& d) {
    std::ostringstream out;
    out << d.vertex_count() << ' ' << d.arc_count() << ':';
    for (auto [u, v] : d.arcs()) out << ' ' << u << '>' << v;
    return out.str();
}

std::string bits_to_hex(const std::vector<uint64_t>& bits, int count) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (int i = 0; i < count; i += 4) {
        int digit = 0;
        for (int b = 0; b < 4 && i + b < count; ++b)
            if ((bits[(i + b) >> 6] >> ((i + b) & 63)) & 1u) digit |= 1 << b;
        out.push_back(hex[digit]);
    }
    return out;
}

std::vector<uint64_t> hex_to_bits(const std::string& hex, int count) {
    if (int(hex.size()) != (count + 3) / 4)
        throw ParseError("orientation bits: expected " + std::to_string((count + 3) / 4) +
                         " hex digits, got '" + hex + "'");
    std::vector<uint64_t> bits((count + 63) / 64, 0);
    for (int i = 0; i < count; ++i) {
        char c = hex[i / 4];
        int digit;
        if (c >= '0' && c <= '9')
            digit = c - '0';
        else if (c >= 'a' && c <= 'f')
            digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            digit = c - 'A' + 10;
        else
            throw ParseError(std::string("orientation bits: bad hex digit '") + c + "'");
        if ((digit >> (i & 3)) & 1) bits[i >> 6] |= uint64_t{1} << (i & 63);
    }
    return bits;
}

} // namespace oriray
