#include "doctest.h"

#include "oriray/errors.hpp"
#include "oriray/format.hpp"
#include "oriray/rng.hpp"

using namespace oriray;

TEST_CASE("graph6 reference encodings") {
    CHECK(write_graph6(complete_graph(2)) == "A_");
    CHECK(write_graph6(complete_graph(3)) == "Bw");
    CHECK(write_graph6(complete_graph(4)) == "C~");
    CHECK(write_graph6(cycle_graph(5)) == "Dhc");
    CHECK(read_graph6("Dhc") == cycle_graph(5));
    CHECK(read_graph6(">>graph6<<A_\n") == complete_graph(2));
}

TEST_CASE("graph6 round trip") {
    SplitMix64 rng(29);
    for (int t = 0; t < 60; ++t) {
        int n = int(rng.below(80));
        Graph g = random_graph(n, 0.3, rng);
        CHECK(read_graph6(write_graph6(g)) == g);
    }
    // multi-byte size field
    Graph big(100);
    big.add_edge(0, 99);
    CHECK(read_graph6(write_graph6(big)) == big);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(read_graph6(""), ParseError);
    CHECK_THROWS_AS(read_graph6("D"), ParseError);       // truncated bits
    CHECK_THROWS_AS(read_graph6("D\x7fxxx"), ParseError); // byte out of range
}

TEST_CASE("edge list round trip and errors") {
    SplitMix64 rng(31);
    Graph g = random_graph(9, 0.4, rng);
    CHECK(read_edge_list(write_edge_list(g)) == g);
    CHECK_THROWS_WITH_AS(read_edge_list("2 1\n0 two\n"), doctest::Contains("two"), ParseError);
    CHECK_THROWS_AS(read_edge_list("2 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(read_edge_list("2\n"), ParseError);
}

TEST_CASE("arc list round trip") {
    Digraph d(4, {{0, 1}, {2, 1}, {3, 2}});
    CHECK(read_arc_list(write_arc_list(d)) == d);
    CHECK(arc_line(d) == "4 3: 0>1 2>1 3>2");
    CHECK_THROWS_AS(read_arc_list("2 2\n0 1\n1 0\n"), std::invalid_argument);
}

TEST_CASE("graph6 parser survives random byte noise") {
    SplitMix64 rng(37);
    int parsed = 0, rejected = 0;
    for (int t = 0; t < 5000; ++t) {
        int len = 1 + int(rng.below(12));
        std::string s;
        for (int i = 0; i < len; ++i) s.push_back(char(rng.below(256)));
        try {
            Graph g = read_graph6(s);
            ++parsed;
            CHECK(read_graph6(write_graph6(g)) == g);
        } catch (const ParseError&) {
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 5000);
}

TEST_CASE("edge list parser survives token noise") {
    SplitMix64 rng(43);
    const char* tokens[] = {"0", "1", "7", "-3", "x", "2 3", "\n", "99999999999999999999"};
    for (int t = 0; t < 2000; ++t) {
        std::string s;
        int parts = int(rng.below(8));
        for (int i = 0; i < parts; ++i) {
            s += tokens[rng.below(8)];
            s += ' ';
        }
        try {
            (void)read_edge_list(s);
        } catch (const ParseError&) {
        }
    }
    CHECK(true); // no crashes, no non-ParseError escapes
}

TEST_CASE("hex bit strings") {
    std::vector<uint64_t> bits = {0b10110100101ull};
    std::string hex = bits_to_hex(bits, 11);
    CHECK(hex.size() == 3);
    CHECK(hex_to_bits(hex, 11) == bits);
    CHECK_THROWS_AS(hex_to_bits("zz", 8), ParseError);
    CHECK_THROWS_AS(hex_to_bits("abc", 8), ParseError); // wrong length
}
