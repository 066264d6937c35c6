#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oriray/graph.hpp"

namespace oriray {

/// graph6 one-line encoding (the de-facto standard sparse graph format).
std::string write_graph6(const Graph& g);
Graph read_graph6(const std::string& line);

/// Plain edge list: "n m" header, then m lines "u v".
std::string write_edge_list(const Graph& g);
Graph read_edge_list(const std::string& text);

/// Arc list for digraphs, same "n m" layout with lines meaning u -> v.
std::string write_arc_list(const Digraph& d);
Digraph read_arc_list(const std::string& text);

/// One-line rendering "n m: u>v u>v ..." used by catalog dumps.
std::string arc_line(const Digraph& d);

/// Orientation bit vectors as hex strings over the sorted edge list.
/// Edge i occupies bit (i mod 4) of hex digit (i / 4), least significant
/// bit first within a digit; digits appear in increasing edge order.
std::string bits_to_hex(const std::vector<uint64_t>& bits, int count);
std::vector<uint64_t> hex_to_bits(const std::string& hex, int count);

} // namespace oriray
