#pragma once
#include <string>

#include "spex/graph.hpp"

namespace spex {

// graph6 text encoding, n <= 62 (single-byte order field).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Plain edge list: first line "n m", then m lines "u v", 0-based, LF endings.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

// Reads a graph file; format chosen by extension (.g6 -> graph6, anything else
// -> edge list). write_graph_file mirrors the choice.
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace spex
