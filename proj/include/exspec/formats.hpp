#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "exspec/graph.hpp"

namespace exspec {

// --- edge-list text ---
// First non-comment line is the vertex count N, then one "i j" line per edge
// with 1 <= i < j <= N. '#' starts a comment, anywhere on a line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// --- hex upper triangle ---
// Each hex digit expands to 4 bits, most-significant first. The rightmost
// C(N,2) bits of the expanded string fill the strict upper triangle row by
// row: bit 1 -> (1,2), bit 2 -> (1,3), ..., then (2,3), ... Excess leading
// bits must be zero.
Graph parse_hex_upper_triangle(std::string_view hex, int n_vertices);
std::string to_hex_upper_triangle(const Graph& g);

// --- graph6 ---
// Standard graph6 byte layout: N() header then the upper triangle packed
// column by column ((0,1),(0,2),(1,2),(0,3),...), 6 bits per printable byte.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

enum class GraphFormat { edgelist, hex, graph6 };

// Reads one graph from a file. Hex needs the vertex count; '#' comment lines
// are allowed in edge-list and hex files.
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format,
                      int n_vertices_for_hex = 0);

std::string format_name(GraphFormat f);

}  // namespace exspec
