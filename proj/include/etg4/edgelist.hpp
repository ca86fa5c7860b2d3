#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "etg4/graph.hpp"

namespace etg4 {

// Edge-list text format:
//
//   # optional comment lines, anywhere
//   n <vertex_count>
//   <u> <v>
//   ...
//
// Ids are unsigned decimals without leading zeros, fields are separated by a
// single space, every line (including the last) ends in '\n'. Loops,
// out-of-range ids and repeated edges are Parse errors naming the line.

Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& path);

/// Serialises g with edges in id order. Each comment line is emitted as
/// "# <line>" before the header.
std::string format_edge_list(const Graph& g, std::string_view comment = {});
void write_edge_list(const Graph& g, const std::filesystem::path& path,
                     std::string_view comment = {});

}  // namespace etg4
