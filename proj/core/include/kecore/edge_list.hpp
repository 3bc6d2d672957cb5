#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "kecore/graph.hpp"

namespace kecore {

/// Parses the edge-list text format.
///
/// One declaration per line: `u v` is an undirected edge, `node w` an
/// isolated vertex. `#` starts a comment; blank lines are skipped. Vertex
/// indices follow the order in which labels first appear. The word `node`
/// is reserved and cannot be used as a label.
///
/// Throws ParseError (with line number) on self-loops, duplicate edges or
/// node declarations, malformed lines, and inputs declaring no vertex.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::filesystem::path& path);

/// Canonical text: `node` lines for isolated vertices, then one `u v` line
/// per edge with u < v, all in natural label order.
std::string serialize(const Graph& g);

}  // namespace kecore
