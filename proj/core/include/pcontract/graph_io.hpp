#pragma once

#include <iosfwd>
#include <string>

#include "pcontract/graph.hpp"

namespace pcontract {

/// Edge-list text: optional `p <n> <m>` header (declares vertices 0..n-1),
/// then one `u v` pair per line. Lines starting with `#` are comments. A line
/// holding a single id declares an isolated vertex.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_string(const std::string& text);
Graph read_edge_list(const std::string& path);

/// Writes the `p` header only when the ids are exactly 0..n-1; other isolated
/// vertices are written as single-id lines.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list_string(const Graph& g);

}  // namespace pcontract
