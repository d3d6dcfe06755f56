#pragma once

#include <iosfwd>
#include <string>

#include "sepbip/graph.hpp"

namespace sepbip {

// Interchange format for all CLI commands:
//   first line "n m", then m lines "u v", 0-based ids,
//   ascending canonical order on output (u < v, sorted pairs).

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace sepbip
