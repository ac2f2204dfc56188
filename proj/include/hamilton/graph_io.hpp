#pragma once

#include <string>

#include "hamilton/graph.hpp"

namespace hamilton {

// Text format: header line "n m", then m lines "u v" with 0 <= u < v < n,
// unique, sorted lexicographically ascending, one edge per line, single
// newline separators.
Graph parse_graph_file(const std::string& text);

std::string write_graph_file(const Graph& g);

Graph load_graph_file(const std::string& path);

void save_graph_file(const Graph& g, const std::string& path);

} // namespace hamilton
