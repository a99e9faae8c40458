#pragma once

#include <iosfwd>
#include <string>

#include "minorlab/graph.hpp"

namespace minorlab {

// Text format: first line "n m", then m lines "u v" with 0-based indices.
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

// Standard graph6 encoding (one graph per string, no header required).
Graph read_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

// Auto-detects text vs graph6 content.
Graph parse_graph(const std::string& content);
Graph load_graph_file(const std::string& path);

// Builtin pattern names: kpath:N, cycle:N, claw:a,b,c, clique:N,
// biclique:s,t, star:N, and the shorthand cN for cycle:N. An optional
// "builtin:" prefix is accepted. Anything else is treated as a file path.
Graph resolve_pattern(const std::string& spec);

}  // namespace minorlab
