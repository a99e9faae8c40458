#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// Canonical byte string: [n] followed by the upper-triangle bits of the
// lexicographically smallest adjacency encoding over all vertex orderings
// (bits appended column-wise as each vertex is placed). Two graphs have equal
// canonical forms iff they are isomorphic. Brute-force search with prefix
// pruning and twin elimination; intended for graphs up to ~12 vertices and
// refuses beyond kCanonicalMaxVertices.
constexpr int kCanonicalMaxVertices = 20;

std::vector<std::uint8_t> canonical_form(const Graph& g);
std::string canonical_hex(const Graph& g);  // lowercase hex of the byte string

bool is_isomorphic(const Graph& a, const Graph& b);

// Vertex ordering realizing the canonical form (vertex placed at position i).
std::vector<int> canonical_order(const Graph& g);

}  // namespace minorlab
