#pragma once

#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

struct VertexCover {
    int size = 0;
    std::vector<int> vertices;
};

// Exact minimum vertex cover by branch and bound (branch on a max-degree
// vertex: either it or its whole neighborhood joins the cover; matching-based
// lower bound for pruning).
VertexCover min_vertex_cover(const Graph& g);

// Closed forms: vc of a k-path and of a {d1,d2,d3}-claw.
int vc_path(int k);
int vc_claw(int d1, int d2, int d3);

}  // namespace minorlab
