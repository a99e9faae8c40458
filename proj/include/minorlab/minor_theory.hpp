#pragma once

#include <vector>

#include "minorlab/containment.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

// An edge is internal iff it lies on a cycle or on a path joining two
// vertices of degree >= 3; all other edges are external, and an edge is
// external iff it lies on a dangling path. Both characterizations are
// computed and cross-checked on every call.
struct EdgeClassification {
    std::vector<std::pair<int, int>> internal_edges;  // u < v, lexicographic
    std::vector<std::pair<int, int>> external_edges;
    std::vector<std::vector<int>> dangling_paths;  // maximal walk from each degree-1 vertex
};

EdgeClassification classify_edges(const Graph& g);

// Number of internal edges; monotone under topological minors.
int beta(const Graph& g);

// Deletes edge (u,v) and attaches a fresh path of p edges at u and one of q
// edges at v. Applied to an internal edge this strictly decreases beta.
Graph replace_edge_with_paths(const Graph& g, int u, int v, int p, int q);

// True iff every connected component is a subdivision of a star
// (equivalently: acyclic with at most one vertex of degree >= 3 per
// component). Coincides with beta == 0.
bool is_star_subdivision_family(const Graph& h);

// True iff every component is a path or a subdivision of the claw; exactly
// the patterns whose minor containment coincides with subgraph containment.
bool is_path_or_claw_family(const Graph& h);

// Forbidden sets: S is checked as topological minors, B as subgraphs.
// Graphs are deduplicated by canonical form on insertion.
struct ForbiddenFamily {
    std::vector<Graph> topological_minors;  // S
    std::vector<Graph> subgraphs;           // B

    static ForbiddenFamily make(std::vector<Graph> s, std::vector<Graph> b);
};

// Bounded experimental check of edge suitability: for all 1 <= p,q <= lmax,
// does replace_edge_with_paths(g, e, p, q) avoid every graph of S as a
// topological minor and every graph of B as a subgraph? Reports the first
// failing (p, q) in lexicographic order, or suitability up to the bound.
struct SuitabilityVerdict {
    bool suitable = false;
    int lmax = 0;
    int fail_p = 0, fail_q = 0;  // set when unsuitable
};

SuitabilityVerdict check_edge_suitability(const ForbiddenFamily& family, const Graph& g, int u, int v,
                                          int lmax, const SearchLimits& limits = default_limits());

}  // namespace minorlab
