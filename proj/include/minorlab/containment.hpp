#pragma once

#include <optional>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// Removes edge (u,v) and routes it through a fresh vertex (index n).
Graph subdivide_edge(const Graph& g, int u, int v);

// Shrinks edge (u,v) to a point. The merged vertex sits at min(u,v); vertices
// above max(u,v) shift down by one. Parallel edges collapse.
Graph contract_edge(const Graph& g, int u, int v);

// Deletes every degree-one vertex that is not an endpoint of an isolated
// edge, in one pass. kept[i] is the original index of surviving vertex i.
struct PendantStripped {
    Graph graph;
    std::vector<int> kept;
};
PendantStripped strip_pendant_leaves(const Graph& h);

enum class ContainmentKind { subgraph, induced_subgraph, minor, topological_minor };

struct ContainmentWitness {
    ContainmentKind kind = ContainmentKind::subgraph;
    // Image of each pattern vertex (subgraph / induced / topological-minor).
    std::vector<int> vertex_map;
    // Minor only: disjoint connected branch sets, one per pattern vertex.
    std::vector<std::vector<int>> branch_sets;
    // Topological minor only: per pattern edge (in lexicographic edge order),
    // the full vertex sequence of its host path, endpoints included.
    std::vector<std::vector<int>> paths;
};

bool verify_witness(const Graph& pattern, const Graph& host, const ContainmentWitness& w);

// H <=_S G (or induced). Backtracking over injective maps in natural vertex
// order with degree pruning; the returned vertex map is lexicographically
// smallest.
std::optional<ContainmentWitness> is_subgraph(const Graph& pattern, const Graph& host,
                                              bool induced = false,
                                              const SearchLimits& limits = default_limits());

// H <=_M G via search over disjoint connected branch sets.
std::optional<ContainmentWitness> is_minor(const Graph& pattern, const Graph& host,
                                           const SearchLimits& limits = default_limits());

// Independent minor oracle: breadth-first closure of the host under single
// edge deletions, edge contractions, and isolated-vertex deletions, deduped
// by canonical form.
bool minor_closure_contains(const Graph& pattern, const Graph& host,
                            const SearchLimits& limits = default_limits());

// H <=_T G: injective branch-vertex map plus internally vertex-disjoint paths
// realizing every pattern edge.
std::optional<ContainmentWitness> is_topological_minor(const Graph& pattern, const Graph& host,
                                                       const SearchLimits& limits = default_limits());

// One representative per isomorphism class of subdivisions of H with at most
// max_extra added vertices; includes H itself.
std::vector<Graph> enumerate_subdivisions(const Graph& h, int max_extra);

}  // namespace minorlab
