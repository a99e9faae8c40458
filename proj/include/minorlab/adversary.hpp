#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "minorlab/fitting.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

// Quantities of the relational adversary bound: per-side multiplicities m and
// m', the per-position collision maximum l_max, and the classical quantity
// v = max over related (x,y) and differing positions i of
// min(l_{x,i}/m, l'_{y,i}/m'). Bit positions index unordered vertex pairs via
// pair_index.
struct AdversaryQuantities {
    long long m = 0;
    long long m_prime = 0;
    long long l_max = 0;
    long long v_num = 0, v_den = 1;  // v as an exact fraction
    double quantum_bound = 0;        // sqrt(m * m' / l_max)
    double classical_bound = 0;      // 1 / v

    // One entry per witnessed (related pair, differing position), kept by the
    // symmetric computation so tests can recompute l_max and v independently.
    struct PairRecord {
        int x_rep = 0;
        int position = 0;
        long long l_x = 0;
        long long l_y = 0;
    };
    std::vector<PairRecord> records;
};

// A family of adversary instances, one per input size n. X and Y are sets of
// labeled graphs on opposite sides of the property; the relation is
// isomorphism covariant. Partner enumerators yield each related labeled
// graph exactly once; the graph handed to the callback is scratch storage
// valid only during the call. When the enumerator knows the differing bit
// positions it passes them, otherwise an empty span.
class RelationFamily {
public:
    using PartnerFn = std::function<void(const Graph& partner, std::span<const int> diff_positions)>;
    using GraphFn = std::function<void(const Graph&)>;

    virtual ~RelationFamily() = default;

    virtual std::string name() const = 0;
    virtual bool supports(int n) const = 0;
    virtual std::vector<Graph> x_representatives(int n) const = 0;
    virtual std::vector<Graph> y_representatives(int n) const = 0;

    virtual void related_y(const Graph& x, const PartnerFn& fn) const = 0;
    virtual void related_x(const Graph& y, const PartnerFn& fn) const = 0;

    // Number of related partners differing at one bit position; defaults
    // enumerate all partners, families override with targeted counters.
    virtual long long count_related_y_at(const Graph& x, int position) const;
    virtual long long count_related_x_at(const Graph& y, int position) const;

    // Full labeled enumeration, partitioned into disjoint shards.
    virtual void enumerate_x(int n, int shard, int num_shards, const GraphFn& fn) const = 0;
    virtual void enumerate_y(int n, int shard, int num_shards, const GraphFn& fn) const = 0;

    virtual bool related(const Graph& x, const Graph& y) const;
};

// Exact quantities from the representatives only, using isomorphism
// covariance: counts per representative, collision products over every
// related pair of each X representative.
AdversaryQuantities quantities_symmetric(const RelationFamily& family, int n);

// Exact quantities by streaming the full labeled sets X and Y; no symmetry
// assumption. Work is partitioned across threads (MINORLAB_THREADS caps it);
// results are independent of the partitioning.
AdversaryQuantities quantities_explicit(const RelationFamily& family, int n);

// Least-squares slope of log(quantum_bound) against log(n); needs >= 4 sizes.
FitResult scaling_fit(const RelationFamily& family, const std::vector<int>& sizes);

// X = the empty graph, Y = every placement of a d-clique plus isolated
// vertices, R total. The unstructured-search instance is d = 2.
std::unique_ptr<RelationFamily> family_clique(int d);

// X = labeled n-paths, Y = disjoint unions of a cycle and a path with both
// parts longer than n/3; related pairs differ by the two-edge swap
// (a,b),(c,d) <-> (a,c),(b,d) with no other edges among {a,b,c,d}.
std::unique_ptr<RelationFamily> family_forest();

// The general lower-bound construction for a connected graph g with edge
// (u,v): X-side graphs delete the edge and hang two paths from its endpoints,
// Y-side graphs subdivide the edge and add a disjoint path, with both the
// subdivided component and the disjoint path longer than n/3. Reduces to the
// forest family when g = C_3.
std::unique_ptr<RelationFamily> family_edge_split(Graph g, int u, int v);

}  // namespace minorlab
