#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// Adjacency oracle: the only access to the hidden graph is probe(u,v), which
// answers one adjacency bit and increments the counter by exactly one. The
// probed-pair record backs witness-replay checks in tests.
class OracleGraph {
public:
    explicit OracleGraph(Graph hidden)
        : hidden_(std::move(hidden)), probed_((pair_count(hidden_.vertex_count()) + 63) / 64, 0) {}

    int vertex_count() const { return hidden_.vertex_count(); }

    bool probe(int u, int v) {
        probes_.fetch_add(1, std::memory_order_relaxed);
        int i = pair_index(u, v);
        probed_[i >> 6] |= std::uint64_t{1} << (i & 63);
        return hidden_.has_edge(u, v);
    }

    long long probe_count() const { return probes_.load(std::memory_order_relaxed); }

    bool was_probed(int u, int v) const {
        int i = pair_index(u, v);
        return (probed_[i >> 6] >> (i & 63)) & 1u;
    }

private:
    Graph hidden_;
    std::atomic<long long> probes_{0};
    std::vector<std::uint64_t> probed_;
};

// Vertex labels 1..l+1, one per host vertex, drawn uniformly.
using ColorAssignment = std::vector<int>;

// Stored walk state: a tuple of host vertices with complete (fully probed)
// neighbor lists, and optionally second-neighbor color evidence: for stored
// vertex slot si, a list of (neighbor u, label, witness w) with w a probed
// neighbor of u carrying that label.
struct TupleState {
    int host_vertex_count = 0;
    std::vector<int> vertices;
    std::vector<std::vector<int>> neighbor_lists;  // sorted ascending
    struct ColorWitness {
        int neighbor = -1;
        int label = 0;
        int witness = -1;
    };
    std::vector<std::vector<ColorWitness>> flags;
    bool has_flags = false;
};

TupleState make_tuple_state(OracleGraph& g, const std::vector<int>& vertices);
TupleState make_tuple_state_with_flags(OracleGraph& g, const std::vector<int>& vertices,
                                       const ColorAssignment& colors, int label_count);

// Overlapping geometric degree buckets 1-4, 2-8, 4-16, ...; every vertex of
// degree >= 1 appears in each bucket whose interval contains its degree.
// Degrees come from exhaustive probing.
std::vector<std::pair<long long, std::vector<int>>> degree_buckets(OracleGraph& g);

// True iff the stored vertices contain the image of some minimal vertex
// cover of the pattern and the stored neighbor lists certify a full copy.
// Consumes no probes. Returns the full pattern-to-host vertex map.
std::optional<std::vector<int>> marked_predicate(const TupleState& state, const Graph& pattern);

// Recognizes the pattern from a stored cover of its pendant-stripped core
// plus color-flag evidence for the deleted leaves. Leaves are labeled
// 1..l in vertex order, all other pattern vertices l+1.
std::optional<std::vector<int>> marked_predicate_dangling(const TupleState& state, const Graph& pattern,
                                                          const ColorAssignment& colors);

// Smallest r with 1 - (1 - (l+1)^{-|V(H)|})^r >= target_confidence, where l
// counts the pendant leaves handled by color coding.
int color_rounds(const Graph& pattern, double target_confidence);

// Is some stored neighbor of u adjacent to some stored neighbor of v
// (completing a 3-path from u to v)? Probes at most |N(u)|*|N(v)| pairs.
bool check_3path(int u, int v, const TupleState& state, OracleGraph& g);

// Is some host vertex adjacent to >= 2 stored neighbors of v (completing a
// 4-cycle through v)? Probes at most n*deg(v) pairs.
bool check_adjacent_to_two(int v, const TupleState& state, OracleGraph& g);

enum class DetectMode { basic, dangling, paths, fourcycle };

struct DetectionReport {
    bool found = false;
    bool gate_accepted = false;  // dense graphs accepted by the edge-count gate
    std::optional<std::vector<int>> witness;  // pattern vertex -> host vertex
    long long probes = 0;
    int rounds = 1;
};

// Classical reference pipeline: exact edge-count gate, bucketed tuple search
// with the mode's marked predicate, and color-coding rounds where the mode
// needs them. Decides the property "denser than the gate or contains the
// pattern"; on sparse inputs this coincides with subgraph containment.
DetectionReport detect_subgraph(OracleGraph& g, const Graph& pattern, DetectMode mode,
                                std::uint64_t seed = 0, double confidence = 0.9, double c_param = 1.0);

}  // namespace minorlab
