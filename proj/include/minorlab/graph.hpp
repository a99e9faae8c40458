#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorlab {

// Simple undirected graph on vertices 0..n-1, stored as a symmetric bit
// matrix with zero diagonal. Rows are packed into 64-bit words so that
// neighborhood operations are word-parallel.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), rows_(static_cast<size_t>(n) * words_, 0) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int words_per_row() const { return words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (rows_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("add_edge: self loop");
        if (has_edge(u, v)) return;
        set_bit(u, v);
        set_bit(v, u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: edge not present");
        clear_bit(u, v);
        clear_bit(v, u);
        --m_;
    }

    void toggle_edge(int u, int v) {
        if (has_edge(u, v)) remove_edge(u, v); else add_edge(u, v);
    }

    void clear_edges() {
        std::fill(rows_.begin(), rows_.end(), 0);
        m_ = 0;
    }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    template <class F>
    void for_each_neighbor(int v, F&& f) const {
        const std::uint64_t* row = rows_.data() + static_cast<size_t>(v) * words_;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                f((w << 6) + b);
            }
        }
    }

    // Word of vertex v's row covering vertex block w*64..w*64+63.
    std::uint64_t row_word(int v, int w) const { return rows_[static_cast<size_t>(v) * words_ + w]; }

    // Full row as a single word; only valid when n <= 64.
    std::uint64_t row64(int v) const { return rows_[static_cast<size_t>(v) * words_]; }

    Graph permuted(const std::vector<int>& perm) const;  // vertex i becomes perm[i]
    Graph induced(const std::vector<int>& keep) const;   // keep[i] becomes vertex i
    Graph with_isolated_vertex() const;                  // appends vertex n
    Graph disjoint_union(const Graph& other) const;

    std::vector<int> component_ids() const;
    int component_count() const;
    bool is_connected() const;  // vacuously true for n == 0
    bool is_forest() const { return m_ == n_ - component_count(); }

    std::vector<int> degrees() const;
    std::vector<int> degree_sequence() const;  // sorted ascending

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    }
    void set_bit(int u, int v) { rows_[static_cast<size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63); }
    void clear_bit(int u, int v) { rows_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }

    int n_ = 0;
    int words_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Builders. A "k-path" has k edges and k+1 vertices, matching the convention
// used throughout this project.
Graph empty_graph(int n);
Graph path_with_edges(int k);
Graph cycle_graph(int len);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph claw_subdivision(int d1, int d2, int d3);  // {d1,d2,d3}-claw, center is vertex 0
Graph complete_bipartite(int s, int t);

// Colexicographic index of an unordered vertex pair; the fixed bit order used
// for adjacency-oracle positions and adversary bookkeeping.
inline int pair_index(int u, int v) {
    if (u == v) throw std::invalid_argument("pair_index: u == v");
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}
std::pair<int, int> index_pair(int i);
inline int pair_count(int n) { return n * (n - 1) / 2; }

// Search caps for the exponential containment oracles. Operations refuse
// inputs beyond the cap instead of running without bound. The environment
// variable MINORLAB_MAX_VERTICES overrides both caps.
struct SearchLimits {
    int containment_max_vertices = 14;
    int closure_max_vertices = 12;
};
const SearchLimits& default_limits();

}  // namespace minorlab
