#include "minorlab/graph.hpp"

#include <algorithm>
#include <cstdlib>

namespace minorlab {

int Graph::degree(int v) const {
    check_vertex(v);
    const std::uint64_t* row = rows_.data() + static_cast<size_t>(v) * words_;
    int d = 0;
    for (int w = 0; w < words_; ++w) d += __builtin_popcountll(row[w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for_each_neighbor(v, [&](int u) { out.push_back(u); });
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permuted: bad permutation size");
    Graph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::with_isolated_vertex() const {
    Graph g(n_ + 1);
    for (auto [u, v] : edges()) g.add_edge(u, v);
    return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
    Graph g(n_ + other.n_);
    for (auto [u, v] : edges()) g.add_edge(u, v);
    for (auto [u, v] : other.edges()) g.add_edge(n_ + u, n_ + v);
    return g;
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> id(n_, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (id[s] != -1) continue;
        id[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for_each_neighbor(v, [&](int u) {
                if (id[u] == -1) {
                    id[u] = next;
                    stack.push_back(u);
                }
            });
        }
        ++next;
    }
    return id;
}

int Graph::component_count() const {
    auto ids = component_ids();
    return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

bool Graph::is_connected() const { return component_count() <= 1; }

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

std::vector<int> Graph::degree_sequence() const {
    auto d = degrees();
    std::sort(d.begin(), d.end());
    return d;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_with_edges(int k) {
    if (k < 0) throw std::invalid_argument("path_with_edges: negative length");
    Graph g(k + 1);
    for (int i = 0; i < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int len) {
    if (len < 3) throw std::invalid_argument("cycle_graph: length must be >= 3");
    Graph g(len);
    for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star_graph: negative leaf count");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph claw_subdivision(int d1, int d2, int d3) {
    if (d1 < 1 || d2 < 1 || d3 < 1) throw std::invalid_argument("claw_subdivision: branch lengths must be >= 1");
    Graph g(1 + d1 + d2 + d3);
    int next = 1;
    for (int len : {d1, d2, d3}) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

Graph complete_bipartite(int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("complete_bipartite: negative part size");
    Graph g(s + t);
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
    return g;
}

std::pair<int, int> index_pair(int i) {
    if (i < 0) throw std::invalid_argument("index_pair: negative index");
    int v = 1;
    while (v * (v + 1) / 2 <= i) ++v;
    return {i - v * (v - 1) / 2, v};
}

const SearchLimits& default_limits() {
    static const SearchLimits limits = [] {
        SearchLimits l;
        if (const char* env = std::getenv("MINORLAB_MAX_VERTICES")) {
            int v = std::atoi(env);
            if (v > 0) {
                l.containment_max_vertices = v;
                l.closure_max_vertices = v;
            }
        }
        return l;
    }();
    return limits;
}

}  // namespace minorlab
