#include "minorlab/minor_theory.hpp"

#include <algorithm>
#include <set>

#include "minorlab/isomorphism.hpp"

namespace minorlab {

namespace {

// Tarjan bridge finding.
struct BridgeFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::set<std::pair<int, int>> bridges;
    int timer = 0;

    explicit BridgeFinder(const Graph& graph) : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (disc[v] == -1) dfs(v, -1);
    }

    void dfs(int v, int parent) {
        disc[v] = low[v] = timer++;
        bool skipped_parent = false;
        g.for_each_neighbor(v, [&](int u) {
            if (u == parent && !skipped_parent) {
                skipped_parent = true;  // simple graphs: at most one parent edge
                return;
            }
            if (disc[u] != -1) {
                low[v] = std::min(low[v], disc[u]);
                return;
            }
            dfs(u, v);
            low[v] = std::min(low[v], low[u]);
            if (low[u] > disc[v]) bridges.insert({std::min(v, u), std::max(v, u)});
        });
    }
};

// Vertices reachable from `start` in g with edge (a,b) removed.
std::vector<char> reachable_without_edge(const Graph& g, int start, int a, int b) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.for_each_neighbor(v, [&](int u) {
            if ((v == a && u == b) || (v == b && u == a)) return;
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        });
    }
    return seen;
}

}  // namespace

EdgeClassification classify_edges(const Graph& g) {
    BridgeFinder bf(g);
    auto deg = g.degrees();

    std::set<std::pair<int, int>> internal;
    for (auto [u, v] : g.edges()) {
        if (!bf.bridges.count({u, v})) {
            internal.insert({u, v});  // on a cycle
            continue;
        }
        // bridge: internal iff both sides hold a vertex of degree >= 3
        auto u_side = reachable_without_edge(g, u, u, v);
        auto v_side = reachable_without_edge(g, v, u, v);
        bool u_high = false, v_high = false;
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (deg[w] < 3) continue;
            if (u_side[w]) u_high = true;
            if (v_side[w]) v_high = true;
        }
        if (u_high && v_high) internal.insert({u, v});
    }

    // dangling-path characterization, used as a mandatory cross-check
    EdgeClassification out;
    std::set<std::pair<int, int>> external_by_walk;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (deg[start] != 1) continue;
        std::vector<int> walk{start};
        int prev = -1, cur = start;
        while (true) {
            int next = -1;
            g.for_each_neighbor(cur, [&](int u) {
                if (u != prev) next = u;
            });
            if (next == -1) break;
            external_by_walk.insert({std::min(cur, next), std::max(cur, next)});
            walk.push_back(next);
            if (deg[next] != 2) break;  // end of the dangling path
            prev = cur;
            cur = next;
        }
        out.dangling_paths.push_back(std::move(walk));
    }

    for (auto e : g.edges()) {
        bool is_internal = internal.count(e) != 0;
        bool on_dangling = external_by_walk.count(e) != 0;
        if (is_internal == on_dangling)
            throw std::logic_error("classify_edges: cycle/degree and dangling-path characterizations disagree");
        (is_internal ? out.internal_edges : out.external_edges).push_back(e);
    }
    return out;
}

int beta(const Graph& g) { return static_cast<int>(classify_edges(g).internal_edges.size()); }

Graph replace_edge_with_paths(const Graph& g, int u, int v, int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("replace_edge_with_paths: lengths must be >= 1");
    if (!g.has_edge(u, v)) throw std::invalid_argument("replace_edge_with_paths: edge not present");
    int n = g.vertex_count();
    Graph out(n + p + q);
    for (auto [a, b] : g.edges())
        if (!(a == std::min(u, v) && b == std::max(u, v))) out.add_edge(a, b);
    int prev = u;
    for (int i = 0; i < p; ++i) {
        out.add_edge(prev, n + i);
        prev = n + i;
    }
    prev = v;
    for (int i = 0; i < q; ++i) {
        out.add_edge(prev, n + p + i);
        prev = n + p + i;
    }
    return out;
}

bool is_star_subdivision_family(const Graph& h) {
    auto ids = h.component_ids();
    int comps = h.component_count();
    std::vector<int> high(comps, 0), vertices(comps, 0), edges(comps, 0);
    auto deg = h.degrees();
    for (int v = 0; v < h.vertex_count(); ++v) {
        ++vertices[ids[v]];
        if (deg[v] >= 3) ++high[ids[v]];
    }
    for (auto [u, v] : h.edges()) ++edges[ids[u]];
    for (int c = 0; c < comps; ++c) {
        if (edges[c] != vertices[c] - 1) return false;  // component has a cycle
        if (high[c] > 1) return false;
    }
    return true;
}

bool is_path_or_claw_family(const Graph& h) {
    auto ids = h.component_ids();
    int comps = h.component_count();
    std::vector<int> deg3(comps, 0), vertices(comps, 0), edges(comps, 0);
    bool too_high = false;
    auto deg = h.degrees();
    for (int v = 0; v < h.vertex_count(); ++v) {
        ++vertices[ids[v]];
        if (deg[v] == 3) ++deg3[ids[v]];
        if (deg[v] > 3) too_high = true;
    }
    if (too_high) return false;
    for (auto [u, v] : h.edges()) ++edges[ids[u]];
    for (int c = 0; c < comps; ++c) {
        if (edges[c] != vertices[c] - 1) return false;
        if (deg3[c] > 1) return false;
    }
    return true;
}

ForbiddenFamily ForbiddenFamily::make(std::vector<Graph> s, std::vector<Graph> b) {
    ForbiddenFamily out;
    std::set<std::vector<std::uint8_t>> seen;
    for (auto& g : s)
        if (seen.insert(canonical_form(g)).second) out.topological_minors.push_back(std::move(g));
    seen.clear();
    for (auto& g : b)
        if (seen.insert(canonical_form(g)).second) out.subgraphs.push_back(std::move(g));
    return out;
}

SuitabilityVerdict check_edge_suitability(const ForbiddenFamily& family, const Graph& g, int u, int v,
                                          int lmax, const SearchLimits& limits) {
    if (lmax < 1) throw std::invalid_argument("check_edge_suitability: lmax must be >= 1");
    if (!g.has_edge(u, v)) throw std::invalid_argument("check_edge_suitability: edge not present");
    if (g.vertex_count() + 2 * lmax > limits.containment_max_vertices)
        throw std::runtime_error(
            "check_edge_suitability: lmax exceeds containment cap (MINORLAB_MAX_VERTICES raises it)");
    SuitabilityVerdict verdict;
    verdict.lmax = lmax;
    for (int p = 1; p <= lmax; ++p)
        for (int q = 1; q <= lmax; ++q) {
            Graph replaced = replace_edge_with_paths(g, u, v, p, q);
            bool hit = false;
            for (const Graph& s : family.topological_minors)
                if (is_topological_minor(s, replaced, limits)) {
                    hit = true;
                    break;
                }
            if (!hit)
                for (const Graph& b : family.subgraphs)
                    if (is_subgraph(b, replaced, false, limits)) {
                        hit = true;
                        break;
                    }
            if (hit) {
                verdict.suitable = false;
                verdict.fail_p = p;
                verdict.fail_q = q;
                return verdict;
            }
        }
    verdict.suitable = true;
    return verdict;
}

}  // namespace minorlab
