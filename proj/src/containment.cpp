#include "minorlab/containment.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "minorlab/isomorphism.hpp"

namespace minorlab {

Graph subdivide_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("subdivide_edge: edge not present");
    int n = g.vertex_count();
    Graph out(n + 1);
    for (auto [a, b] : g.edges())
        if (!((a == std::min(u, v)) && (b == std::max(u, v)))) out.add_edge(a, b);
    out.add_edge(u, n);
    out.add_edge(v, n);
    return out;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: edge not present");
    int lo = std::min(u, v), hi = std::max(u, v);
    int n = g.vertex_count();
    auto relabel = [&](int w) { return w < hi ? w : w - 1; };
    Graph out(n - 1);
    for (auto [a, b] : g.edges()) {
        int x = a == hi ? lo : a;
        int y = b == hi ? lo : b;
        if (x == y) continue;  // the contracted edge itself
        int rx = relabel(x), ry = relabel(y);
        if (!out.has_edge(rx, ry)) out.add_edge(rx, ry);
    }
    return out;
}

PendantStripped strip_pendant_leaves(const Graph& h) {
    int n = h.vertex_count();
    auto deg = h.degrees();
    std::vector<int> kept;
    for (int v = 0; v < n; ++v) {
        bool drop = false;
        if (deg[v] == 1) {
            int nb = h.neighbors(v)[0];
            drop = deg[nb] != 1;  // isolated-edge endpoints stay
        }
        if (!drop) kept.push_back(v);
    }
    PendantStripped out;
    out.graph = h.induced(kept);
    out.kept = std::move(kept);
    return out;
}

bool verify_witness(const Graph& pattern, const Graph& host, const ContainmentWitness& w) {
    int h = pattern.vertex_count();
    switch (w.kind) {
        case ContainmentKind::subgraph:
        case ContainmentKind::induced_subgraph: {
            if (static_cast<int>(w.vertex_map.size()) != h) return false;
            std::set<int> used(w.vertex_map.begin(), w.vertex_map.end());
            if (static_cast<int>(used.size()) != h) return false;
            for (int a = 0; a < h; ++a)
                for (int b = a + 1; b < h; ++b) {
                    bool he = pattern.has_edge(a, b);
                    bool ge = host.has_edge(w.vertex_map[a], w.vertex_map[b]);
                    if (he && !ge) return false;
                    if (w.kind == ContainmentKind::induced_subgraph && !he && ge) return false;
                }
            return true;
        }
        case ContainmentKind::minor: {
            if (static_cast<int>(w.branch_sets.size()) != h) return false;
            std::set<int> used;
            for (const auto& set : w.branch_sets) {
                if (set.empty()) return false;
                for (int v : set)
                    if (!used.insert(v).second) return false;
                if (!host.induced(set).is_connected()) return false;
            }
            for (auto [a, b] : pattern.edges()) {
                bool linked = false;
                for (int x : w.branch_sets[a]) {
                    for (int y : w.branch_sets[b])
                        if (host.has_edge(x, y)) {
                            linked = true;
                            break;
                        }
                    if (linked) break;
                }
                if (!linked) return false;
            }
            return true;
        }
        case ContainmentKind::topological_minor: {
            if (static_cast<int>(w.vertex_map.size()) != h) return false;
            std::set<int> branch(w.vertex_map.begin(), w.vertex_map.end());
            if (static_cast<int>(branch.size()) != h) return false;
            auto pedges = pattern.edges();
            if (w.paths.size() != pedges.size()) return false;
            std::set<int> internal_used;
            for (size_t e = 0; e < pedges.size(); ++e) {
                const auto& path = w.paths[e];
                if (path.size() < 2) return false;
                if (path.front() != w.vertex_map[pedges[e].first] ||
                    path.back() != w.vertex_map[pedges[e].second])
                    return false;
                for (size_t i = 0; i + 1 < path.size(); ++i)
                    if (!host.has_edge(path[i], path[i + 1])) return false;
                for (size_t i = 1; i + 1 < path.size(); ++i) {
                    int v = path[i];
                    if (branch.count(v)) return false;
                    if (!internal_used.insert(v).second) return false;
                }
            }
            return true;
        }
    }
    return false;
}

namespace {

void check_cap(const Graph& host, const SearchLimits& limits, const char* op) {
    if (host.vertex_count() > limits.containment_max_vertices)
        throw std::runtime_error(std::string(op) +
                                 ": host graph exceeds containment cap (MINORLAB_MAX_VERTICES raises it)");
}

struct SubgraphSearch {
    const Graph& h;
    const Graph& g;
    bool induced;
    std::vector<int> map;
    std::vector<int> hdeg, gdeg;
    std::vector<char> used;

    bool extend(int i) {
        if (i == h.vertex_count()) return true;
        for (int cand = 0; cand < g.vertex_count(); ++cand) {
            if (used[cand]) continue;
            if (gdeg[cand] < hdeg[i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                bool he = h.has_edge(i, j);
                bool ge = g.has_edge(cand, map[j]);
                if (he && !ge) ok = false;
                if (induced && !he && ge) ok = false;
            }
            if (!ok) continue;
            map[i] = cand;
            used[cand] = 1;
            if (extend(i + 1)) return true;
            used[cand] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<ContainmentWitness> is_subgraph(const Graph& pattern, const Graph& host, bool induced,
                                              const SearchLimits& limits) {
    check_cap(host, limits, "is_subgraph");
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (pattern.edge_count() > host.edge_count()) return std::nullopt;
    SubgraphSearch s{pattern,           host,
                     induced,           std::vector<int>(pattern.vertex_count(), -1),
                     pattern.degrees(), host.degrees(),
                     std::vector<char>(host.vertex_count(), 0)};
    if (!s.extend(0)) return std::nullopt;
    ContainmentWitness w;
    w.kind = induced ? ContainmentKind::induced_subgraph : ContainmentKind::subgraph;
    w.vertex_map = s.map;
    return w;
}

namespace {

// Connected subsets of the host, as bit masks, grouped nowhere: generated
// once and filtered during the branch-set search.
std::vector<std::uint64_t> connected_subsets(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.row64(v);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        int start = __builtin_ctzll(s);
        std::uint64_t seen = std::uint64_t{1} << start;
        std::uint64_t frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= rows[v] & s;
            }
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == s) out.push_back(s);
    }
    return out;
}

struct MinorSearch {
    const Graph& h;
    const Graph& g;
    std::vector<int> order;                   // pattern vertices, constraint-first
    std::vector<std::uint64_t> sets;          // connected subset masks of host
    std::vector<std::uint64_t> set_nbr;       // neighborhood mask of each subset
    std::vector<std::uint64_t> chosen;        // per order position
    std::uint64_t used = 0;

    bool assign(int pos) {
        int hn = h.vertex_count();
        if (pos == hn) return true;
        int hv = order[pos];
        int remaining = hn - pos;
        int free_vertices = g.vertex_count() - __builtin_popcountll(used);
        if (free_vertices < remaining) return false;
        for (size_t si = 0; si < sets.size(); ++si) {
            std::uint64_t s = sets[si];
            if (s & used) continue;
            if (g.vertex_count() - __builtin_popcountll(used | s) < remaining - 1) continue;
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev) {
                if (!h.has_edge(hv, order[prev])) continue;
                if (!(set_nbr[si] & chosen[prev])) ok = false;
            }
            if (!ok) continue;
            chosen[pos] = s;
            used |= s;
            if (assign(pos + 1)) return true;
            used &= ~s;
        }
        return false;
    }
};

std::vector<int> constraint_first_order(const Graph& h) {
    int n = h.vertex_count();
    std::vector<int> order;
    std::vector<bool> picked(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (picked[v]) continue;
            int links = 0;
            for (int u : order)
                if (h.has_edge(v, u)) ++links;
            int deg = h.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        picked[best] = true;
        order.push_back(best);
    }
    return order;
}

}  // namespace

std::optional<ContainmentWitness> is_minor(const Graph& pattern, const Graph& host,
                                           const SearchLimits& limits) {
    check_cap(host, limits, "is_minor");
    if (host.vertex_count() > 20)
        throw std::runtime_error("is_minor: branch-set search limited to hosts with <= 20 vertices");
    int hn = pattern.vertex_count();
    if (hn > host.vertex_count() || pattern.edge_count() > host.edge_count()) return std::nullopt;
    if (hn == 0) return ContainmentWitness{ContainmentKind::minor, {}, {}, {}};
    MinorSearch s{pattern, host, constraint_first_order(pattern), connected_subsets(host), {}, {}};
    s.set_nbr.resize(s.sets.size());
    for (size_t i = 0; i < s.sets.size(); ++i) {
        std::uint64_t nbr = 0, m = s.sets[i];
        while (m) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            nbr |= host.row64(v);
        }
        s.set_nbr[i] = nbr;
    }
    s.chosen.assign(hn, 0);
    if (!s.assign(0)) return std::nullopt;
    ContainmentWitness w;
    w.kind = ContainmentKind::minor;
    w.branch_sets.assign(hn, {});
    for (int pos = 0; pos < hn; ++pos) {
        std::uint64_t m = s.chosen[pos];
        auto& set = w.branch_sets[s.order[pos]];
        while (m) {
            set.push_back(__builtin_ctzll(m));
            m &= m - 1;
        }
    }
    return w;
}

bool minor_closure_contains(const Graph& pattern, const Graph& host, const SearchLimits& limits) {
    if (host.vertex_count() > limits.closure_max_vertices)
        throw std::runtime_error("minor_closure_contains: host exceeds closure cap");
    const auto target = canonical_form(pattern);
    std::set<std::vector<std::uint8_t>> seen{canonical_form(host)};
    if (*seen.begin() == target) return true;
    bool found = false;
    std::vector<Graph> frontier{host};
    while (!frontier.empty() && !found) {
        std::vector<Graph> next;
        for (const Graph& g : frontier) {
            auto consider = [&](const Graph& d) {
                if (found) return;
                auto key = canonical_form(d);
                if (!seen.insert(key).second) return;
                if (key == target) {
                    found = true;
                    return;
                }
                // anything smaller than the pattern cannot regrow
                if (d.vertex_count() >= pattern.vertex_count() &&
                    d.edge_count() >= pattern.edge_count())
                    next.push_back(d);
            };
            for (auto [u, v] : g.edges()) {
                Graph del = g;
                del.remove_edge(u, v);
                consider(del);
                consider(contract_edge(g, u, v));
                if (found) break;
            }
            if (found) break;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (g.degree(v) != 0) continue;
                std::vector<int> keep;
                for (int u = 0; u < g.vertex_count(); ++u)
                    if (u != v) keep.push_back(u);
                consider(g.induced(keep));
            }
        }
        frontier = std::move(next);
    }
    return found;
}

namespace {

struct TopoSearch {
    const Graph& h;
    const Graph& g;
    std::vector<std::pair<int, int>> hedges;
    std::vector<int> map;
    std::vector<int> hdeg, gdeg;
    std::uint64_t branch_used = 0;
    std::uint64_t path_used = 0;
    std::vector<std::vector<int>> paths;

    bool route(size_t e) {
        if (e == hedges.size()) return true;
        auto [a, b] = hedges[e];
        int src = map[a], dst = map[b];
        std::vector<int> path{src};
        return dfs_path(e, src, dst, path);
    }

    bool dfs_path(size_t e, int cur, int dst, std::vector<int>& path) {
        if (g.has_edge(cur, dst)) {
            path.push_back(dst);
            paths.push_back(path);
            path.pop_back();
            if (route(e + 1)) return true;
            paths.pop_back();
        }
        for (int nxt = 0; nxt < g.vertex_count(); ++nxt) {
            if (!g.has_edge(cur, nxt)) continue;
            if ((branch_used >> nxt) & 1u) continue;
            if ((path_used >> nxt) & 1u) continue;
            path.push_back(nxt);
            path_used |= std::uint64_t{1} << nxt;
            if (dfs_path(e, nxt, dst, path)) return true;
            path_used &= ~(std::uint64_t{1} << nxt);
            path.pop_back();
        }
        return false;
    }

    bool place(int i) {
        if (i == h.vertex_count()) return route(0);
        for (int cand = 0; cand < g.vertex_count(); ++cand) {
            if ((branch_used >> cand) & 1u) continue;
            if (gdeg[cand] < hdeg[i]) continue;
            map[i] = cand;
            branch_used |= std::uint64_t{1} << cand;
            if (place(i + 1)) return true;
            branch_used &= ~(std::uint64_t{1} << cand);
        }
        return false;
    }
};

}  // namespace

std::optional<ContainmentWitness> is_topological_minor(const Graph& pattern, const Graph& host,
                                                       const SearchLimits& limits) {
    check_cap(host, limits, "is_topological_minor");
    if (host.vertex_count() > 64)
        throw std::runtime_error("is_topological_minor: path routing limited to hosts with <= 64 vertices");
    if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count())
        return std::nullopt;
    TopoSearch s{pattern,
                 host,
                 pattern.edges(),
                 std::vector<int>(pattern.vertex_count(), -1),
                 pattern.degrees(),
                 host.degrees(),
                 0,
                 0,
                 {}};
    if (!s.place(0)) return std::nullopt;
    ContainmentWitness w;
    w.kind = ContainmentKind::topological_minor;
    w.vertex_map = s.map;
    w.paths = s.paths;
    return w;
}

std::vector<Graph> enumerate_subdivisions(const Graph& h, int max_extra) {
    if (max_extra < 0) throw std::invalid_argument("enumerate_subdivisions: negative budget");
    std::vector<Graph> out{h};
    std::set<std::vector<std::uint8_t>> seen{canonical_form(h)};
    size_t level_begin = 0;
    for (int extra = 1; extra <= max_extra; ++extra) {
        size_t level_end = out.size();
        for (size_t i = level_begin; i < level_end; ++i) {
            Graph base = out[i];
            for (auto [u, v] : base.edges()) {
                Graph sub = subdivide_edge(base, u, v);
                if (seen.insert(canonical_form(sub)).second) out.push_back(sub);
            }
        }
        level_begin = level_end;
    }
    return out;
}

}  // namespace minorlab
