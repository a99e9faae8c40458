#include "minorlab/detector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "minorlab/containment.hpp"
#include "minorlab/vertex_cover.hpp"

namespace minorlab {

namespace {

std::vector<long long> bucket_scales(int n) {
    std::vector<long long> out;
    for (long long q = 2; q / 2 <= n - 1; q *= 2) out.push_back(q);
    return out;
}

// All minimum vertex covers, each sorted ascending.
std::vector<std::vector<int>> minimum_covers(const Graph& h) {
    int target = min_vertex_cover(h).size;
    std::vector<std::vector<int>> covers;
    int n = h.vertex_count();
    std::vector<int> pick;
    auto edges = h.edges();
    std::function<void(int)> rec = [&](int v) {
        if (static_cast<int>(pick.size()) == target) {
            for (auto [a, b] : edges) {
                bool hit = false;
                for (int c : pick)
                    if (c == a || c == b) {
                        hit = true;
                        break;
                    }
                if (!hit) return;
            }
            covers.push_back(pick);
            return;
        }
        if (v == n) return;
        if (n - v < target - static_cast<int>(pick.size())) return;
        pick.push_back(v);
        rec(v + 1);
        pick.pop_back();
        rec(v + 1);
    };
    rec(0);
    return covers;
}

bool list_contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Backtracking extension of a partial pattern-to-host map using only stored
// neighbor lists: every unmapped pattern vertex must have all its neighbors
// in the mapped cover. Collects solutions in lexicographic order.
struct Extender {
    const TupleState& state;
    const Graph& pattern;
    std::vector<int> map;       // pattern vertex -> host (-1 unmapped)
    std::vector<char> used;     // host vertices taken (indexed by host id)
    std::vector<int> slot_of;   // host vertex -> stored slot (-1 if not stored)

    Extender(const TupleState& s, const Graph& p) : state(s), pattern(p) {
        map.assign(p.vertex_count(), -1);
        used.assign(s.host_vertex_count, 0);
        slot_of.assign(s.host_vertex_count, -1);
        for (size_t i = 0; i < s.vertices.size(); ++i) slot_of[s.vertices[i]] = static_cast<int>(i);
    }

    bool certified_edge(int ga, int gb) const {
        int sa = slot_of[ga], sb = slot_of[gb];
        if (sa >= 0 && list_contains(state.neighbor_lists[sa], gb)) return true;
        if (sb >= 0 && list_contains(state.neighbor_lists[sb], ga)) return true;
        return false;
    }

    // fills unmapped vertices in ascending pattern order; fn(map) per
    // complete solution, returning true to stop the search
    bool extend(int pv, const std::function<bool(const std::vector<int>&)>& fn) {
        while (pv < pattern.vertex_count() && map[pv] != -1) ++pv;
        if (pv == pattern.vertex_count()) return fn(map);
        if (pattern.degree(pv) == 0) {
            for (int g = 0; g < state.host_vertex_count; ++g) {
                if (used[g]) continue;
                map[pv] = g;
                used[g] = 1;
                if (extend(pv + 1, fn)) return true;
                used[g] = 0;
                map[pv] = -1;
            }
            return false;
        }
        // candidates: stored-list members of one mapped neighbor
        int anchor = -1;
        bool all_mapped = true;
        pattern.for_each_neighbor(pv, [&](int u) {
            if (map[u] == -1)
                all_mapped = false;
            else if (anchor == -1 && slot_of[map[u]] >= 0)
                anchor = slot_of[map[u]];
        });
        if (!all_mapped || anchor == -1) return false;  // needs a cover through stored vertices
        for (int g : state.neighbor_lists[anchor]) {
            if (used[g]) continue;
            bool ok = true;
            pattern.for_each_neighbor(pv, [&](int u) {
                if (ok && !certified_edge(g, map[u])) ok = false;
            });
            if (!ok) continue;
            map[pv] = g;
            used[g] = 1;
            if (extend(pv + 1, fn)) return true;
            used[g] = 0;
            map[pv] = -1;
        }
        return false;
    }
};

void require_complete(const TupleState& state) {
    if (state.vertices.size() != state.neighbor_lists.size())
        throw std::logic_error("tuple state: incomplete neighbor lists");
}

// Enumerates injective assignments of `targets` (pattern vertices) onto the
// stored tuple, then runs the extender.
bool for_each_anchored_embedding(const TupleState& state, const Graph& pattern,
                                 const std::vector<int>& targets,
                                 const std::function<bool(const std::vector<int>&)>& fn) {
    int s = static_cast<int>(state.vertices.size());
    int t = static_cast<int>(targets.size());
    if (t > s) return false;
    std::vector<int> assign(t, -1);
    std::vector<char> slot_used(s, 0);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == t) {
            Extender ext(state, pattern);
            for (int j = 0; j < t; ++j) {
                int g = state.vertices[assign[j]];
                if (ext.used[g]) return false;  // tuple repeats a vertex
                ext.map[targets[j]] = g;
                ext.used[g] = 1;
            }
            // anchored pattern edges between targets must be certified
            for (int a = 0; a < t; ++a)
                for (int b = a + 1; b < t; ++b)
                    if (pattern.has_edge(targets[a], targets[b]) &&
                        !ext.certified_edge(ext.map[targets[a]], ext.map[targets[b]]))
                        return false;
            return ext.extend(0, fn);
        }
        for (int slot = 0; slot < s; ++slot) {
            if (slot_used[slot]) continue;
            slot_used[slot] = 1;
            assign[i] = slot;
            if (place(i + 1)) return true;
            slot_used[slot] = 0;
        }
        return false;
    };
    return place(0);
}

// Anchor vertices of the pendant-stripped core: a minimal vertex cover plus
// every core vertex isolated by the stripping (it anchors its lost leaves).
std::vector<std::vector<int>> core_anchor_sets(const Graph& pattern, const PendantStripped& core) {
    std::vector<int> isolated;
    for (int v = 0; v < core.graph.vertex_count(); ++v)
        if (core.graph.degree(v) == 0 && pattern.degree(core.kept[v]) > 0)
            isolated.push_back(core.kept[v]);
    std::vector<std::vector<int>> sets;
    if (core.graph.edge_count() == 0) {
        sets.push_back(isolated);
        return sets;
    }
    for (const auto& cover : minimum_covers(core.graph)) {
        std::vector<int> anchors;
        for (int v : cover) anchors.push_back(core.kept[v]);
        anchors.insert(anchors.end(), isolated.begin(), isolated.end());
        std::sort(anchors.begin(), anchors.end());
        sets.push_back(std::move(anchors));
    }
    return sets;
}

std::vector<int> pendant_leaves(const Graph& pattern, const PendantStripped& core) {
    std::vector<char> kept(pattern.vertex_count(), 0);
    for (int v : core.kept) kept[v] = 1;
    std::vector<int> leaves;
    for (int v = 0; v < pattern.vertex_count(); ++v)
        if (!kept[v]) leaves.push_back(v);
    return leaves;
}

}  // namespace

TupleState make_tuple_state(OracleGraph& g, const std::vector<int>& vertices) {
    TupleState state;
    state.host_vertex_count = g.vertex_count();
    state.vertices = vertices;
    for (int v : vertices) {
        std::vector<int> list;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (u != v && g.probe(v, u)) list.push_back(u);
        state.neighbor_lists.push_back(std::move(list));
    }
    return state;
}

TupleState make_tuple_state_with_flags(OracleGraph& g, const std::vector<int>& vertices,
                                       const ColorAssignment& colors, int label_count) {
    TupleState state = make_tuple_state(g, vertices);
    state.has_flags = true;
    state.flags.resize(vertices.size());
    for (size_t si = 0; si < vertices.size(); ++si) {
        int v = vertices[si];
        for (int u : state.neighbor_lists[si]) {
            std::vector<int> found(label_count + 1, -1);
            for (int w = 0; w < g.vertex_count(); ++w) {
                if (w == u || w == v) continue;
                int label = colors[w];
                if (label < 1 || label > label_count) continue;
                if (found[label] != -1) continue;
                if (g.probe(u, w)) found[label] = w;
            }
            for (int label = 1; label <= label_count; ++label)
                if (found[label] != -1) state.flags[si].push_back({u, label, found[label]});
        }
    }
    return state;
}

std::vector<std::pair<long long, std::vector<int>>> degree_buckets(OracleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (g.probe(v, u)) {
                ++deg[v];
                ++deg[u];
            }
    std::vector<std::pair<long long, std::vector<int>>> buckets;
    for (long long q : bucket_scales(n)) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (deg[v] >= 1 && deg[v] >= q / 2 && deg[v] <= 2 * q) members.push_back(v);
        buckets.emplace_back(q, std::move(members));
    }
    return buckets;
}

std::optional<std::vector<int>> marked_predicate(const TupleState& state, const Graph& pattern) {
    require_complete(state);
    if (pattern.edge_count() == 0)
        throw std::invalid_argument("marked_predicate: pattern needs at least one edge");
    std::optional<std::vector<int>> result;
    auto take = [&](const std::vector<int>& map) {
        result = map;
        return true;
    };
    for (const auto& cover : minimum_covers(pattern)) {
        if (for_each_anchored_embedding(state, pattern, cover, take)) return result;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> marked_predicate_dangling(const TupleState& state, const Graph& pattern,
                                                          const ColorAssignment& colors) {
    require_complete(state);
    auto core = strip_pendant_leaves(pattern);
    auto leaves = pendant_leaves(pattern, core);
    int l = static_cast<int>(leaves.size());
    if (l == 0) return marked_predicate(state, pattern);
    if (!state.has_flags) throw std::invalid_argument("marked_predicate_dangling: state lacks color flags");
    if (static_cast<int>(colors.size()) != state.host_vertex_count)
        throw std::invalid_argument("marked_predicate_dangling: bad color assignment size");

    std::vector<int> leaf_label(pattern.vertex_count(), 0);
    for (int i = 0; i < l; ++i) leaf_label[leaves[i]] = i + 1;

    std::vector<int> slot_of(state.host_vertex_count, -1);
    for (size_t i = 0; i < state.vertices.size(); ++i) slot_of[state.vertices[i]] = static_cast<int>(i);

    std::optional<std::vector<int>> result;
    auto try_core_map = [&](const std::vector<int>& core_map) {
        // core images must carry the background label l+1
        for (int v = 0; v < core.graph.vertex_count(); ++v)
            if (colors[core_map[core.kept[v]]] != l + 1) return false;
        std::vector<int> full = core_map;
        std::vector<char> used(state.host_vertex_count, 0);
        for (int v : core.kept) used[core_map[v]] = 1;
        for (int leaf : leaves) {
            int parent = pattern.neighbors(leaf)[0];
            int gp = core_map[parent];
            int want = leaf_label[leaf];
            int witness = -1;
            if (slot_of[gp] >= 0) {
                for (int w : state.neighbor_lists[slot_of[gp]])
                    if (!used[w] && colors[w] == want) {
                        witness = w;
                        break;
                    }
            } else {
                // evidence through a stored vertex adjacent to the parent
                for (size_t si = 0; si < state.vertices.size() && witness == -1; ++si) {
                    if (!list_contains(state.neighbor_lists[si], gp)) continue;
                    for (const auto& f : state.flags[si])
                        if (f.neighbor == gp && f.label == want && !used[f.witness]) {
                            witness = f.witness;
                            break;
                        }
                }
            }
            if (witness == -1) return false;
            used[witness] = 1;
            full[leaf] = witness;
        }
        result = full;
        return true;
    };

    auto core_to_pattern = [&](const std::vector<int>& core_only_map) {
        // core map indexed by core vertex; lift to pattern indexing
        std::vector<int> lifted(pattern.vertex_count(), -1);
        for (int v = 0; v < core.graph.vertex_count(); ++v) lifted[core.kept[v]] = core_only_map[v];
        return lifted;
    };

    for (const auto& anchors : core_anchor_sets(pattern, core)) {
        // anchors are in pattern indexing; translate to core indexing
        std::vector<int> core_index(pattern.vertex_count(), -1);
        for (int v = 0; v < core.graph.vertex_count(); ++v) core_index[core.kept[v]] = v;
        std::vector<int> targets;
        for (int a : anchors) targets.push_back(core_index[a]);
        bool found = for_each_anchored_embedding(state, core.graph, targets,
                                                 [&](const std::vector<int>& core_map) {
                                                     return try_core_map(core_to_pattern(core_map));
                                                 });
        if (found) return result;
    }
    return std::nullopt;
}

int color_rounds(const Graph& pattern, double target_confidence) {
    if (!(target_confidence > 0 && target_confidence < 1))
        throw std::invalid_argument("color_rounds: confidence must be in (0,1)");
    auto core = strip_pendant_leaves(pattern);
    int l = pattern.vertex_count() - core.graph.vertex_count();
    if (l == 0) return 1;
    double p = std::pow(static_cast<double>(l + 1), -pattern.vertex_count());
    return static_cast<int>(std::ceil(std::log(1 - target_confidence) / std::log1p(-p)));
}

bool check_3path(int u, int v, const TupleState& state, OracleGraph& g) {
    int su = -1, sv = -1;
    for (size_t i = 0; i < state.vertices.size(); ++i) {
        if (state.vertices[i] == u) su = static_cast<int>(i);
        if (state.vertices[i] == v) sv = static_cast<int>(i);
    }
    if (su < 0 || sv < 0) throw std::invalid_argument("check_3path: endpoints not stored");
    for (int a : state.neighbor_lists[su]) {
        if (a == v) continue;
        for (int b : state.neighbor_lists[sv]) {
            if (b == u || b == a) continue;
            if (g.probe(a, b)) return true;
        }
    }
    return false;
}

bool check_adjacent_to_two(int v, const TupleState& state, OracleGraph& g) {
    int sv = -1;
    for (size_t i = 0; i < state.vertices.size(); ++i)
        if (state.vertices[i] == v) sv = static_cast<int>(i);
    if (sv < 0) throw std::invalid_argument("check_adjacent_to_two: vertex not stored");
    const auto& list = state.neighbor_lists[sv];
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == v) continue;
        int hits = 0;
        for (int x : list) {
            if (x == w) continue;
            if (g.probe(w, x) && ++hits >= 2) return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// end-to-end pipeline

namespace {

struct HostView {
    int n = 0;
    std::vector<std::vector<int>> lists;  // complete adjacency, sorted
    std::vector<int> deg;
    long long edges = 0;

    TupleState state_for(const std::vector<int>& tuple) const {
        TupleState s;
        s.host_vertex_count = n;
        s.vertices = tuple;
        for (int v : tuple) s.neighbor_lists.push_back(lists[v]);
        return s;
    }
};

HostView read_host(OracleGraph& g) {
    HostView h;
    h.n = g.vertex_count();
    h.lists.assign(h.n, {});
    h.deg.assign(h.n, 0);
    for (int v = 0; v < h.n; ++v)
        for (int u = v + 1; u < h.n; ++u)
            if (g.probe(v, u)) {
                h.lists[v].push_back(u);
                h.lists[u].push_back(v);
                ++h.deg[v];
                ++h.deg[u];
                ++h.edges;
            }
    return h;
}

// Tuples of distinct vertices partitioned by the componentwise-minimal
// bucket vector; visits every s-tuple of non-isolated vertices exactly once,
// in (bucket vector, tuple) lexicographic order.
bool for_each_bucket_tuple(const HostView& host, int s,
                           const std::function<bool(const std::vector<int>&)>& fn) {
    auto scales = bucket_scales(host.n);
    int nb = static_cast<int>(scales.size());
    std::vector<std::vector<int>> min_bucket_members(nb);
    for (int v = 0; v < host.n; ++v) {
        if (host.deg[v] < 1) continue;
        for (int b = 0; b < nb; ++b)
            if (host.deg[v] >= scales[b] / 2 && host.deg[v] <= 2 * scales[b]) {
                min_bucket_members[b].push_back(v);
                break;
            }
    }
    std::vector<int> qvec(s, 0), tuple(s, -1);
    std::vector<char> used(host.n, 0);
    std::function<bool(int)> fill = [&](int slot) -> bool {
        if (slot == s) return fn(tuple);
        for (int v : min_bucket_members[qvec[slot]]) {
            if (used[v]) continue;
            used[v] = 1;
            tuple[slot] = v;
            if (fill(slot + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    std::function<bool(int)> next_q = [&](int pos) -> bool {
        if (pos == s) return fill(0);
        for (int b = 0; b < nb; ++b) {
            qvec[pos] = b;
            if (next_q(pos + 1)) return true;
        }
        return false;
    };
    return next_q(0);
}

struct LeafRequirement {
    int leaf = 0;    // pattern vertex
    int parent = 0;  // pattern vertex
};

struct Candidate {
    std::vector<int> map;  // pattern -> host, leaves unset (-1)
};

bool is_path_shape(const Graph& g) {
    if (g.vertex_count() < 2) return false;
    int ones = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d > 2) return false;
        if (d == 1) ++ones;
    }
    return ones == 2 && g.edge_count() == g.vertex_count() - 1 && g.is_connected();
}

// Shared color-round loop over precomputed core embeddings.
bool run_color_rounds(const HostView& host, const Graph& pattern, const std::vector<Candidate>& cands,
                      const std::vector<LeafRequirement>& leaves, std::uint64_t seed, int rounds,
                      DetectionReport& report) {
    int l = static_cast<int>(leaves.size());
    std::mt19937_64 rng(seed);
    for (int round = 1; round <= rounds; ++round) {
        ColorAssignment colors(host.n);
        for (int v = 0; v < host.n; ++v) colors[v] = static_cast<int>(rng() % (l + 1)) + 1;
        for (const auto& cand : cands) {
            bool ok = true;
            for (int v = 0; v < pattern.vertex_count() && ok; ++v)
                if (cand.map[v] != -1 && colors[cand.map[v]] != l + 1) ok = false;
            if (!ok) continue;
            std::vector<int> full = cand.map;
            std::vector<char> used(host.n, 0);
            for (int v = 0; v < pattern.vertex_count(); ++v)
                if (full[v] != -1) used[full[v]] = 1;
            for (int li = 0; li < l && ok; ++li) {
                int want = li + 1;
                int gp = full[leaves[li].parent];
                int witness = -1;
                for (int w : host.lists[gp])
                    if (!used[w] && colors[w] == want) {
                        witness = w;
                        break;
                    }
                if (witness == -1)
                    ok = false;
                else {
                    used[witness] = 1;
                    full[leaves[li].leaf] = witness;
                }
            }
            if (ok) {
                report.found = true;
                report.witness = full;
                report.rounds = round;
                return true;
            }
        }
    }
    report.rounds = rounds;
    return false;
}

}  // namespace

DetectionReport detect_subgraph(OracleGraph& g, const Graph& pattern, DetectMode mode,
                                std::uint64_t seed, double confidence, double c_param) {
    DetectionReport report;
    int hn = g.vertex_count();
    int pn = pattern.vertex_count();
    if (mode == DetectMode::paths && !is_path_shape(pattern))
        throw std::invalid_argument("detect_subgraph: paths mode requires a path pattern");
    if (mode == DetectMode::fourcycle &&
        !(pn == 4 && pattern.edge_count() == 4 && pattern.degree_sequence() == std::vector<int>{2, 2, 2, 2}))
        throw std::invalid_argument("detect_subgraph: fourcycle mode requires the 4-cycle pattern");

    if (pattern.edge_count() == 0) {
        report.found = hn >= pn;
        if (report.found) {
            report.witness = std::vector<int>(pn);
            for (int i = 0; i < pn; ++i) (*report.witness)[i] = i;
        }
        report.probes = g.probe_count();
        return report;
    }

    HostView host = read_host(g);
    double threshold = mode == DetectMode::fourcycle ? 2.0 * c_param * std::pow(hn, 1.5)
                                                     : 2.0 * c_param * hn;
    if (static_cast<double>(host.edges) > threshold) {
        report.found = true;
        report.gate_accepted = true;
        report.probes = g.probe_count();
        return report;
    }
    if (hn < pn) {
        report.probes = g.probe_count();
        return report;
    }

    auto finish = [&]() {
        report.probes = g.probe_count();
        return report;
    };

    if (mode == DetectMode::basic) {
        int s = min_vertex_cover(pattern).size;
        for_each_bucket_tuple(host, s, [&](const std::vector<int>& tuple) {
            auto state = host.state_for(tuple);
            if (auto w = marked_predicate(state, pattern)) {
                report.found = true;
                report.witness = *w;
                return true;
            }
            return false;
        });
        return finish();
    }

    if (mode == DetectMode::fourcycle) {
        for_each_bucket_tuple(host, 1, [&](const std::vector<int>& tuple) {
            int v = tuple[0];
            const auto& list = host.lists[v];
            for (int w = 0; w < hn; ++w) {
                if (w == v) continue;
                int first = -1;
                for (int x : list) {
                    if (x == w) continue;
                    if (!list_contains(host.lists[w], x)) continue;
                    if (first == -1) {
                        first = x;
                    } else {
                        report.found = true;
                        report.witness = std::vector<int>{v, first, w, x};
                        return true;
                    }
                }
            }
            return false;
        });
        return finish();
    }

    // dangling and paths: collect core embeddings once, then color rounds
    auto core = strip_pendant_leaves(pattern);
    auto leaf_vertices = pendant_leaves(pattern, core);
    std::vector<LeafRequirement> leaves;
    for (int leaf : leaf_vertices) leaves.push_back({leaf, pattern.neighbors(leaf)[0]});

    std::vector<int> core_index(pn, -1);
    for (int v = 0; v < core.graph.vertex_count(); ++v) core_index[core.kept[v]] = v;

    std::vector<Candidate> cands;
    auto collect = [&](const std::vector<int>& core_map) {
        Candidate c;
        c.map.assign(pn, -1);
        for (int v = 0; v < core.graph.vertex_count(); ++v) c.map[core.kept[v]] = core_map[v];
        cands.push_back(std::move(c));
        return false;  // keep enumerating
    };

    int kpath = pattern.edge_count();
    if (mode == DetectMode::paths && (kpath == 7 || kpath >= 9)) {
        // store only the second, fifth, eighth and subsequent even-numbered
        // core vertices; the gaps are re-derived from neighbor knowledge,
        // with the middle edge of each 3-gap probed
        std::vector<int> stored;  // core vertices, 0-indexed
        for (int pos : {2, 5, 8})
            if (pos <= kpath - 1) stored.push_back(pos - 1);
        for (int pos = 10; pos <= kpath - 1; pos += 2) stored.push_back(pos - 1);
        // order the core path from vertex 0: core vertex i is the i-th path vertex
        int s = static_cast<int>(stored.size());
        for_each_bucket_tuple(host, s, [&](const std::vector<int>& tuple) {
            // walk the core path, pinning stored positions to the tuple
            std::vector<int> pin(core.graph.vertex_count(), -1);
            for (int i = 0; i < s; ++i) pin[stored[i]] = tuple[i];
            std::vector<int> core_map(core.graph.vertex_count(), -1);
            std::vector<char> used(host.n, 0);
            std::function<void(int)> walk = [&](int cv) {
                if (cv == core.graph.vertex_count()) {
                    collect(core_map);
                    return;
                }
                auto try_vertex = [&](int gv) {
                    if (used[gv]) return;
                    if (cv > 0 && !list_contains(host.lists[core_map[cv - 1]], gv)) return;
                    core_map[cv] = gv;
                    used[gv] = 1;
                    walk(cv + 1);
                    used[gv] = 0;
                    core_map[cv] = -1;
                };
                if (pin[cv] != -1) {
                    try_vertex(pin[cv]);
                } else if (cv > 0) {
                    for (int gv : host.lists[core_map[cv - 1]]) try_vertex(gv);
                } else {
                    for (int gv = 0; gv < host.n; ++gv) try_vertex(gv);
                }
            };
            walk(0);
            return false;
        });
    } else {
        auto anchor_sets = core_anchor_sets(pattern, core);
        int s = anchor_sets.empty() || anchor_sets[0].empty() ? 1
                                                              : static_cast<int>(anchor_sets[0].size());
        for_each_bucket_tuple(host, s, [&](const std::vector<int>& tuple) {
            auto state = host.state_for(tuple);
            for (const auto& anchors : anchor_sets) {
                std::vector<int> targets;
                for (int a : anchors) targets.push_back(core_index[a]);
                for_each_anchored_embedding(state, core.graph, targets, collect);
            }
            return false;
        });
    }

    // dedup collected embeddings (the same core copy can anchor differently)
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) { return a.map < b.map; });
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [](const Candidate& a, const Candidate& b) { return a.map == b.map; }),
                cands.end());

    int rounds = color_rounds(pattern, confidence);
    run_color_rounds(host, pattern, cands, leaves, seed, rounds, report);
    return finish();
}

}  // namespace minorlab
