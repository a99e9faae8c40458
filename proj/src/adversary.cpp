#include "minorlab/adversary.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "minorlab/containment.hpp"
#include "minorlab/isomorphism.hpp"

namespace minorlab {

namespace {

Graph& scratch_slot(int slot) {
    thread_local std::array<Graph, 4> slots;
    return slots[slot];
}

// Collects the bit positions where a and b differ (same vertex count).
void collect_diffs(const Graph& a, const Graph& b, std::vector<int>& out) {
    out.clear();
    int n = a.vertex_count();
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (a.has_edge(u, v) != b.has_edge(u, v)) out.push_back(pair_index(u, v));
}

// Enumerates every graph reachable from g by the two-edge swap: pick disjoint
// edges (a,b),(c,d) with no other edges among the four vertices, remove them
// and add one of the two cross matchings. Each partner passing `member` is
// reported exactly once, with the four differing bit positions. The scratch
// graph is mutated in place and restored.
template <class MemberFn, class Cb>
void for_each_swap_partner(Graph& g, const MemberFn& member, const Cb& cb) {
    thread_local std::vector<std::pair<int, int>> ebuf;
    ebuf.clear();
    for (int v = 0; v < g.vertex_count(); ++v)
        g.for_each_neighbor(v, [&](int u) {
            if (v < u) ebuf.emplace_back(v, u);
        });
    int m = static_cast<int>(ebuf.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = ebuf[i];
            auto [c, d] = ebuf[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d)) continue;
            int cross[2][2] = {{c, d}, {d, c}};
            for (auto& pairing : cross) {
                int cc = pairing[0], dd = pairing[1];
                g.remove_edge(a, b);
                g.remove_edge(c, d);
                g.add_edge(a, cc);
                g.add_edge(b, dd);
                if (member(g)) {
                    std::array<int, 4> diffs = {pair_index(a, b), pair_index(c, d),
                                                pair_index(a, cc), pair_index(b, dd)};
                    cb(g, std::span<const int>(diffs.data(), 4));
                }
                g.remove_edge(a, cc);
                g.remove_edge(b, dd);
                g.add_edge(a, b);
                g.add_edge(c, d);
            }
        }
}

// Number of swap partners of g that differ from g at `position` and satisfy
// `member`. The scratch graph is mutated and restored.
template <class MemberFn>
long long count_swap_partners_at(Graph& g, int position, const MemberFn& member) {
    auto [s, t] = index_pair(position);
    long long count = 0;
    if (g.has_edge(s, t)) {
        // (s,t) is one of the removed edges; pick the other removed edge
        thread_local std::vector<std::pair<int, int>> ebuf;
        ebuf.clear();
        for (int v = 0; v < g.vertex_count(); ++v)
            g.for_each_neighbor(v, [&](int u) {
                if (v < u) ebuf.emplace_back(v, u);
            });
        for (auto [p, q] : ebuf) {
            if (p == s || p == t || q == s || q == t) continue;
            if (g.has_edge(s, p) || g.has_edge(s, q) || g.has_edge(t, p) || g.has_edge(t, q)) continue;
            int cross[2][2] = {{p, q}, {q, p}};
            for (auto& pairing : cross) {
                int pp = pairing[0], qq = pairing[1];
                g.remove_edge(s, t);
                g.remove_edge(p, q);
                g.add_edge(s, pp);
                g.add_edge(t, qq);
                if (member(g)) ++count;
                g.remove_edge(s, pp);
                g.remove_edge(t, qq);
                g.add_edge(s, t);
                g.add_edge(p, q);
            }
        }
    } else {
        // (s,t) is one of the added edges; partners remove (s,c) and (t,d)
        thread_local std::vector<int> ns, nt;
        ns = g.neighbors(s);
        nt = g.neighbors(t);
        for (int c : ns) {
            if (c == t) continue;
            for (int d : nt) {
                if (d == s || d == c) continue;
                if (g.has_edge(c, d) || g.has_edge(s, d) || g.has_edge(t, c)) continue;
                g.remove_edge(s, c);
                g.remove_edge(t, d);
                g.add_edge(s, t);
                g.add_edge(c, d);
                if (member(g)) ++count;
                g.remove_edge(s, t);
                g.remove_edge(c, d);
                g.add_edge(s, c);
                g.add_edge(t, d);
            }
        }
    }
    return count;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int thread_budget() {
    if (const char* env = std::getenv("MINORLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return std::max(1, std::min<int>(8, static_cast<int>(hw)));
}

// Exact max of min(a/m, b/m') and of a*b over all recorded value pairs.
// Only the per-a maximum of b matters for both, so small a values index a
// table and anything larger falls back to an explicit list.
struct PairValueAccum {
    static constexpr int kTable = 4096;
    std::vector<long long> max_b = std::vector<long long>(kTable + 1, -1);
    std::vector<std::pair<long long, long long>> overflow;
    bool any = false;

    void add(long long a, long long b) {
        any = true;
        if (a <= kTable)
            max_b[a] = std::max(max_b[a], b);
        else
            overflow.emplace_back(a, b);
    }
    void merge(const PairValueAccum& o) {
        any = any || o.any;
        for (int a = 0; a <= kTable; ++a) max_b[a] = std::max(max_b[a], o.max_b[a]);
        overflow.insert(overflow.end(), o.overflow.begin(), o.overflow.end());
    }
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (long long a = 0; a <= kTable; ++a)
            if (max_b[a] >= 0) fn(a, max_b[a]);
        for (auto [a, b] : overflow) fn(a, b);
    }
};

void finalize(AdversaryQuantities& q, const PairValueAccum& values) {
    if (!values.any || q.m <= 0 || q.m_prime <= 0)
        throw std::domain_error("adversary: degenerate instance (empty X, Y, or relation)");
    long long lmax = 0, vn = 0, vd = 1;
    values.for_each([&](long long a, long long b) {
        lmax = std::max(lmax, a * b);
        // min(a/m, b/m'): compare a*m' vs b*m
        long long num, den;
        if (a * q.m_prime <= b * q.m) {
            num = a;
            den = q.m;
        } else {
            num = b;
            den = q.m_prime;
        }
        if (num * vd > vn * den) {
            vn = num;
            vd = den;
        }
    });
    q.l_max = lmax;
    q.v_num = vn;
    q.v_den = vd;
    q.quantum_bound = std::sqrt(static_cast<double>(q.m) * static_cast<double>(q.m_prime) /
                                static_cast<double>(q.l_max));
    q.classical_bound = static_cast<double>(vd) / static_cast<double>(vn);
}

// Per-position counters reset in O(1) between owners.
struct StampedCounts {
    std::vector<long long> value;
    std::vector<unsigned> stamp;
    unsigned epoch = 0;

    void reset(int size) {
        if (static_cast<int>(value.size()) < size) {
            value.assign(size, 0);
            stamp.assign(size, 0);
        }
        ++epoch;
    }
    long long& at(int i) {
        if (stamp[i] != epoch) {
            stamp[i] = epoch;
            value[i] = 0;
        }
        return value[i];
    }
};

}  // namespace

long long RelationFamily::count_related_y_at(const Graph& x, int position) const {
    auto [u, v] = index_pair(position);
    bool xbit = x.has_edge(u, v);
    long long count = 0;
    related_y(x, [&](const Graph& y, std::span<const int>) {
        if (y.has_edge(u, v) != xbit) ++count;
    });
    return count;
}

long long RelationFamily::count_related_x_at(const Graph& y, int position) const {
    auto [u, v] = index_pair(position);
    bool ybit = y.has_edge(u, v);
    long long count = 0;
    related_x(y, [&](const Graph& x, std::span<const int>) {
        if (x.has_edge(u, v) != ybit) ++count;
    });
    return count;
}

bool RelationFamily::related(const Graph& x, const Graph& y) const {
    bool found = false;
    related_y(x, [&](const Graph& partner, std::span<const int>) {
        if (!found && partner == y) found = true;
    });
    return found;
}

AdversaryQuantities quantities_symmetric(const RelationFamily& family, int n) {
    if (!family.supports(n))
        throw std::domain_error(family.name() + ": unsupported size n=" + std::to_string(n));
    auto xreps = family.x_representatives(n);
    auto yreps = family.y_representatives(n);
    if (xreps.empty() || yreps.empty())
        throw std::domain_error(family.name() + ": no representatives for n=" + std::to_string(n));

    AdversaryQuantities q;
    q.m = LLONG_MAX;
    q.m_prime = LLONG_MAX;
    for (const Graph& x : xreps) {
        long long count = 0;
        family.related_y(x, [&](const Graph&, std::span<const int>) { ++count; });
        q.m = std::min(q.m, count);
    }
    for (const Graph& y : yreps) {
        long long count = 0;
        family.related_x(y, [&](const Graph&, std::span<const int>) { ++count; });
        q.m_prime = std::min(q.m_prime, count);
    }
    if (q.m == 0 || q.m_prime == 0)
        throw std::domain_error("adversary: degenerate instance (empty relation)");

    PairValueAccum values;
    std::vector<int> diff_buf;
    StampedCounts lx;
    for (size_t xi = 0; xi < xreps.size(); ++xi) {
        const Graph& x = xreps[xi];
        lx.reset(pair_count(n));
        std::vector<std::vector<int>> per_partner_diffs;
        family.related_y(x, [&](const Graph& y, std::span<const int> diffs) {
            if (diffs.empty()) {
                collect_diffs(x, y, diff_buf);
                per_partner_diffs.emplace_back(diff_buf);
            } else {
                per_partner_diffs.emplace_back(diffs.begin(), diffs.end());
            }
            for (int i : per_partner_diffs.back()) ++lx.at(i);
        });
        // second sweep pairs each partner's positions with its own l' values
        size_t idx = 0;
        StampedCounts ly;
        family.related_y(x, [&](const Graph& y, std::span<const int>) {
            const auto& diffs = per_partner_diffs[idx++];
            ly.reset(pair_count(n));
            family.related_x(y, [&](const Graph& xb, std::span<const int> d2) {
                if (d2.empty()) {
                    collect_diffs(y, xb, diff_buf);
                    for (int i : diff_buf) ++ly.at(i);
                } else {
                    for (int i : d2) ++ly.at(i);
                }
            });
            for (int i : diffs) {
                long long a = lx.at(i), b = ly.at(i);
                values.add(a, b);
                q.records.push_back({static_cast<int>(xi), i, a, b});
            }
        });
    }
    finalize(q, values);
    return q;
}

AdversaryQuantities quantities_explicit(const RelationFamily& family, int n) {
    if (!family.supports(n))
        throw std::domain_error(family.name() + ": unsupported size n=" + std::to_string(n));

    struct Accum {
        long long min_x = LLONG_MAX, min_y = LLONG_MAX;
        bool saw_x = false, saw_y = false;
        PairValueAccum values;
    };

    int threads = thread_budget();
    int shards = threads * 8;
    std::atomic<int> next_shard{0};
    std::vector<Accum> per_thread(threads);

    auto worker = [&](int tid) {
        Accum& acc = per_thread[tid];
        StampedCounts lcounts;
        std::vector<int> diff_buf;
        std::vector<std::pair<int, long long>> other_side;  // (position, partner-side l)
        while (true) {
            int shard = next_shard.fetch_add(1);
            if (shard >= 2 * shards) break;
            bool xpass = shard < shards;
            auto visit = [&](const Graph& g) {
                lcounts.reset(pair_count(n));
                other_side.clear();
                long long count = 0;
                auto handle = [&](const Graph& partner, std::span<const int> diffs_in) {
                    ++count;
                    std::span<const int> diffs = diffs_in;
                    if (diffs.empty()) {
                        collect_diffs(g, partner, diff_buf);
                        diffs = std::span<const int>(diff_buf.data(), diff_buf.size());
                    }
                    for (int i : diffs) {
                        ++lcounts.at(i);
                        auto [u, v] = index_pair(i);
                        if (xpass) {
                            // pair the removed-edge positions here; the added-edge
                            // positions are handled from the Y side
                            if (g.has_edge(u, v))
                                other_side.emplace_back(i, family.count_related_x_at(partner, i));
                        } else {
                            if (g.has_edge(u, v))
                                other_side.emplace_back(i, family.count_related_y_at(partner, i));
                        }
                    }
                };
                if (xpass)
                    family.related_y(g, handle);
                else
                    family.related_x(g, handle);
                if (xpass) {
                    acc.saw_x = true;
                    acc.min_x = std::min(acc.min_x, count);
                    for (auto [i, lp] : other_side) acc.values.add(lcounts.at(i), lp);
                } else {
                    acc.saw_y = true;
                    acc.min_y = std::min(acc.min_y, count);
                    for (auto [i, lp] : other_side) acc.values.add(lp, lcounts.at(i));
                }
            };
            if (xpass)
                family.enumerate_x(n, shard, shards, visit);
            else
                family.enumerate_y(n, shard - shards, shards, visit);
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    AdversaryQuantities q;
    q.m = LLONG_MAX;
    q.m_prime = LLONG_MAX;
    PairValueAccum values;
    bool saw_x = false, saw_y = false;
    for (const Accum& acc : per_thread) {
        q.m = std::min(q.m, acc.min_x);
        q.m_prime = std::min(q.m_prime, acc.min_y);
        saw_x = saw_x || acc.saw_x;
        saw_y = saw_y || acc.saw_y;
        values.merge(acc.values);
    }
    if (!saw_x || !saw_y) throw std::domain_error("adversary: degenerate instance (empty X or Y)");
    finalize(q, values);
    return q;
}

FitResult scaling_fit(const RelationFamily& family, const std::vector<int>& sizes) {
    if (sizes.size() < 4) throw std::invalid_argument("scaling_fit: need at least 4 sizes");
    std::vector<double> xs, ys;
    for (int n : sizes) {
        xs.push_back(n);
        ys.push_back(quantities_symmetric(family, n).quantum_bound);
    }
    return fit_loglog(xs, ys);
}

// ---------------------------------------------------------------------------
// clique family: X = {empty graph}, Y = K_d placements, R total

namespace {

class CliqueFamily final : public RelationFamily {
public:
    explicit CliqueFamily(int d) : d_(d) {
        if (d < 2 || d > 10) throw std::invalid_argument("family_clique: need 2 <= d <= 10");
    }

    std::string name() const override { return "clique"; }
    bool supports(int n) const override { return n >= d_; }

    std::vector<Graph> x_representatives(int n) const override { return {empty_graph(n)}; }

    std::vector<Graph> y_representatives(int n) const override {
        Graph y(n);
        for (int u = 0; u < d_; ++u)
            for (int v = u + 1; v < d_; ++v) y.add_edge(u, v);
        return {y};
    }

    void related_y(const Graph& x, const PartnerFn& fn) const override {
        int n = x.vertex_count();
        Graph& y = scratch_slot(0);
        std::vector<int> members(d_);
        std::vector<int> positions;
        // all d-subsets in lexicographic order
        for (int i = 0; i < d_; ++i) members[i] = i;
        while (true) {
            y = x;  // empty
            positions.clear();
            for (int i = 0; i < d_; ++i)
                for (int j = i + 1; j < d_; ++j) {
                    y.add_edge(members[i], members[j]);
                    positions.push_back(pair_index(members[i], members[j]));
                }
            fn(y, std::span<const int>(positions.data(), positions.size()));
            int i = d_ - 1;
            while (i >= 0 && members[i] == n - d_ + i) --i;
            if (i < 0) break;
            ++members[i];
            for (int j = i + 1; j < d_; ++j) members[j] = members[j - 1] + 1;
        }
    }

    void related_x(const Graph& y, const PartnerFn& fn) const override {
        Graph& x = scratch_slot(1);
        x = y;
        x.clear_edges();
        std::vector<int> positions;
        for (auto [u, v] : y.edges()) positions.push_back(pair_index(u, v));
        fn(x, std::span<const int>(positions.data(), positions.size()));
    }

    long long count_related_y_at(const Graph& x, int) const override {
        return binomial(x.vertex_count() - 2, d_ - 2);
    }

    long long count_related_x_at(const Graph& y, int position) const override {
        auto [u, v] = index_pair(position);
        return y.has_edge(u, v) ? 1 : 0;
    }

    void enumerate_x(int n, int shard, int, const GraphFn& fn) const override {
        if (shard == 0) fn(empty_graph(n));
    }

    void enumerate_y(int n, int shard, int num_shards, const GraphFn& fn) const override {
        Graph& y = scratch_slot(2);
        y = empty_graph(n);
        std::vector<int> members(d_);
        for (int i = 0; i < d_; ++i) members[i] = i;
        long long idx = 0;
        while (true) {
            if (idx++ % num_shards == shard) {
                y.clear_edges();
                for (int i = 0; i < d_; ++i)
                    for (int j = i + 1; j < d_; ++j) y.add_edge(members[i], members[j]);
                fn(y);
            }
            int i = d_ - 1;
            while (i >= 0 && members[i] == n - d_ + i) --i;
            if (i < 0) break;
            ++members[i];
            for (int j = i + 1; j < d_; ++j) members[j] = members[j - 1] + 1;
        }
    }

private:
    int d_;
};

// ---------------------------------------------------------------------------
// forest family: labeled paths vs cycle-plus-path unions
//
// Swaps preserve degrees, so every related partner of a path keeps its two
// endpoints and every partner of a cycle-plus-path keeps the path ends. All
// enumeration and counting work on the vertex orders along the components,
// where the swap geometry makes membership a length-range check: removing
// path edges at positions i < j and adding (p_i, p_{j+1}), (p_{i+1}, p_j)
// closes the segment i+1..j into a cycle of length g = j - i and leaves a
// path on the remaining n - g vertices; the reverse swap rejoins them.

struct PathOrder {
    std::vector<int> order;  // vertex at each position
    bool ok = false;
};

struct CyclePathOrder {
    std::vector<int> cycle;  // cyclic order
    std::vector<int> path;   // path order
    bool ok = false;
};

void trace_path(const Graph& g, PathOrder& out) {
    out.ok = false;
    out.order.clear();
    int n = g.vertex_count();
    if (n == 0 || g.edge_count() != n - 1) return;
    int start = -1;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 0 || d > 2) return;
        if (d == 1) start = v;
    }
    if (start == -1) return;
    int prev = -1, cur = start;
    out.order.push_back(cur);
    while (true) {
        int next = -1;
        g.for_each_neighbor(cur, [&](int u) {
            if (u != prev) next = u;
        });
        if (next == -1) break;
        prev = cur;
        cur = next;
        out.order.push_back(cur);
    }
    out.ok = static_cast<int>(out.order.size()) == n;
}

void trace_cycle_path(const Graph& g, CyclePathOrder& out) {
    out.ok = false;
    out.cycle.clear();
    out.path.clear();
    int n = g.vertex_count();
    if (g.edge_count() != n - 1) return;
    int start = -1, ones = 0;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 0 || d > 2) return;
        if (d == 1) {
            ++ones;
            start = v;
        }
    }
    if (ones != 2) return;
    std::uint64_t visited = 0;
    int prev = -1, cur = start;
    out.path.push_back(cur);
    visited |= std::uint64_t{1} << cur;
    while (true) {
        int next = -1;
        g.for_each_neighbor(cur, [&](int u) {
            if (u != prev) next = u;
        });
        if (next == -1) break;
        prev = cur;
        cur = next;
        out.path.push_back(cur);
        visited |= std::uint64_t{1} << cur;
    }
    int p = static_cast<int>(out.path.size());
    int c = n - p;
    if (c < 3 || 3 * c <= n || 3 * p <= n) return;
    int c0 = -1;
    for (int v = 0; v < n; ++v)
        if (!((visited >> v) & 1u)) {
            c0 = v;
            break;
        }
    if (c0 == -1) return;
    prev = -1;
    cur = c0;
    out.cycle.push_back(cur);
    for (int step = 0; step < c; ++step) {
        int next = -1;
        g.for_each_neighbor(cur, [&](int u) {
            if (u != prev) next = u;
        });
        if (next == -1) return;
        prev = cur;
        cur = next;
        if (cur == c0) break;
        out.cycle.push_back(cur);
        if ((visited >> cur) & 1u) return;  // strayed onto the path
        visited |= std::uint64_t{1} << cur;
    }
    out.ok = cur == c0 && static_cast<int>(out.cycle.size()) == c;
}

// cycle lengths allowed by the "both parts longer than n/3" constraint
inline bool valid_cycle_len(int g, int n) { return g >= 3 && 3 * g > n && 3 * (n - g) > n; }

class ForestFamily final : public RelationFamily {
public:
    std::string name() const override { return "forest"; }
    bool supports(int n) const override { return n >= 9 && n <= 60; }

    std::vector<Graph> x_representatives(int n) const override { return {path_with_edges(n - 1)}; }

    std::vector<Graph> y_representatives(int n) const override {
        std::vector<Graph> reps;
        for (int c = 3; c <= n; ++c) {
            int p = n - c;
            if (!valid_cycle_len(c, n) || p < 1) continue;
            reps.push_back(cycle_graph(c).disjoint_union(path_with_edges(p - 1)));
        }
        return reps;
    }

    void related_y(const Graph& x, const PartnerFn& fn) const override {
        thread_local PathOrder layout;
        trace_path(x, layout);
        if (!layout.ok) return;
        int n = x.vertex_count();
        Graph& scratch = scratch_slot(0);
        scratch = x;
        const auto& ord = layout.order;
        for (int g = 3; g < n; ++g) {
            if (!valid_cycle_len(g, n)) continue;
            for (int i = 0; i + g + 1 < n; ++i) {
                int j = i + g;
                int a = ord[i], b = ord[i + 1], c = ord[j], d = ord[j + 1];
                scratch.remove_edge(a, b);
                scratch.remove_edge(c, d);
                scratch.add_edge(a, d);
                scratch.add_edge(b, c);
                std::array<int, 4> diffs = {pair_index(a, b), pair_index(c, d), pair_index(a, d),
                                            pair_index(b, c)};
                fn(scratch, std::span<const int>(diffs.data(), 4));
                scratch.remove_edge(a, d);
                scratch.remove_edge(b, c);
                scratch.add_edge(a, b);
                scratch.add_edge(c, d);
            }
        }
    }

    void related_x(const Graph& y, const PartnerFn& fn) const override {
        thread_local CyclePathOrder layout;
        trace_cycle_path(y, layout);
        if (!layout.ok) return;
        Graph& scratch = scratch_slot(1);
        scratch = y;
        int c = static_cast<int>(layout.cycle.size());
        int p = static_cast<int>(layout.path.size());
        for (int a = 0; a < c; ++a) {
            int a1 = layout.cycle[a], a2 = layout.cycle[(a + 1) % c];
            for (int b = 0; b + 1 < p; ++b) {
                int b1 = layout.path[b], b2 = layout.path[b + 1];
                int pairing[2][2] = {{b1, b2}, {b2, b1}};
                for (auto& pr : pairing) {
                    scratch.remove_edge(a1, a2);
                    scratch.remove_edge(b1, b2);
                    scratch.add_edge(a1, pr[0]);
                    scratch.add_edge(a2, pr[1]);
                    std::array<int, 4> diffs = {pair_index(a1, a2), pair_index(b1, b2),
                                                pair_index(a1, pr[0]), pair_index(a2, pr[1])};
                    fn(scratch, std::span<const int>(diffs.data(), 4));
                    scratch.remove_edge(a1, pr[0]);
                    scratch.remove_edge(a2, pr[1]);
                    scratch.add_edge(a1, a2);
                    scratch.add_edge(b1, b2);
                }
            }
        }
    }

    long long count_related_y_at(const Graph& x, int position) const override {
        thread_local PathOrder layout;
        trace_path(x, layout);
        if (!layout.ok) return 0;
        int n = x.vertex_count();
        thread_local std::vector<int> pos_of;
        pos_of.assign(n, -1);
        for (int i = 0; i < n; ++i) pos_of[layout.order[i]] = i;
        auto [s, t] = index_pair(position);
        int ps = pos_of[s], pt = pos_of[t];
        if (ps > pt) std::swap(ps, pt);
        long long count = 0;
        if (x.has_edge(s, t)) {
            // removed edge at path index ps; the other removed edge sits g apart
            for (int g = 3; g < n; ++g) {
                if (!valid_cycle_len(g, n)) continue;
                if (ps + g + 1 < n) ++count;               // plays the left role
                if (ps - g >= 0 && ps + 1 < n) ++count;    // plays the right role
            }
        } else {
            // added edge: (p_i, p_{j+1}) with i = ps, j = pt-1, or
            // (p_{i+1}, p_j) with i = ps-1, j = pt
            int g1 = pt - 1 - ps;
            if (pt <= n - 1 && valid_cycle_len(g1, n) && ps + g1 + 1 < n) ++count;
            int g2 = pt - ps + 1;
            if (ps >= 1 && pt + 1 < n && valid_cycle_len(g2, n)) ++count;
        }
        return count;
    }

    long long count_related_x_at(const Graph& y, int position) const override {
        thread_local CyclePathOrder layout;
        trace_cycle_path(y, layout);
        if (!layout.ok) return 0;
        int n = y.vertex_count();
        int c = static_cast<int>(layout.cycle.size());
        int p = static_cast<int>(layout.path.size());
        thread_local std::vector<int> cpos, ppos;
        cpos.assign(n, -1);
        ppos.assign(n, -1);
        for (int i = 0; i < c; ++i) cpos[layout.cycle[i]] = i;
        for (int i = 0; i < p; ++i) ppos[layout.path[i]] = i;
        auto [s, t] = index_pair(position);
        if (y.has_edge(s, t)) {
            // a removed edge pairs with every edge of the other component
            bool on_cycle = cpos[s] >= 0;
            return on_cycle ? 2LL * (p - 1) : 2LL * c;
        }
        // an added edge joins a cycle vertex to a path vertex
        int cv = cpos[s] >= 0 ? s : (cpos[t] >= 0 ? t : -1);
        int pv = ppos[s] >= 0 ? s : (ppos[t] >= 0 ? t : -1);
        if (cv == -1 || pv == -1) return 0;
        int cycle_choices = 2;  // the two cycle edges at cv
        int path_choices = (ppos[pv] > 0 ? 1 : 0) + (ppos[pv] + 1 < p ? 1 : 0);
        return static_cast<long long>(cycle_choices) * path_choices;
    }

    void enumerate_x(int n, int shard, int num_shards, const GraphFn& fn) const override {
        // labeled paths = vertex sequences up to reversal; fix the smaller
        // endpoint first and shard on the ordered (first, second) prefix
        Graph& g = scratch_slot(3);
        g = empty_graph(n);
        std::vector<int> rest;
        long long idx = 0;
        for (int first = 0; first < n; ++first)
            for (int second = 0; second < n; ++second) {
                if (second == first) continue;
                if (idx++ % num_shards != shard) continue;
                rest.clear();
                for (int v = 0; v < n; ++v)
                    if (v != first && v != second) rest.push_back(v);
                do {
                    if (first > rest.back()) continue;  // reversal dedup
                    g.clear_edges();
                    g.add_edge(first, second);
                    int prev = second;
                    for (int v : rest) {
                        g.add_edge(prev, v);
                        prev = v;
                    }
                    fn(g);
                } while (std::next_permutation(rest.begin(), rest.end()));
            }
    }

    void enumerate_y(int n, int shard, int num_shards, const GraphFn& fn) const override {
        Graph& g = scratch_slot(3);
        g = empty_graph(n);
        long long idx = 0;
        for (int c = 3; c <= n; ++c) {
            int p = n - c;
            if (3 * c <= n || 3 * p <= n) continue;
            // choose the cycle's vertex set
            std::vector<int> members(c);
            for (int i = 0; i < c; ++i) members[i] = i;
            while (true) {
                if (idx++ % num_shards == shard) emit_split(n, members, fn, g);
                int i = c - 1;
                while (i >= 0 && members[i] == n - c + i) --i;
                if (i < 0) break;
                ++members[i];
                for (int j = i + 1; j < c; ++j) members[j] = members[j - 1] + 1;
            }
        }
    }

private:
    static void emit_split(int n, const std::vector<int>& cycle_members, const GraphFn& fn, Graph& g) {
        int c = static_cast<int>(cycle_members.size());
        std::vector<int> path_members;
        {
            std::vector<char> in_cycle(n, 0);
            for (int v : cycle_members) in_cycle[v] = 1;
            for (int v = 0; v < n; ++v)
                if (!in_cycle[v]) path_members.push_back(v);
        }
        // cycle arrangements: fix the smallest member first, dedup reflection
        std::vector<int> arr(cycle_members.begin() + 1, cycle_members.end());
        std::sort(arr.begin(), arr.end());
        do {
            if (c > 2 && arr.front() > arr.back()) continue;  // reflection dedup
            // path arrangements: dedup reversal
            std::sort(path_members.begin(), path_members.end());
            do {
                if (path_members.size() > 1 && path_members.front() > path_members.back()) continue;
                g.clear_edges();
                int prev = cycle_members[0];
                for (int v : arr) {
                    g.add_edge(prev, v);
                    prev = v;
                }
                g.add_edge(prev, cycle_members[0]);
                for (size_t i = 0; i + 1 < path_members.size(); ++i)
                    g.add_edge(path_members[i], path_members[i + 1]);
                fn(g);
            } while (std::next_permutation(path_members.begin(), path_members.end()));
        } while (std::next_permutation(arr.begin(), arr.end()));
    }
};

// ---------------------------------------------------------------------------
// edge-split family: the generic topological-minor lower-bound construction

class EdgeSplitFamily final : public RelationFamily {
public:
    EdgeSplitFamily(Graph g, int u, int v) : base_(std::move(g)), u_(u), v_(v) {
        if (!base_.has_edge(u_, v_)) throw std::invalid_argument("family_edge_split: edge not present");
        if (!base_.is_connected()) throw std::invalid_argument("family_edge_split: base graph must be connected");
        if (base_.vertex_count() > 8)
            throw std::invalid_argument("family_edge_split: base graph limited to 8 vertices");
    }

    std::string name() const override { return "edge-split"; }

    bool supports(int n) const override {
        return n > base_.vertex_count() + 1 && n <= kMaxN && !y_splits(n).empty() &&
               !x_representatives(n).empty();
    }

    std::vector<Graph> x_representatives(int n) const override {
        std::vector<Graph> reps;
        std::vector<std::vector<std::uint8_t>> forms;
        int k = base_.vertex_count();
        // both attached paths stay long: at least n/3 when the budget allows,
        // otherwise as balanced as possible
        int lo = std::min((n + 2) / 3, (n - k) / 2);
        for (int n1 = lo; n1 <= n - k - lo; ++n1) {
            Graph rep = make_x(n, n1);
            auto form = canonical_form(rep);
            if (std::find(forms.begin(), forms.end(), form) == forms.end()) {
                forms.push_back(form);
                reps.push_back(std::move(rep));
            }
        }
        return reps;
    }

    std::vector<Graph> y_representatives(int n) const override {
        std::vector<Graph> reps;
        std::vector<std::vector<std::uint8_t>> forms;
        for (int s1 : y_splits(n)) {
            Graph rep = make_y(n, s1);
            auto form = canonical_form(rep);
            if (std::find(forms.begin(), forms.end(), form) == forms.end()) {
                forms.push_back(form);
                reps.push_back(std::move(rep));
            }
        }
        return reps;
    }

    void related_y(const Graph& x, const PartnerFn& fn) const override {
        Graph scratch = x;
        const auto& forms = y_forms(x.vertex_count());
        for_each_swap_partner(scratch, [&](const Graph& g) { return member_of(g, forms); }, fn);
    }

    void related_x(const Graph& y, const PartnerFn& fn) const override {
        Graph scratch = y;
        const auto& forms = x_forms(y.vertex_count());
        for_each_swap_partner(scratch, [&](const Graph& g) { return member_of(g, forms); }, fn);
    }

    void enumerate_x(int n, int shard, int num_shards, const GraphFn& fn) const override {
        enumerate_members(n, shard, num_shards, x_representatives(n), fn);
    }

    void enumerate_y(int n, int shard, int num_shards, const GraphFn& fn) const override {
        enumerate_members(n, shard, num_shards, y_representatives(n), fn);
    }

private:
    static constexpr int kMaxN = 18;  // membership checks go through canonical forms

    std::vector<int> y_splits(int n) const {
        std::vector<int> out;
        int k = base_.vertex_count();
        for (int s1 = 1; k + s1 + 2 <= n; ++s1) {
            int p2 = n - k - s1;
            if (3 * (k + s1) > n && 3 * p2 > n) out.push_back(s1);
        }
        return out;
    }

    Graph make_x(int n, int n1) const {
        int k = base_.vertex_count();
        int n2 = n - k - n1;
        Graph g(n);
        for (auto [a, b] : base_.edges())
            if (!(a == std::min(u_, v_) && b == std::max(u_, v_))) g.add_edge(a, b);
        int prev = u_;
        for (int i = 0; i < n1; ++i) {
            g.add_edge(prev, k + i);
            prev = k + i;
        }
        prev = v_;
        for (int i = 0; i < n2; ++i) {
            g.add_edge(prev, k + n1 + i);
            prev = k + n1 + i;
        }
        return g;
    }

    Graph make_y(int n, int s1) const {
        int k = base_.vertex_count();
        int p2 = n - k - s1;
        Graph g = base_;
        int a = u_, b = v_;
        for (int i = 0; i < s1; ++i) {
            g = subdivide_edge(g, a, b);
            a = g.vertex_count() - 1;  // keep splitting the segment nearest v
        }
        return g.disjoint_union(path_with_edges(p2 - 1));
    }

    const std::vector<std::vector<std::uint8_t>>& x_forms(int n) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto& forms = x_forms_[n];
        if (forms.empty())
            for (const Graph& rep : x_representatives(n)) forms.push_back(canonical_form(rep));
        return forms;
    }

    const std::vector<std::vector<std::uint8_t>>& y_forms(int n) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto& forms = y_forms_[n];
        if (forms.empty())
            for (const Graph& rep : y_representatives(n)) forms.push_back(canonical_form(rep));
        return forms;
    }

    static bool member_of(const Graph& g, const std::vector<std::vector<std::uint8_t>>& forms) {
        auto form = canonical_form(g);
        return std::find(forms.begin(), forms.end(), form) != forms.end();
    }

    // Full labeled enumeration: all distinct placements of each
    // representative. Feasible only for tiny n, which the gate enforces.
    void enumerate_members(int n, int shard, int num_shards, const std::vector<Graph>& source,
                           const GraphFn& fn) const {
        if (n > 9) throw std::domain_error("family_edge_split: explicit enumeration limited to n <= 9");
        std::set<std::vector<std::uint8_t>> seen_labeled;
        long long idx = 0;
        for (const Graph& rep : source) {
            std::vector<int> p(n);
            for (int i = 0; i < n; ++i) p[i] = i;
            do {
                Graph g = rep.permuted(p);
                std::vector<std::uint8_t> key;
                key.reserve(pair_count(n) / 8 + 2);
                int bit = 0;
                std::uint8_t cur = 0;
                for (int vtx = 1; vtx < n; ++vtx)
                    for (int utx = 0; utx < vtx; ++utx) {
                        cur = static_cast<std::uint8_t>((cur << 1) | (g.has_edge(utx, vtx) ? 1 : 0));
                        if (++bit == 8) {
                            key.push_back(cur);
                            bit = 0;
                            cur = 0;
                        }
                    }
                if (bit) key.push_back(cur);
                if (!seen_labeled.insert(key).second) continue;
                if (idx++ % num_shards == shard) fn(g);
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }

    Graph base_;
    int u_, v_;
    mutable std::mutex mu_;
    mutable std::map<int, std::vector<std::vector<std::uint8_t>>> x_forms_;
    mutable std::map<int, std::vector<std::vector<std::uint8_t>>> y_forms_;
};

}  // namespace

std::unique_ptr<RelationFamily> family_clique(int d) { return std::make_unique<CliqueFamily>(d); }

std::unique_ptr<RelationFamily> family_forest() { return std::make_unique<ForestFamily>(); }

std::unique_ptr<RelationFamily> family_edge_split(Graph g, int u, int v) {
    return std::make_unique<EdgeSplitFamily>(std::move(g), u, v);
}

}  // namespace minorlab
