// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "minorlab/adversary.hpp"
#include "minorlab/containment.hpp"
#include "minorlab/detector.hpp"
#include "minorlab/isomorphism.hpp"
#include "minorlab/minor_theory.hpp"
#include "minorlab/spectral.hpp"
#include "minorlab/vertex_cover.hpp"
#include "minorlab/walk_cost.hpp"
#include "test_support.hpp"

using namespace minorlab;
using namespace minorlab::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    Clock::time_point start = Clock::now();
    long long checks = 0;
    long long violations = 0;
    std::string detail;

    explicit Criterion(const char* n) : name(n) {}

    void check(bool ok, const char* what = nullptr) {
        ++checks;
        if (!ok) {
            ++violations;
            if (what && detail.empty()) detail = what;
        }
    }

    void finish() {
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        bool pass = violations == 0;
        if (!pass) ++failures;
        std::printf("%-4s %s: %lld checks, %lld violations, %.1fs%s%s\n", pass ? "PASS" : "FAIL",
                    name, checks, violations, secs, detail.empty() ? "" : " - ",
                    detail.c_str());
        std::fflush(stdout);
    }
};

Graph subdivide_every_edge(const Graph& g, int times) {
    Graph out = g;
    for (auto [u, v] : g.edges()) {
        int a = u, b = v;
        for (int i = 0; i < times; ++i) {
            out = subdivide_edge(out, a, b);
            a = out.vertex_count() - 1;
        }
    }
    return out;
}

// 1. beta monotonicity and strict decrease across every graph on at most 7 vertices
void criterion_beta_lemmas() {
    Criterion c("1 beta monotonicity suite (all graphs on <= 7 vertices)");
    auto graphs = all_graphs_up_to(7);
    c.check(std::count_if(graphs.begin(), graphs.end(),
                          [](const Graph& g) { return g.vertex_count() == 7; }) == 1044,
            "wrong 7-vertex isomorphism-class count");
    for (const Graph& h : graphs) {
        int base = beta(h);
        c.check(beta(h.with_isolated_vertex()) == base, "isolated vertex changed beta");
        for (int u = 0; u < h.vertex_count(); ++u)
            for (int v = u + 1; v < h.vertex_count(); ++v) {
                if (h.has_edge(u, v)) continue;
                Graph g = h;
                g.add_edge(u, v);
                c.check(beta(g) >= base, "beta dropped under edge addition");
            }
        auto cls = classify_edges(h);
        for (auto [u, v] : h.edges())
            c.check(beta(subdivide_edge(h, u, v)) >= base, "beta dropped under subdivision");
        for (auto [u, v] : cls.internal_edges)
            for (int p = 1; p <= 3; ++p)
                for (int q = 1; q <= 3; ++q)
                    c.check(beta(replace_edge_with_paths(h, u, v, p, q)) < base,
                            "no strict decrease on internal edge");
    }
    c.finish();
}

// 2. beta zero characterization with explicit counterexample subdivisions
void criterion_beta_zero() {
    Criterion c("2 beta-zero characterization (all graphs on <= 6 vertices)");
    SearchLimits wide;
    wide.containment_max_vertices = 100;
    for (const Graph& h : all_graphs_up_to(6)) {
        bool zero = beta(h) == 0;
        c.check(zero == is_star_subdivision_family(h), "beta-zero vs star-family mismatch");
        if (h.edge_count() == 0) continue;
        if (zero) {
            // every subdivision with at most |V(H)| extra vertices keeps H
            for (const Graph& sub : enumerate_subdivisions(h, h.vertex_count()))
                c.check(is_subgraph(h, sub, false, wide).has_value(),
                        "subdivision of a star family lost the subgraph");
        } else {
            int k = std::min(h.vertex_count(), 6);
            Graph stretched = subdivide_every_edge(h, k);
            c.check(!is_subgraph(h, stretched, false, wide).has_value(),
                    "stretched subdivision still contains the pattern");
        }
    }
    c.finish();
}

// 3. containment chain and minor-strategy agreement on random pairs
void criterion_containment_chain() {
    Criterion c("3 containment consistency (10000 random pairs)");
    std::mt19937_64 rng(2026);
    std::map<std::vector<std::uint8_t>, std::set<std::vector<std::uint8_t>>> closure_memo;
    auto closure_of = [&](const Graph& g) -> const std::set<std::vector<std::uint8_t>>& {
        auto key = canonical_form(g);
        auto it = closure_memo.find(key);
        if (it != closure_memo.end()) return it->second;
        std::set<std::vector<std::uint8_t>> seen{key};
        std::vector<Graph> frontier{g};
        while (!frontier.empty()) {
            std::vector<Graph> next;
            for (const Graph& cur : frontier) {
                auto consider = [&](const Graph& d) {
                    if (seen.insert(canonical_form(d)).second) next.push_back(d);
                };
                for (auto [u, v] : cur.edges()) {
                    Graph del = cur;
                    del.remove_edge(u, v);
                    consider(del);
                    consider(contract_edge(cur, u, v));
                }
                for (int v = 0; v < cur.vertex_count(); ++v) {
                    if (cur.degree(v) != 0) continue;
                    std::vector<int> keep;
                    for (int u = 0; u < cur.vertex_count(); ++u)
                        if (u != v) keep.push_back(u);
                    consider(cur.induced(keep));
                }
            }
            frontier = std::move(next);
        }
        return closure_memo.emplace(key, std::move(seen)).first->second;
    };

    for (int trial = 0; trial < 10000; ++trial) {
        int nh = 1 + static_cast<int>(rng() % 5);
        int ng = 1 + static_cast<int>(rng() % 7);
        double ph = 0.2 + 0.6 * ((rng() >> 11) * 0x1.0p-53);
        double pg = 0.2 + 0.6 * ((rng() >> 11) * 0x1.0p-53);
        Graph h = random_graph(rng, nh, ph);
        Graph g = random_graph(rng, ng, pg);
        bool sub = is_subgraph(h, g).has_value();
        bool topo = is_topological_minor(h, g).has_value();
        bool minor_sets = is_minor(h, g).has_value();
        bool minor_closure = closure_of(g).count(canonical_form(h)) > 0;
        if (sub) c.check(topo, "subgraph without topological minor");
        if (topo) c.check(minor_sets, "topological minor without minor");
        c.check(minor_sets == minor_closure, "minor strategies disagree");
        c.check(true);
    }
    c.finish();
}

// 4. closed-form vertex covers against branch and bound
void criterion_vertex_cover() {
    Criterion c("4 vertex-cover formulas");
    for (int k = 1; k <= 10; ++k)
        c.check(vc_path(k) == min_vertex_cover(path_with_edges(k)).size, "vc_path mismatch");
    for (int d1 = 1; d1 <= 4; ++d1)
        for (int d2 = 1; d2 <= 4; ++d2)
            for (int d3 = 1; d3 <= 4; ++d3)
                c.check(vc_claw(d1, d2, d3) == min_vertex_cover(claw_subdivision(d1, d2, d3)).size,
                        "vc_claw mismatch");
    c.finish();
}

// 5. adversary quantities: explicit enumeration against symmetric counting,
// plus the scaling slopes
void criterion_adversary() {
    Criterion c("5 adversary cross-validation and scaling");
    auto forest = family_forest();
    for (int n : {9, 10, 11}) {
        auto sym = quantities_symmetric(*forest, n);
        auto exp = quantities_explicit(*forest, n);
        c.check(sym.m == exp.m, "forest m mismatch");
        c.check(sym.m_prime == exp.m_prime, "forest m' mismatch");
        c.check(sym.l_max == exp.l_max, "forest l_max mismatch");
    }
    for (auto [n, d] : {std::pair{6, 3}, std::pair{7, 3}, std::pair{7, 4}}) {
        auto fam = family_clique(d);
        auto sym = quantities_symmetric(*fam, n);
        auto exp = quantities_explicit(*fam, n);
        c.check(sym.m == exp.m, "clique m mismatch");
        c.check(sym.m_prime == exp.m_prime, "clique m' mismatch");
        c.check(sym.l_max == exp.l_max, "clique l_max mismatch");
    }
    auto forest_fit = scaling_fit(*forest, {12, 18, 27, 40, 60});
    c.check(std::abs(forest_fit.slope - 1.5) <= 0.15, "forest slope outside 1.5 +- 0.15");
    auto clique_fit = scaling_fit(*family_clique(3), {8, 16, 32, 64});
    c.check(std::abs(clique_fit.slope - 1.0) <= 0.10, "clique slope outside 1.0 +- 0.1");
    c.finish();
}

// 6. spectral gaps against the closed forms
void criterion_spectral() {
    Criterion c("6 spectral gaps");
    for (int n = 2; n <= 200; ++n) {
        long long states = 1;
        for (int k = 1;; ++k) {
            states *= n;
            if (states > 200) break;
            double numeric = hamming_gap_numeric(n, k);
            c.check(std::abs(numeric - 1.0 / k) <= 1e-9, "hamming gap off the closed form");
        }
    }
    double johnson = johnson_gap_numeric(6, 2);
    c.check(std::abs(johnson - johnson_gap(6, 2).value()) <= 1e-9, "johnson gap mismatch");
    c.finish();
}

// 7. fitted cost-model exponents
void criterion_exponents() {
    Criterion c("7 exponent table");
    std::map<std::string, double> expected = {
        {"triangle-sparse", 7.0 / 6},   {"1-path", 1.0},
        {"2-path", 1.0},                {"3-path", 1.0},
        {"4-path", 1.0},                {"5-path", 7.0 / 6},
        {"6-path", 7.0 / 6},            {"7-path", 7.0 / 6},
        {"8-path", 5.0 / 4},            {"9-path", 5.0 / 4},
        {"10-path", 5.0 / 4},           {"14-path", 4.0 / 3},
        {"4-cycle", 5.0 / 4},           {"4-cycle-bipartite", 1.0 + 5.0 / 12},
        {"6-cycle-evencycles", 1.0 + 5.0 / 12},
        {"sparse-pipeline", 3.0 / 2},
    };
    auto rows = exponent_table();
    for (const auto& [name, value] : expected) {
        bool seen = false;
        for (const auto& row : rows) {
            if (row.problem != name) continue;
            seen = true;
            c.check(std::abs(row.predicted - value) <= 1e-9, "predicted exponent off");
            c.check(std::abs(row.fitted - value) <= 0.01, "fitted exponent outside +-0.01");
        }
        c.check(seen, "missing table row");
    }
    c.finish();
}

// 8. detector equivalence on seeded sparse instances
void criterion_detector() {
    Criterion c("8 detector equivalence (500 instances)");
    std::mt19937_64 rng(424242);
    SearchLimits wide;
    wide.containment_max_vertices = 40;
    std::vector<Graph> patterns = {cycle_graph(3), cycle_graph(4), path_with_edges(5),
                                   star_graph(3)};
    long long dangling_runs = 0, dangling_hits = 0;
    long long paths_runs = 0, paths_hits = 0;
    for (int i = 0; i < 500; ++i) {
        int n = 24 + static_cast<int>(rng() % 9);
        Graph host = random_graph_with_edges(rng, n, static_cast<int>(1.5 * n));
        const Graph& pattern = patterns[(i / 2) % patterns.size()];
        bool planted = i % 2 == 1;
        if (planted) plant_copy(rng, host, pattern);

        OracleGraph oracle(host);
        auto basic = detect_subgraph(oracle, pattern, DetectMode::basic, rng());
        bool truth = is_subgraph(pattern, host, false, wide).has_value();
        c.check(basic.found == truth, "basic mode disagrees with subgraph search");
        if (basic.witness) {
            bool ok = true;
            std::set<int> used(basic.witness->begin(), basic.witness->end());
            if (used.size() != basic.witness->size()) ok = false;
            for (auto [u, v] : pattern.edges()) {
                int a = (*basic.witness)[u], b = (*basic.witness)[v];
                if (!host.has_edge(a, b) || !oracle.was_probed(a, b)) ok = false;
            }
            c.check(ok, "basic witness does not replay");
        }

        if (planted) {
            OracleGraph o2(host);
            auto dang = detect_subgraph(o2, pattern, DetectMode::dangling, rng(), 0.9);
            ++dangling_runs;
            if (dang.found) ++dangling_hits;
            if (dang.witness) {
                bool ok = true;
                for (auto [u, v] : pattern.edges()) {
                    int a = (*dang.witness)[u], b = (*dang.witness)[v];
                    if (!host.has_edge(a, b) || !o2.was_probed(a, b)) ok = false;
                }
                c.check(ok, "dangling witness does not replay");
            }
            if (pattern.vertex_count() == 6) {  // the 5-path
                OracleGraph o3(host);
                auto paths = detect_subgraph(o3, pattern, DetectMode::paths, rng(), 0.9);
                ++paths_runs;
                if (paths.found) ++paths_hits;
            }
        }
    }
    auto meets = [&](long long hits, long long runs) {
        double rate = static_cast<double>(hits) / runs;
        double sigma = std::sqrt(0.9 * 0.1 / runs);
        return rate >= 0.9 - 3 * sigma;
    };
    c.check(meets(dangling_hits, dangling_runs), "dangling success rate below target");
    c.check(meets(paths_hits, paths_runs), "paths success rate below target");
    c.finish();
}

}  // namespace

int main() {
    criterion_beta_lemmas();
    criterion_beta_zero();
    criterion_containment_chain();
    criterion_vertex_cover();
    criterion_adversary();
    criterion_spectral();
    criterion_exponents();
    criterion_detector();
    if (failures != 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
