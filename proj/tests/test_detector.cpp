#include <doctest.h>

#include <cmath>

#include "minorlab/detector.hpp"
#include "test_support.hpp"

using namespace minorlab;
using namespace minorlab::testing;

namespace {

bool witness_replays(const Graph& pattern, const OracleGraph& oracle, const Graph& host,
                     const std::vector<int>& map) {
    std::set<int> used(map.begin(), map.end());
    if (used.size() != map.size()) return false;
    for (auto [u, v] : pattern.edges()) {
        if (!host.has_edge(map[u], map[v])) return false;
        if (!oracle.was_probed(map[u], map[v])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("oracle probe accounting") {
    OracleGraph oracle(cycle_graph(5));
    CHECK(oracle.probe_count() == 0);
    CHECK(oracle.probe(0, 1));
    CHECK(!oracle.probe(0, 2));
    CHECK(oracle.probe(0, 2) == false);  // repeated probes count again
    CHECK(oracle.probe_count() == 3);
    CHECK(oracle.was_probed(0, 1));
    CHECK(!oracle.was_probed(1, 2));
}

TEST_CASE("degree buckets") {
    // 3-regular: every vertex in the 1-4 and 2-8 buckets
    OracleGraph cube(complete_bipartite(3, 3));
    auto buckets = degree_buckets(cube);
    REQUIRE(buckets.size() >= 2);
    CHECK(buckets[0].first == 2);
    CHECK(buckets[0].second.size() == 6);
    CHECK(buckets[1].first == 4);
    CHECK(buckets[1].second.size() == 6);

    OracleGraph star(star_graph(8));
    auto sb = degree_buckets(star);
    // leaves only in the 1-4 bucket, the center in 4-16 (and 2-8)
    for (auto& [q, members] : sb) {
        bool has_center = std::find(members.begin(), members.end(), 0) != members.end();
        if (q == 8) CHECK(has_center);
        if (q == 2) {
            CHECK(!has_center);
            CHECK(members.size() == 8);
        }
    }
}

TEST_CASE("bucket intervals cover every degree with headroom") {
    auto in_bucket = [](long long q, long long d) { return d >= q / 2 && d <= 2 * q; };
    for (long long d = 2; d <= 10000; ++d) {
        int covering = 0;
        bool far_from_right_end = false;
        for (long long q = 2; q / 2 <= d; q *= 2) {
            if (!in_bucket(q, d)) continue;
            ++covering;
            if (2 * q - d >= (d + 1) / 2) far_from_right_end = true;
        }
        CHECK(covering >= 2);
        CHECK(far_from_right_end);
    }
}

TEST_CASE("marked predicate recognizes covers") {
    Graph host(6);
    host.add_edge(0, 1);
    host.add_edge(0, 2);
    host.add_edge(1, 2);  // triangle 0-1-2
    host.add_edge(3, 4);
    OracleGraph oracle(host);
    Graph c3 = cycle_graph(3);

    auto adjacent = make_tuple_state(oracle, {0, 1});
    auto w = marked_predicate(adjacent, c3);
    REQUIRE(w.has_value());
    CHECK(witness_replays(c3, oracle, host, *w));

    // two non-adjacent vertices never cover a triangle, shared neighbors or not
    auto nonadjacent = make_tuple_state(oracle, {1, 4});
    CHECK(!marked_predicate(nonadjacent, c3).has_value());

    auto far = make_tuple_state(oracle, {3, 4});
    CHECK(!marked_predicate(far, c3).has_value());

    CHECK_THROWS_AS(marked_predicate(adjacent, Graph(3)), std::invalid_argument);
}

TEST_CASE("marked predicate matches brute force on planted instances") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 25; ++trial) {
        Graph host = random_graph_with_edges(rng, 14, 16);
        Graph pattern = trial % 2 ? cycle_graph(4) : cycle_graph(3);
        plant_copy(rng, host, pattern);
        OracleGraph oracle(host);
        // try every pair as the stored cover; some must certify the copy
        bool found = false;
        for (int a = 0; a < 14 && !found; ++a)
            for (int b = 0; b < 14 && !found; ++b) {
                if (a == b) continue;
                auto state = make_tuple_state(oracle, {a, b});
                if (auto w = marked_predicate(state, pattern)) {
                    CHECK(witness_replays(pattern, oracle, host, *w));
                    found = true;
                }
            }
        CHECK(found == subgraph_by_enumeration(pattern, host));
    }
}

TEST_CASE("dangling predicate uses color flags") {
    // planted 5-path 0-1-2-3-4-5 plus noise vertex 6
    Graph host(8);
    for (int i = 0; i < 5; ++i) host.add_edge(i, i + 1);
    host.add_edge(6, 2);
    Graph pattern = path_with_edges(5);

    ColorAssignment good(8, 3);  // background label l+1 = 3
    good[0] = 1;                 // leaf labels in vertex order
    good[5] = 2;
    OracleGraph oracle(host);
    auto state = make_tuple_state_with_flags(oracle, {2, 4}, good, 2);
    auto w = marked_predicate_dangling(state, pattern, good);
    REQUIRE(w.has_value());
    CHECK(witness_replays(pattern, oracle, host, *w));

    // a colliding leaf coloring may reject
    ColorAssignment bad(8, 3);
    bad[0] = 1;
    bad[5] = 1;
    OracleGraph oracle2(host);
    auto state2 = make_tuple_state_with_flags(oracle2, {2, 4}, bad, 2);
    CHECK(!marked_predicate_dangling(state2, pattern, bad).has_value());

    // without pendant leaves the predicate ignores colors entirely
    Graph c3 = cycle_graph(3);
    ColorAssignment any(8, 1);
    host.add_edge(0, 2);
    OracleGraph oracle3(host);
    auto state3 = make_tuple_state(oracle3, {0, 1});
    CHECK(marked_predicate_dangling(state3, c3, any).has_value() ==
          marked_predicate(state3, c3).has_value());
}

TEST_CASE("color rounds") {
    CHECK(color_rounds(cycle_graph(4), 0.9) == 1);
    CHECK(color_rounds(path_with_edges(5), 0.9) == 1678);
    CHECK_THROWS_AS(color_rounds(cycle_graph(4), 1.5), std::invalid_argument);
}

TEST_CASE("color coding success rate meets the bound") {
    // planted correctly colored 5-path: per-round success >= 3^-6 implies
    // the round budget reaches the target confidence
    std::mt19937_64 rng(71);
    Graph host(12);
    for (int i = 0; i < 5; ++i) host.add_edge(i, i + 1);
    Graph pattern = path_with_edges(5);
    int rounds = color_rounds(pattern, 0.9);
    int trials = 1000, hits = 0;
    for (int t = 0; t < trials; ++t) {
        OracleGraph oracle(host);
        auto report = detect_subgraph(oracle, pattern, DetectMode::dangling, rng(), 0.9);
        if (report.found) ++hits;
        CHECK(report.rounds <= rounds);
    }
    double rate = static_cast<double>(hits) / trials;
    double sigma = std::sqrt(0.9 * 0.1 / trials);
    CHECK(rate >= 0.9 - 3 * sigma);
}

TEST_CASE("three path check") {
    Graph host(8);
    host.add_edge(0, 2);
    host.add_edge(2, 3);
    host.add_edge(3, 1);  // 3-path between 0 and 1
    host.add_edge(4, 5);
    OracleGraph oracle(host);
    auto state = make_tuple_state(oracle, {0, 1});
    long long before = oracle.probe_count();
    CHECK(check_3path(0, 1, state, oracle));
    CHECK(oracle.probe_count() - before <= 1LL * host.degree(0) * host.degree(1));

    OracleGraph oracle2(host);
    auto state2 = make_tuple_state(oracle2, {0, 4});
    before = oracle2.probe_count();
    CHECK(!check_3path(0, 4, state2, oracle2));
    CHECK(oracle2.probe_count() - before <= 1LL * host.degree(0) * host.degree(4));
}

TEST_CASE("adjacent-to-two check") {
    Graph square = cycle_graph(4);
    OracleGraph oracle(square);
    auto state = make_tuple_state(oracle, {0});
    CHECK(check_adjacent_to_two(0, state, oracle));

    // trees have no 4-cycles
    Graph tree = star_graph(5);
    OracleGraph toracle(tree);
    for (int v = 0; v < tree.vertex_count(); ++v) {
        auto s = make_tuple_state(toracle, {v});
        long long before = toracle.probe_count();
        CHECK(!check_adjacent_to_two(v, s, toracle));
        CHECK(toracle.probe_count() - before <= 1LL * tree.vertex_count() * tree.degree(v));
    }

    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph_with_edges(rng, 16, 24);
        OracleGraph ro(g);
        for (int v = 0; v < 4; ++v) {
            auto s = make_tuple_state(ro, {v});
            bool brute = false;
            for (int w = 0; w < 16 && !brute; ++w) {
                if (w == v) continue;
                int hits = 0;
                for (int x : g.neighbors(v))
                    if (x != w && g.has_edge(w, x)) ++hits;
                brute = hits >= 2;
            }
            CHECK(check_adjacent_to_two(v, s, ro) == brute);
        }
    }
}

TEST_CASE("detect basic agrees with brute force") {
    std::mt19937_64 rng(79);
    std::vector<Graph> patterns = {cycle_graph(3), cycle_graph(4), path_with_edges(5),
                                   star_graph(3)};
    for (int trial = 0; trial < 40; ++trial) {
        const Graph& pattern = patterns[trial % patterns.size()];
        Graph host = random_graph_with_edges(rng, 18, 22);
        if (trial % 2) plant_copy(rng, host, pattern);
        OracleGraph oracle(host);
        auto report = detect_subgraph(oracle, pattern, DetectMode::basic, 1);
        CAPTURE(trial);
        CHECK(report.found == subgraph_by_enumeration(pattern, host));
        if (report.witness) CHECK(witness_replays(pattern, oracle, host, *report.witness));
    }
}

TEST_CASE("detect modes on planted patterns") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 10; ++trial) {
        Graph host = random_graph_with_edges(rng, 20, 22);
        plant_copy(rng, host, path_with_edges(5));
        OracleGraph o1(host);
        auto dangling = detect_subgraph(o1, path_with_edges(5), DetectMode::dangling, 7);
        CHECK(dangling.found);
        OracleGraph o2(host);
        auto paths = detect_subgraph(o2, path_with_edges(5), DetectMode::paths, 7);
        CHECK(paths.found);
    }
    // 7-paths exercise the sparse-storage assembly with probed middle edges
    for (int trial = 0; trial < 10; ++trial) {
        Graph host = random_graph_with_edges(rng, 22, 20);
        plant_copy(rng, host, path_with_edges(7));
        OracleGraph oracle(host);
        auto report = detect_subgraph(oracle, path_with_edges(7), DetectMode::paths, 11);
        CHECK(report.found);
        if (report.witness)
            CHECK(witness_replays(path_with_edges(7), oracle, host, *report.witness));
    }
    // larger sparse hosts: planted 5-paths found with high probability
    int found = 0;
    for (int trial = 0; trial < 5; ++trial) {
        Graph host = random_graph_with_edges(rng, 40, 70);
        plant_copy(rng, host, path_with_edges(5));
        OracleGraph oracle(host);
        if (detect_subgraph(oracle, path_with_edges(5), DetectMode::dangling, trial).found) ++found;
    }
    CHECK(found >= 4);
}

TEST_CASE("detect fourcycle mode") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 20; ++trial) {
        Graph host = random_graph_with_edges(rng, 20, 24);
        if (trial % 2) plant_copy(rng, host, cycle_graph(4));
        OracleGraph oracle(host);
        auto report = detect_subgraph(oracle, cycle_graph(4), DetectMode::fourcycle, 1);
        CHECK(report.found == subgraph_by_enumeration(cycle_graph(4), host));
        if (report.witness) CHECK(witness_replays(cycle_graph(4), oracle, host, *report.witness));
    }
    // dense hosts are accepted by the edge-count gate without tuple search
    OracleGraph dense(complete_graph(24));
    auto gated = detect_subgraph(dense, cycle_graph(4), DetectMode::fourcycle, 1);
    CHECK(gated.found);
    CHECK(gated.gate_accepted);
    CHECK(!gated.witness.has_value());

    CHECK_THROWS_AS(detect_subgraph(dense, cycle_graph(5), DetectMode::fourcycle, 1),
                    std::invalid_argument);
}

TEST_CASE("detect degenerate patterns and determinism") {
    Graph host = cycle_graph(6);
    OracleGraph o1(host);
    auto empty = detect_subgraph(o1, Graph(4), DetectMode::basic, 1);
    CHECK(empty.found);
    CHECK(empty.probes == 0);

    // identical seeds give identical reports
    std::mt19937_64 rng(97);
    Graph g = random_graph_with_edges(rng, 16, 20);
    plant_copy(rng, g, path_with_edges(5));
    OracleGraph a(g), b(g);
    auto ra = detect_subgraph(a, path_with_edges(5), DetectMode::dangling, 123);
    auto rb = detect_subgraph(b, path_with_edges(5), DetectMode::dangling, 123);
    CHECK(ra.found == rb.found);
    CHECK(ra.probes == rb.probes);
    CHECK(ra.rounds == rb.rounds);
    CHECK(ra.witness == rb.witness);
}
