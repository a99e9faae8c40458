#include <doctest.h>

#include "minorlab/minor_theory.hpp"
#include "minorlab/vertex_cover.hpp"
#include "test_support.hpp"

using namespace minorlab;
using namespace minorlab::testing;

namespace {

Graph two_triangles_joined_by_path() {
    // triangles {0,1,2} and {5,6,7} joined by the 3-edge path 2-3-4-5
    Graph g(8);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(5, 6);
    g.add_edge(5, 7);
    g.add_edge(6, 7);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    return g;
}

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

}  // namespace

TEST_CASE("edge classification examples") {
    auto c5 = classify_edges(cycle_graph(5));
    CHECK(c5.internal_edges.size() == 5);
    CHECK(c5.external_edges.empty());

    auto p6 = classify_edges(path_with_edges(6));
    CHECK(p6.internal_edges.empty());
    CHECK(p6.external_edges.size() == 6);
    CHECK(p6.dangling_paths.size() == 2);  // one walk per endpoint

    auto claw222 = classify_edges(claw_subdivision(2, 2, 2));
    CHECK(claw222.internal_edges.empty());
    CHECK(claw222.external_edges.size() == 6);

    // isolated edge is external, from either endpoint
    Graph k2 = complete_graph(2);
    auto k2c = classify_edges(k2);
    CHECK(k2c.external_edges.size() == 1);
    CHECK(k2c.dangling_paths.size() == 2);
}

TEST_CASE("beta examples") {
    CHECK(beta(cycle_graph(3)) == 3);
    CHECK(beta(complete_graph(4)) == 6);
    CHECK(beta(two_triangles_joined_by_path()) == 9);
    CHECK(beta(Graph(0)) == 0);
    CHECK(beta(Graph(5)) == 0);
    CHECK(beta(subdivide_every_edge(complete_graph(4), 1)) == 12);  // 10 vertices, all internal
}

TEST_CASE("replace edge with paths") {
    Graph t = replace_edge_with_paths(cycle_graph(3), 0, 1, 1, 1);
    CHECK(t.vertex_count() == 5);
    CHECK(beta(t) == 0);
    CHECK(is_isomorphic(t, path_with_edges(4)));

    Graph k4 = replace_edge_with_paths(complete_graph(4), 0, 1, 2, 3);
    CHECK(beta(k4) == 5);
    CHECK_THROWS_AS(replace_edge_with_paths(Graph(3), 0, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(replace_edge_with_paths(cycle_graph(3), 0, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("beta monotone under single topological-minor-reversing steps") {
    for (const Graph& h : all_graphs_up_to(6)) {
        int base = beta(h);
        CHECK(beta(h.with_isolated_vertex()) == base);
        for (int u = 0; u < h.vertex_count(); ++u)
            for (int v = u + 1; v < h.vertex_count(); ++v) {
                if (h.has_edge(u, v)) continue;
                Graph g = h;
                g.add_edge(u, v);
                CHECK(beta(g) >= base);
            }
        for (auto [u, v] : h.edges()) CHECK(beta(subdivide_edge(h, u, v)) >= base);
    }
}

TEST_CASE("replacing an internal edge strictly decreases beta") {
    for (const Graph& h : all_graphs_up_to(6)) {
        auto cls = classify_edges(h);
        int base = static_cast<int>(cls.internal_edges.size());
        for (auto [u, v] : cls.internal_edges)
            for (int p = 1; p <= 3; ++p)
                for (int q = 1; q <= 3; ++q)
                    CHECK(beta(replace_edge_with_paths(h, u, v, p, q)) < base);
    }
}

TEST_CASE("star subdivision family") {
    CHECK(is_star_subdivision_family(path_with_edges(7)));
    CHECK(!is_star_subdivision_family(cycle_graph(4)));
    CHECK(is_star_subdivision_family(claw_subdivision(1, 2, 3).disjoint_union(path_with_edges(4))));
    CHECK(is_star_subdivision_family(star_graph(5)));
    CHECK(is_star_subdivision_family(Graph(3)));
}

TEST_CASE("star subdivision family coincides with beta zero") {
    for (const Graph& h : all_graphs_up_to(8))
        CHECK(is_star_subdivision_family(h) == (beta(h) == 0));
}

TEST_CASE("path or claw family") {
    CHECK(is_path_or_claw_family(claw_subdivision(2, 2, 2)));
    CHECK(!is_path_or_claw_family(star_graph(4)));
    CHECK(!is_path_or_claw_family(cycle_graph(3)));
    CHECK(is_path_or_claw_family(path_with_edges(4).disjoint_union(star_graph(3))));
}

TEST_CASE("vertex cover closed forms") {
    CHECK(vc_path(5) == 3);
    CHECK(vc_claw(2, 2, 2) == 3);
    CHECK(vc_claw(1, 1, 1) == 1);
    for (int k = 1; k <= 10; ++k) CHECK(vc_path(k) == min_vertex_cover(path_with_edges(k)).size);
    for (int d1 = 1; d1 <= 4; ++d1)
        for (int d2 = 1; d2 <= 4; ++d2)
            for (int d3 = 1; d3 <= 4; ++d3)
                CHECK(vc_claw(d1, d2, d3) == min_vertex_cover(claw_subdivision(d1, d2, d3)).size);
}

TEST_CASE("edge suitability checker") {
    SearchLimits wide{20, 12};
    auto forests = ForbiddenFamily::make({cycle_graph(3)}, {});
    auto v1 = check_edge_suitability(forests, cycle_graph(3), 0, 1, 4, wide);
    CHECK(v1.suitable);

    auto k4 = ForbiddenFamily::make({complete_graph(4)}, {});
    auto v2 = check_edge_suitability(k4, complete_graph(4), 0, 1, 3, wide);
    CHECK(v2.suitable);

    auto b2path = ForbiddenFamily::make({}, {path_with_edges(2)});
    auto v3 = check_edge_suitability(b2path, path_with_edges(3), 1, 2, 2, wide);
    CHECK(!v3.suitable);
    CHECK(v3.fail_p == 1);
    CHECK(v3.fail_q == 1);

    CHECK_THROWS_AS(check_edge_suitability(forests, cycle_graph(3), 0, 1, 40), std::runtime_error);
}

TEST_CASE("forbidden family dedups by isomorphism") {
    auto fam = ForbiddenFamily::make({cycle_graph(4), complete_bipartite(2, 2)}, {});
    CHECK(fam.topological_minors.size() == 1);
}
