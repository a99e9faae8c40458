#include <doctest.h>

#include <cmath>

#include "minorlab/spectral.hpp"
#include "minorlab/walk_cost.hpp"
#include "test_support.hpp"

using namespace minorlab;
using namespace minorlab::testing;

TEST_CASE("hamming gap closed form and numerics") {
    CHECK(hamming_gap(7, 1).num == 1);
    CHECK(hamming_gap(7, 1).den == 1);
    CHECK(hamming_gap(4, 3).value() == doctest::Approx(1.0 / 3));
    CHECK(hamming_gap_numeric(5, 3) == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(hamming_gap_numeric(4, 2) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(hamming_gap_numeric(13, 1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(hamming_gap_numeric(7, 3), std::invalid_argument);  // 343 states
}

TEST_CASE("johnson gap closed form and numerics") {
    auto g = johnson_gap(10, 3);
    CHECK(g.num == 10);
    CHECK(g.den == 21);
    CHECK(johnson_gap(5, 1).value() == doctest::Approx(5.0 / 4));
    CHECK(johnson_gap_numeric(6, 2) == doctest::Approx(johnson_gap(6, 2).value()).epsilon(1e-9));
    CHECK(johnson_gap_numeric(5, 1) == doctest::Approx(johnson_gap(5, 1).value()).epsilon(1e-9));
    CHECK(johnson_gap_numeric(7, 3) == doctest::Approx(johnson_gap(7, 3).value()).epsilon(1e-9));
    CHECK_THROWS_AS(johnson_gap(4, 4), std::invalid_argument);
}

TEST_CASE("product gap") {
    CHECK(product_gap({{1, 1, 5, 1}}) == doctest::Approx(0.2));
    CHECK(product_gap({{1, 1, 10, 1}, {1, 1, 100, 10}}) ==
          doctest::Approx(1 - std::pow(0.99, 10)));
    // matches the single-chain hamming gap when alpha = 1 and k equal
    CHECK(product_gap({{1, 1, 8, 1}, {1, 1, 8, 1}}) == doctest::Approx(1.0 / 8));
    CHECK_THROWS_AS(product_gap({{1, 1, 1, 1}}), std::domain_error);
    // equal alpha/k ratios stay within a factor 2 of min alpha_i/k_i
    for (long long k = 4; k <= 64; k *= 2) {
        double gap = product_gap({{1, 1, k, 1}, {1, 1, 4 * k, 4}});
        double ratio = 1.0 / static_cast<double>(k);
        CHECK(gap >= ratio / 2);
        CHECK(gap <= 2 * ratio);
    }
}

TEST_CASE("walk search cost") {
    CHECK(walk_search_cost(3, 4, 5, 1, 1) == doctest::Approx(12));
    double n = 1 << 20;
    CHECK(walk_search_cost(0, 1, 0, 1, 1 / n) == doctest::Approx(std::sqrt(n)));
    double t = 4096, k = 64, big_k = 16;
    CHECK(walk_search_cost(0, 1, 0, 1.0 / big_k, k / t) ==
          doctest::Approx(std::sqrt(t / k) * std::sqrt(big_k)));
    CHECK_THROWS_AS(walk_search_cost(1, 1, 1, 0, 0.5), std::domain_error);
    CHECK_THROWS_AS(walk_search_cost(1, 1, 1, 1.5, 0.5), std::domain_error);
    CHECK_THROWS_AS(walk_search_cost(1, 1, 1, 0.5, 0), std::domain_error);
}

TEST_CASE("basic plan structure") {
    double n = 1 << 18;
    auto plan = plan_basic(complete_graph(3), n);
    REQUIRE(plan.buckets.size() == 2);
    // parameter ratios within the rounding slack
    double k1 = std::sqrt(n) * std::pow(n, 0.5 - 1.0 / 3);
    CHECK(plan.buckets[0].k >= k1);
    CHECK(plan.buckets[0].k <= 2 * k1);
    for (const auto& b : plan.buckets) {
        CHECK(b.alpha >= 1);
        double ratio = static_cast<double>(b.k) / plan.buckets[0].k;
        double want = std::sqrt(b.t / plan.buckets[0].t);
        CHECK(ratio >= want / 2);
        CHECK(ratio <= 2 * want);
    }
    CHECK(plan.checking == 0);
    CHECK(plan.total ==
          doctest::Approx(walk_search_cost(plan.setup, plan.update, plan.checking, plan.gap,
                                           plan.marked_fraction)));
    CHECK_THROWS_AS(plan_basic(Graph(4), n), std::domain_error);
}

TEST_CASE("degenerate cover sizes") {
    double n = 1 << 16;
    // stars have cover size one and a linear-cost plan
    auto star = plan_basic(star_graph(3), n);
    CHECK(star.buckets.size() == 1);
    CHECK(star.total <= 4 * n);
    // one candidate vertex: the marked fraction caps at 1
    auto tiny = plan_basic(complete_graph(3), n, {1, n});
    CHECK(tiny.marked_fraction <= 1.0);
    CHECK(tiny.marked_fraction > 0);
}

TEST_CASE("dangling plan reductions") {
    double n = 1 << 18;
    auto five = plan_dangling(path_with_edges(5), n);
    CHECK(five.buckets.size() == 2);  // stripped core is a 3-path with cover 2
    auto claw = plan_dangling(star_graph(3), n);
    CHECK(claw.buckets.size() == 1);  // core collapses to a single vertex
    CHECK(claw.total <= 5 * n);
    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    auto kept = plan_dangling(two_edges, n);
    CHECK(kept.buckets.size() == 2);  // isolated edges are kept by the stripping

    // the second-neighbor surcharge stays within a constant of the base terms
    auto base = plan_basic(path_with_edges(3), n);
    auto with = plan_dangling(path_with_edges(5), n);
    CHECK(with.setup <= 3 * base.setup);
}

TEST_CASE("checking cost dominated at the optimum") {
    double n = 1 << 20;
    for (int k : {7, 9, 10, 12, 14}) {
        auto plan = plan_paths(k, n);
        CHECK(plan.checking > 0);
        CHECK(plan.checking / std::sqrt(plan.marked_fraction) <= plan.total);
    }
}

TEST_CASE("fitted plan exponents") {
    auto sizes = power_of_two_sizes(10, 24);
    auto fit = [&](const std::function<double(double)>& f) { return fit_exponent(f, sizes).slope; };
    CHECK(fit([](double n) { return plan_basic(complete_graph(3), n).total; }) ==
          doctest::Approx(7.0 / 6).epsilon(0.01));
    CHECK(fit([](double n) {
              return plan_basic(complete_bipartite(2, 2), n, {}, 1.0).total;  // vc = 2
          }) == doctest::Approx(7.0 / 6).epsilon(0.01));
    // vc = 3 gives 3/2 - 1/4
    CHECK(fit([](double n) { return plan_basic(cycle_graph(6), n).total; }) ==
          doctest::Approx(1.25).epsilon(0.01));
    CHECK(fit([](double n) { return plan_paths(5, n).total; }) ==
          doctest::Approx(7.0 / 6).epsilon(0.01));
    CHECK(fit([](double n) { return plan_fourcycle(n).total; }) ==
          doctest::Approx(1.25).epsilon(0.01));
    CHECK(fit([](double n) { return plan_pseudosparse(cycle_graph(4), n, std::pow(n, 1.5)).total; }) ==
          doctest::Approx(1.4166666).epsilon(0.01));
    CHECK(fit([](double n) {
              return plan_pseudosparse(cycle_graph(6), n, 300 * std::pow(n, 4.0 / 3)).total;
          }) == doctest::Approx(1.4166666).epsilon(0.01));
    CHECK(fit([](double n) { return sparse_pipeline_cost(n, 1.0); }) ==
          doctest::Approx(1.5).epsilon(0.01));
}

TEST_CASE("pseudosparse preconditions and reduction") {
    CHECK_THROWS_AS(plan_pseudosparse(cycle_graph(4), 1024, 512), std::domain_error);
    // linear budget reduces to the dangling plan within a constant factor
    double n = 1 << 16;
    auto a = plan_pseudosparse(path_with_edges(5), n, n);
    auto b = plan_dangling(path_with_edges(5), n);
    CHECK(a.total <= 4 * b.total);
    CHECK(b.total <= 4 * a.total);
}

TEST_CASE("fourcycle plan pieces") {
    double n = 1 << 20;
    auto plan = plan_fourcycle(n);
    CHECK(plan.checking == doctest::Approx(std::sqrt(n * std::sqrt(n))));
    CHECK(plan.gap == 1);
    // a linear budget q*t = n drops the exponent to 1
    auto fit = fit_exponent(
        [](double m) {
            double t = m, q = m / t;
            return walk_search_cost(m / std::sqrt(t) + std::sqrt(m * q),
                                    m / std::sqrt(t) + std::sqrt(m * q), std::sqrt(m * q), 1.0,
                                    1.0 / t);
        },
        power_of_two_sizes(10, 24));
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("path exponents monotone in k") {
    double prev = 0;
    for (int k = 1; k <= 20; ++k) {
        double e = kpath_exponent(k);
        CHECK(e >= prev);
        prev = e;
    }
    auto sizes = power_of_two_sizes(10, 24);
    double prev_fit = 0;
    for (int k : {1, 3, 5, 7, 8, 9, 11, 13, 14, 16}) {
        double slope = fit_exponent([k](double n) { return plan_paths(k, n).total; }, sizes).slope;
        CHECK(slope >= prev_fit - 0.005);  // fitted values carry rounding noise
        prev_fit = slope;
    }
}

TEST_CASE("edge thresholds") {
    CHECK(edge_threshold(ThresholdKind::bondy_simonovits, {.l = 2}, 16) == doctest::Approx(12800));
    CHECK(edge_threshold(ThresholdKind::kst, {.s = 2, .t = 2}, 100.0) ==
          doctest::Approx(std::pow(100.0, 1.5)));
    CHECK_THROWS_AS(edge_threshold(ThresholdKind::kst, {.s = 3, .t = 2}, 100.0),
                    std::invalid_argument);
    CHECK(bipartite_exponent(4) == doctest::Approx(2 - 1.0 / 4 - 2.0 / 6));
}

TEST_CASE("search-all and the sparse pipeline") {
    CHECK(search_all_cost(100, 0) == doctest::Approx(10));
    CHECK(search_all_cost(100, 4) == doctest::Approx(20));
    double n = 1 << 12;
    double base = sparse_pipeline_cost(n, 1.0);
    double doubled = sparse_pipeline_cost(n, 2.0);
    CHECK(doubled <= std::sqrt(2.0) * base * 1.01);
}

TEST_CASE("exponent fitting basics") {
    auto sizes = power_of_two_sizes(10, 24);
    CHECK(fit_exponent([](double) { return 7.0; }, sizes).slope == doctest::Approx(0.0));
    auto pure = fit_exponent([](double n) { return std::pow(n, 1.5); }, sizes);
    CHECK(pure.slope == doctest::Approx(1.5));
    CHECK(pure.residual < 1e-9);
    CHECK_THROWS_AS(fit_exponent([](double n) { return n; }, {1024, 2048, 4096, 8192}),
                    std::invalid_argument);
}

TEST_CASE("exponent table covers the headline problems") {
    auto rows = exponent_table();
    auto find = [&](const std::string& name) -> const ExponentRow& {
        for (const auto& r : rows)
            if (r.problem == name) return r;
        REQUIRE(false);
        return rows[0];
    };
    CHECK(find("7-path").predicted == doctest::Approx(7.0 / 6));
    CHECK(find("4-cycle").fitted == doctest::Approx(1.25).epsilon(0.01));
    CHECK(find("sparse-pipeline").fitted == doctest::Approx(1.5).epsilon(0.01));
    for (const auto& r : rows) CHECK(r.fitted == doctest::Approx(r.predicted).epsilon(0.011));
}
