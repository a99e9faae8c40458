#include "minorlab/walk_cost.hpp"

#include <algorithm>
#include <cmath>

#include "minorlab/containment.hpp"
#include "minorlab/vertex_cover.hpp"

namespace minorlab {

Ratio hamming_gap(long long n_symbols, long long k_coords) {
    if (n_symbols < 2 || k_coords < 1) throw std::invalid_argument("hamming_gap: need N >= 2, K >= 1");
    return {1, k_coords};
}

Ratio johnson_gap(long long n, long long k) {
    if (k < 1 || k >= n) throw std::invalid_argument("johnson_gap: need 1 <= K < N");
    return {n, k * (n - k)};
}

double product_gap(const std::vector<DegreeBucket>& buckets) {
    double worst = 0;
    for (const auto& b : buckets) {
        if (b.k < 2) throw std::domain_error("product_gap: tuple lengths must be >= 2");
        if (b.alpha < 1) throw std::domain_error("product_gap: step counts must be >= 1");
        worst = std::max(worst, std::pow(1.0 - 1.0 / static_cast<double>(b.k),
                                         static_cast<double>(b.alpha)));
    }
    return 1.0 - worst;
}

double walk_search_cost(double setup, double update, double checking, double gap,
                        double marked_fraction) {
    if (!(gap > 0 && gap <= 1)) throw std::domain_error("walk_search_cost: gap must be in (0,1]");
    if (!(marked_fraction > 0 && marked_fraction <= 1))
        throw std::domain_error("walk_search_cost: marked fraction must be in (0,1]");
    return setup + (1.0 / std::sqrt(marked_fraction)) * (update / std::sqrt(gap) + checking);
}

namespace {

enum class CheckKind { none, two_bucket, three_bucket };

// Shared cover-walk construction: s buckets, parameters per the ratio rule
// alpha_i/alpha_1 = k_i/k_1 = sqrt(t_i/t_1) with alpha_1 = 1 and
// k_1 = sqrt(t_1) n^{1/2 - 1/(s+1)}, rounded up to integers. setup_scale
// replaces the per-bucket query factor n with sqrt(n*mbar) when an edge
// budget mbar is in force.
CostBreakdown cover_walk_plan(int s, double n, std::vector<double> t, double edge_budget,
                              bool second_neighbor_terms, CheckKind check) {
    if (s < 1) throw std::domain_error("cover_walk_plan: trivial plan (pattern has no edges to cover)");
    if (t.empty()) t.assign(s, n);
    if (static_cast<int>(t.size()) != s)
        throw std::invalid_argument("cover_walk_plan: need one candidate count per cover vertex");
    for (double ti : t)
        if (!(ti >= 1 && ti <= n)) throw std::invalid_argument("cover_walk_plan: t_i must be in [1, n]");
    std::sort(t.begin(), t.end());

    double k1 = std::sqrt(t[0]) * std::pow(n, 0.5 - 1.0 / (s + 1));
    std::vector<DegreeBucket> buckets(s);
    for (int i = 0; i < s; ++i) {
        double scale = std::sqrt(t[i] / t[0]);
        buckets[i].t = t[i];
        buckets[i].q = edge_budget / t[i];
        buckets[i].k = std::max<long long>(2, static_cast<long long>(std::ceil(k1 * scale)));
        buckets[i].alpha = std::max<long long>(1, static_cast<long long>(std::ceil(scale)));
    }

    CostBreakdown plan;
    plan.buckets = buckets;
    double query_factor = std::max(n, std::sqrt(n * edge_budget));  // n when budget is c*n
    for (const auto& b : buckets) {
        plan.setup += b.k * query_factor / std::sqrt(b.t);
        plan.update += b.alpha * query_factor / std::sqrt(b.t);
        if (second_neighbor_terms) {
            plan.setup += b.k * std::sqrt(n * b.q);
            plan.update += b.alpha * std::sqrt(n * b.q);
        }
    }
    switch (check) {
        case CheckKind::none:
            break;
        case CheckKind::two_bucket:
            plan.checking = std::sqrt(buckets[0].k * buckets[0].q * buckets[1].k * buckets[1].q);
            break;
        case CheckKind::three_bucket:
            plan.checking = std::sqrt(buckets[1].k * buckets[1].q) *
                            (std::sqrt(buckets[0].k * buckets[0].q) +
                             std::sqrt(buckets[2].k * buckets[2].q));
            break;
    }
    plan.marked_fraction = 1;
    for (const auto& b : buckets) plan.marked_fraction *= std::min(1.0, b.k / b.t);
    plan.gap = product_gap(buckets);
    plan.total = walk_search_cost(plan.setup, plan.update, plan.checking, plan.gap, plan.marked_fraction);
    return plan;
}

// Stored-set size for the pendant-stripped pattern: a minimal vertex cover
// plus any vertex left isolated by the stripping (it still needs a stored
// image to anchor its recovered leaves).
int dangling_store_size(const Graph& pattern) {
    if (pattern.edge_count() == 0)
        throw std::domain_error("plan: pattern has no edges (trivial plan)");
    auto stripped = strip_pendant_leaves(pattern);
    int s = min_vertex_cover(stripped.graph).size;
    for (int v = 0; v < stripped.graph.vertex_count(); ++v)
        if (stripped.graph.degree(v) == 0 && pattern.degree(stripped.kept[v]) > 0) ++s;
    return s;
}

}  // namespace

CostBreakdown plan_basic(const Graph& pattern, double n, std::vector<double> t, double sparsity_c) {
    int vc = min_vertex_cover(pattern).size;
    if (vc == 0) throw std::domain_error("plan_basic: pattern has no edges (trivial plan)");
    return cover_walk_plan(vc, n, std::move(t), sparsity_c * n, false, CheckKind::none);
}

CostBreakdown plan_dangling(const Graph& pattern, double n, std::vector<double> t, double sparsity_c) {
    return cover_walk_plan(dangling_store_size(pattern), n, std::move(t), sparsity_c * n, true,
                           CheckKind::none);
}

CostBreakdown plan_paths(int k, double n, std::vector<double> t, double sparsity_c) {
    if (k < 1) throw std::invalid_argument("plan_paths: k must be >= 1");
    if (k <= 4) return cover_walk_plan(1, n, std::move(t), sparsity_c * n, false, CheckKind::none);
    if (k == 5 || k == 6 || k == 8) return plan_dangling(path_with_edges(k), n, std::move(t), sparsity_c);
    if (k == 7) return cover_walk_plan(2, n, std::move(t), sparsity_c * n, true, CheckKind::two_bucket);
    int s = (k + 1) / 2 - 2;
    return cover_walk_plan(s, n, std::move(t), sparsity_c * n, true, CheckKind::three_bucket);
}

CostBreakdown plan_pseudosparse(const Graph& pattern, double n, double mbar) {
    if (mbar < n) throw std::domain_error("plan_pseudosparse: edge budget must be at least n");
    return cover_walk_plan(dangling_store_size(pattern), n, {}, mbar, true, CheckKind::none);
}

CostBreakdown plan_fourcycle(double n) {
    CostBreakdown plan;
    double t = n;
    double q = std::pow(n, 1.5) / t;  // worst case on the budget q*t <= n^{3/2}
    plan.buckets = {DegreeBucket{q, t, 1, 1}};
    plan.setup = n / std::sqrt(t) + std::sqrt(n * q);
    plan.update = plan.setup;
    plan.checking = std::sqrt(n * q);
    plan.gap = 1;
    plan.marked_fraction = 1 / t;
    plan.total = walk_search_cost(plan.setup, plan.update, plan.checking, plan.gap, plan.marked_fraction);
    return plan;
}

double edge_threshold(ThresholdKind kind, const ThresholdParams& params, double n, double c_param) {
    if (c_param <= 0) throw std::invalid_argument("edge_threshold: c_param must be positive");
    switch (kind) {
        case ThresholdKind::kst:
            if (params.s < 1 || params.s > params.t)
                throw std::invalid_argument("edge_threshold: need 1 <= s <= t");
            return c_param * std::pow(n, 2.0 - 1.0 / params.s);
        case ThresholdKind::bondy_simonovits:
            if (params.l < 1) throw std::invalid_argument("edge_threshold: need l >= 1");
            return 100.0 * params.l * std::pow(n, 1.0 + 1.0 / params.l);
    }
    throw std::invalid_argument("edge_threshold: unknown kind");
}

double bipartite_exponent(int d) {
    if (d < 2) throw std::invalid_argument("bipartite_exponent: need d >= 2");
    return 2.0 - 1.0 / d - 2.0 / (d + 2);
}

double search_all_cost(double n_items, double k_marked) {
    if (n_items < 1 || k_marked < 0) throw std::invalid_argument("search_all_cost: bad arguments");
    return k_marked == 0 ? std::sqrt(n_items) : std::sqrt(n_items * k_marked);
}

double sparse_pipeline_cost(double n, double c) {
    if (c <= 0) throw std::invalid_argument("sparse_pipeline_cost: c must be positive");
    double detect = std::sqrt(n * n / (c * n));
    double extract = search_all_cost(n * (n - 1) / 2, 2 * c * n);
    return detect + extract;
}

double kpath_exponent(int k) {
    if (k < 1) throw std::invalid_argument("kpath_exponent: k must be >= 1");
    if (k <= 4) return 1.0;
    if (k <= 7) return 7.0 / 6.0;
    if (k <= 10) return 5.0 / 4.0;
    return 1.5 - 1.0 / ((k + 1) / 2 - 1);
}

std::vector<ExponentRow> exponent_table() {
    auto sizes = power_of_two_sizes(10, 24);
    std::vector<ExponentRow> rows;
    auto add = [&](const std::string& name, double predicted,
                   const std::function<double(double)>& cost, const std::string& note = "") {
        FitResult fit = fit_exponent(cost, sizes);
        rows.push_back({name, predicted, fit.slope, fit.residual, note});
    };

    add("triangle-sparse", 7.0 / 6.0, [](double n) { return plan_basic(complete_graph(3), n).total; });
    for (int k : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}) {
        std::string note;
        if (k > 10)
            note = "long-path exponent 3/2-1/(ceil(k/2)-1); the 3/2-1/(ceil(k/2)+1) variant is not used";
        add(std::to_string(k) + "-path", kpath_exponent(k),
            [k](double n) { return plan_paths(k, n).total; }, note);
    }
    add("4-cycle", 1.25, [](double n) { return plan_fourcycle(n).total; });
    add("4-cycle-bipartite", bipartite_exponent(4), [](double n) {
        return plan_pseudosparse(cycle_graph(4), n, std::pow(n, 1.5)).total;
    });
    add("6-cycle-evencycles", 1.5 - 2.0 / 24.0, [](double n) {
        return plan_pseudosparse(cycle_graph(6), n, 300.0 * std::pow(n, 4.0 / 3.0)).total;
    });
    add("sparse-pipeline", 1.5, [](double n) { return sparse_pipeline_cost(n, 1.0); });
    return rows;
}

}  // namespace minorlab
