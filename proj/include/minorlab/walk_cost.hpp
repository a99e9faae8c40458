#pragma once

#include <string>
#include <vector>

#include "minorlab/fitting.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

struct Ratio {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Spectral gap of the lazy coordinate-resampling walk on the Hamming graph
// H(N,K): pick one of the K coordinates uniformly and resample it uniformly
// over all N symbols. The gap is exactly 1/K.
Ratio hamming_gap(long long n_symbols, long long k_coords);

// Spectral gap of the simple random walk on the Johnson graph J(N,K),
// N/(K(N-K)), from the eigenvalue family 1 - i(N+1-i)/(K(N-K)).
Ratio johnson_gap(long long n, long long k);

// One walk component: a Hamming walk over tuples of length k on which alpha
// steps are taken per move, searching t candidate vertices of degree near q.
struct DegreeBucket {
    double q = 1;          // degree scale
    double t = 1;          // vertices with degree near q
    long long k = 1;       // stored tuple length
    long long alpha = 1;   // walk steps per move
};

// 1 - max_i (1 - 1/k_i)^{alpha_i}; requires every k_i >= 2.
double product_gap(const std::vector<DegreeBucket>& buckets);

// Query cost S + (1/sqrt(eps)) (U/sqrt(delta) + C) of quantum walk search.
double walk_search_cost(double setup, double update, double checking, double gap, double marked_fraction);

struct CostBreakdown {
    double setup = 0;
    double update = 0;
    double checking = 0;
    double gap = 1;
    double marked_fraction = 1;
    double total = 0;
    std::vector<DegreeBucket> buckets;
};

// Walk plan storing a minimal vertex cover of the pattern, one bucket per
// cover vertex. t gives the per-bucket candidate counts (default n each);
// sparsity_c is the edge budget constant (degree scale q_i = c*n/t_i).
CostBreakdown plan_basic(const Graph& pattern, double n, std::vector<double> t = {},
                         double sparsity_c = 1.0);

// As plan_basic but on the pattern with pendant leaves deleted, recovering
// them from stored second-neighbor labels; adds the second-neighbor
// setup/update surcharge terms.
CostBreakdown plan_dangling(const Graph& pattern, double n, std::vector<double> t = {},
                            double sparsity_c = 1.0);

// k-path plans: k <= 4 linear, k in {5,6,8} via plan_dangling, k = 7 and
// k >= 9 with a nontrivial path-checking cost.
CostBreakdown plan_paths(int k, double n, std::vector<double> t = {}, double sparsity_c = 1.0);

// plan_dangling under an edge budget of mbar instead of c*n.
CostBreakdown plan_pseudosparse(const Graph& pattern, double n, double mbar);

// Grover-style four-cycle plan: cost n + sqrt(n*q*t) under q*t <= n^{3/2}.
CostBreakdown plan_fourcycle(double n);

enum class ThresholdKind { kst, bondy_simonovits };

struct ThresholdParams {
    int s = 1, t = 1;  // kst: K_{s,t}
    int l = 1;         // bondy_simonovits: C_{2l}
};

// Edge-count threshold above which the target subgraph is forced:
// c_param * n^{2-1/s} for K_{s,t}; 100*l*n^{1+1/l} for C_{2l}.
double edge_threshold(ThresholdKind kind, const ThresholdParams& params, double n, double c_param = 1.0);

// Exponent 2 - 1/d - 2/(d+2) for d-vertex bipartite pattern detection.
double bipartite_exponent(int d);

// Cost of finding all K marked items among N (sqrt(N*K), or sqrt(N) if K=0).
double search_all_cost(double n_items, double k_marked);

// Detect-then-extract pipeline for a sparse property with edge budget c*n:
// sqrt(n^2/(c n)) + sqrt(C(n,2) * 2cn), which is Theta(n^{3/2}).
double sparse_pipeline_cost(double n, double c);

struct ExponentRow {
    std::string problem;
    double predicted = 0;
    double fitted = 0;
    double residual = 0;
    std::string note;
};

// Fitted slopes over n in {2^10..2^24} for every cost model, mirroring the
// k-path table plus the four-cycle, even-cycle, bipartite, triangle-in-sparse
// and sparse-pipeline rows.
std::vector<ExponentRow> exponent_table();

// Predicted k-path exponent: 1 for k <= 4, 7/6 for k <= 7, 5/4 for k <= 10,
// and 3/2 - 1/(ceil(k/2) - 1) beyond (see the table note for the rejected
// "+1" variant of the long-path denominator).
double kpath_exponent(int k);

}  // namespace minorlab
