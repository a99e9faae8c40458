#include "minorlab/spectral.hpp"

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace minorlab {

namespace {

double second_largest_gap(const Eigen::MatrixXd& p) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(p, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const auto& ev = solver.eigenvalues();  // ascending
    return 1.0 - ev(ev.size() - 2);
}

}  // namespace

double hamming_gap_numeric(int n_symbols, int k_coords) {
    if (n_symbols < 2 || k_coords < 1) throw std::invalid_argument("hamming_gap_numeric: need N >= 2, K >= 1");
    long long states = 1;
    for (int i = 0; i < k_coords; ++i) {
        states *= n_symbols;
        if (states > 200) throw std::invalid_argument("hamming_gap_numeric: N^K exceeds the 200-state cap");
    }
    if (states < 2) throw std::invalid_argument("hamming_gap_numeric: need at least 2 states");
    int m = static_cast<int>(states);
    // transition: pick a coordinate uniformly, resample it uniformly over all
    // N symbols (self-transitions allowed)
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m, m);
    double step = 1.0 / (static_cast<double>(k_coords) * n_symbols);
    std::vector<long long> pow(k_coords + 1, 1);
    for (int i = 1; i <= k_coords; ++i) pow[i] = pow[i - 1] * n_symbols;
    for (int s = 0; s < m; ++s)
        for (int c = 0; c < k_coords; ++c) {
            int digit = static_cast<int>((s / pow[c]) % n_symbols);
            for (int repl = 0; repl < n_symbols; ++repl) {
                int t = static_cast<int>(s + (repl - digit) * pow[c]);
                p(s, t) += step;
            }
        }
    return second_largest_gap(p);
}

double johnson_gap_numeric(int n, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("johnson_gap_numeric: need 1 <= K < N");
    // enumerate k-subsets of [n]
    std::vector<unsigned> subsets;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == k) subsets.push_back(mask);
    size_t m = subsets.size();
    if (m > 2000) throw std::invalid_argument("johnson_gap_numeric: C(N,K) exceeds the 2000-state cap");
    double deg = static_cast<double>(k) * (n - k);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (__builtin_popcount(subsets[i] ^ subsets[j]) == 2) p(i, j) = 1.0 / deg;
    return second_largest_gap(p);
}

}  // namespace minorlab
