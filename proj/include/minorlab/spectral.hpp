#pragma once

namespace minorlab {

// Numeric spectral gaps (1 minus the second-largest eigenvalue), obtained by
// building the full transition matrix and diagonalizing it. These serve as
// the independent check of the closed forms in walk_cost.hpp.

// Coordinate-resampling walk on the Hamming graph H(N,K); requires N^K <= 200.
double hamming_gap_numeric(int n_symbols, int k_coords);

// Simple random walk on the Johnson graph J(N,K); requires C(N,K) <= 2000.
double johnson_gap_numeric(int n, int k);

}  // namespace minorlab
