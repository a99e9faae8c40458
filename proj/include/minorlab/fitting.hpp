#pragma once

#include <functional>
#include <vector>

namespace minorlab {

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double residual = 0;  // root mean square residual in log space
};

// Ordinary least squares of log(value) against log(size).
FitResult fit_loglog(const std::vector<double>& sizes, const std::vector<double>& values);

// Convenience: evaluate `cost` at the given sizes and fit. Requires at least
// 5 sizes spanning at least 3 decades.
FitResult fit_exponent(const std::function<double(double)>& cost, const std::vector<double>& sizes);

// Powers of two from 2^lo to 2^hi inclusive.
std::vector<double> power_of_two_sizes(int lo, int hi);

}  // namespace minorlab
