#include "minorlab/fitting.hpp"

#include <cmath>
#include <stdexcept>

namespace minorlab {

FitResult fit_loglog(const std::vector<double>& sizes, const std::vector<double>& values) {
    if (sizes.size() != values.size() || sizes.size() < 2)
        throw std::invalid_argument("fit_loglog: need matching lists with >= 2 points");
    size_t k = sizes.size();
    std::vector<double> xs(k), ys(k);
    for (size_t i = 0; i < k; ++i) {
        if (sizes[i] <= 0 || values[i] <= 0) throw std::invalid_argument("fit_loglog: non-positive data");
        xs[i] = std::log(sizes[i]);
        ys[i] = std::log(values[i]);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < k; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = k * sxx - sx * sx;
    FitResult r;
    r.slope = (k * sxy - sx * sy) / denom;
    r.intercept = (sy - r.slope * sx) / k;
    double ss = 0;
    for (size_t i = 0; i < k; ++i) {
        double e = ys[i] - (r.slope * xs[i] + r.intercept);
        ss += e * e;
    }
    r.residual = std::sqrt(ss / k);
    return r;
}

FitResult fit_exponent(const std::function<double(double)>& cost, const std::vector<double>& sizes) {
    if (sizes.size() < 5) throw std::invalid_argument("fit_exponent: need at least 5 sizes");
    double lo = sizes.front(), hi = sizes.front();
    for (double s : sizes) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    if (hi < lo * 1000.0) throw std::invalid_argument("fit_exponent: sizes must span at least 3 decades");
    std::vector<double> values;
    values.reserve(sizes.size());
    for (double s : sizes) values.push_back(cost(s));
    return fit_loglog(sizes, values);
}

std::vector<double> power_of_two_sizes(int lo, int hi) {
    std::vector<double> out;
    for (int e = lo; e <= hi; ++e) out.push_back(std::ldexp(1.0, e));
    return out;
}

}  // namespace minorlab
