#include "aquasim/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace aquasim {

RegressionLine linear_regression(const std::vector<GrowthPoint>& points) {
    const std::size_t n = points.size();
    if (n < 2) throw std::invalid_argument("insufficient points");

    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [x, y] : points) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if (sxx == 0.0) throw std::invalid_argument("insufficient points");

    RegressionLine line;
    line.slope = sxy / sxx;
    line.intercept = mean_y - line.slope * mean_x;
    return line;
}

double mse_vs_regression(const std::vector<GrowthPoint>& points) {
    const RegressionLine line = linear_regression(points);
    double sum_sq = 0.0;
    for (const auto& [x, y] : points) {
        const double r = y - (line.slope * x + line.intercept);
        sum_sq += r * r;
    }
    return sum_sq / static_cast<double>(points.size());
}

double std_dev(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("empty sample");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    return std::sqrt(var);
}

Histogram histogram40(const std::vector<int>& sizes) {
    Histogram h;
    for (int s : sizes) {
        if (s < 1 || s > 40) throw std::out_of_range("size outside [1,40] grams");
        const int bin = (s == 40) ? 39 : s;  // bin i covers [i,i+1), last bin closed
        ++h.bins[static_cast<std::size_t>(bin)];
    }
    for (int count : h.bins)
        if (count > 0) ++h.group_count;
    return h;
}

double epochs_to_weeks(double epochs) {
    return epochs * 22.0 / 287.5;
}

}  // namespace aquasim
