#pragma once

#include <array>
#include <utility>
#include <vector>

namespace aquasim {

struct RegressionLine {
    double slope = 0.0;      // grams per epoch
    double intercept = 0.0;  // grams
};

// Final-size histogram: 40 unit-width bins over [0,40] grams.
// Bin i covers [i, i+1); the last bin is closed at 40.
struct Histogram {
    std::array<int, 40> bins{};
    int group_count = 0;  // number of non-empty bins
};

using GrowthPoint = std::pair<double, double>;  // (epoch, mean grams)

// Ordinary least squares. Requires >= 2 points with at least two distinct
// abscissae; otherwise throws std::invalid_argument("insufficient points").
RegressionLine linear_regression(const std::vector<GrowthPoint>& points);

// Mean squared residual of the points against their own least-squares line.
double mse_vs_regression(const std::vector<GrowthPoint>& points);

// Population standard deviation (divide by N). Empty input throws.
double std_dev(const std::vector<double>& values);

// Sizes must lie in [1,40]; out-of-range input throws (it would mean the
// growth cap was violated upstream).
Histogram histogram40(const std::vector<int>& sizes);

// Calibration is 287.5 epochs of simulated time per 22 weeks of culture.
double epochs_to_weeks(double epochs);

}  // namespace aquasim
