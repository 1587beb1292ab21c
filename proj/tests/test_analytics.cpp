#include <cmath>

#include "aquasim/analytics.hpp"
#include "aquasim/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aquasim;

TEST_CASE("linear regression recovers an exact line") {
    std::vector<GrowthPoint> pts;
    for (int x = 0; x <= 10; ++x) pts.emplace_back(x, 2.0 * x + 1.0);
    const RegressionLine line = linear_regression(pts);
    CHECK(line.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(line.intercept == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("linear regression of a flat pair") {
    const std::vector<GrowthPoint> pts{{0.0, 1.0}, {2.0, 1.0}};
    const RegressionLine line = linear_regression(pts);
    CHECK(line.slope == doctest::Approx(0.0));
    CHECK(line.intercept == doctest::Approx(1.0));
}

TEST_CASE("linear regression rejects degenerate input") {
    CHECK_THROWS_AS(linear_regression({{1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(linear_regression({{1.0, 2.0}, {1.0, 3.0}}), std::invalid_argument);
    CHECK_THROWS_AS(linear_regression({}), std::invalid_argument);
}

TEST_CASE("regression and mse match the normal-equations oracle on random data") {
    Rng rng(20260809);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<GrowthPoint> pts;
        const int n = 3 + static_cast<int>(rng.next_below(60));
        for (int i = 0; i < n; ++i)
            pts.emplace_back(i + rng.next_double(), 40.0 * rng.next_double() - 10.0);

        const RegressionLine line = linear_regression(pts);
        const oracle::Line expected = oracle::regression(pts);
        CHECK(line.slope == doctest::Approx(expected.slope).epsilon(1e-9));
        CHECK(line.intercept == doctest::Approx(expected.intercept).epsilon(1e-9));
        CHECK(mse_vs_regression(pts) == doctest::Approx(oracle::mse(pts)).epsilon(1e-9));

        // least-squares residuals sum to zero
        double residual_sum = 0.0;
        double scale = 0.0;
        for (const auto& [x, y] : pts) {
            residual_sum += y - (line.slope * x + line.intercept);
            scale += std::abs(y);
        }
        CHECK(std::abs(residual_sum) <= 1e-9 * std::max(1.0, scale));
    }
}

TEST_CASE("mse of collinear points is zero") {
    std::vector<GrowthPoint> pts;
    for (int x = 0; x < 20; ++x) pts.emplace_back(x, 0.5 * x - 3.0);
    CHECK(mse_vs_regression(pts) == doctest::Approx(0.0));
}

TEST_CASE("mse frozen value for the (0,0),(1,1),(2,0) triangle") {
    // best fit is the flat line y = 1/3; residuals -1/3, 2/3, -1/3
    const std::vector<GrowthPoint> pts{{0.0, 0.0}, {1.0, 1.0}, {2.0, 0.0}};
    CHECK(mse_vs_regression(pts) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
    CHECK(oracle::mse(pts) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("mse scales quadratically with the ordinates") {
    Rng rng(7);
    std::vector<GrowthPoint> pts, scaled;
    for (int i = 0; i < 25; ++i) {
        const double x = i, y = rng.next_double() * 10.0;
        pts.emplace_back(x, y);
        scaled.emplace_back(x, 3.0 * y);
    }
    CHECK(mse_vs_regression(scaled) ==
          doctest::Approx(9.0 * mse_vs_regression(pts)).epsilon(1e-9));
}

TEST_CASE("population standard deviation") {
    CHECK(std_dev({5.0, 5.0, 5.0, 5.0}) == doctest::Approx(0.0));
    CHECK(std_dev({1.0, 3.0}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(std_dev({}), std::invalid_argument);

    Rng rng(99);
    std::vector<double> values;
    for (int i = 0; i < 40; ++i) values.push_back(rng.next_double() * 38.0);
    const double reference = std_dev(values);
    CHECK(reference == doctest::Approx(oracle::std_dev(values)).epsilon(1e-12));

    // order invariance
    std::vector<double> shuffled(values.rbegin(), values.rend());
    CHECK(std_dev(shuffled) == doctest::Approx(reference).epsilon(1e-12));
}

TEST_CASE("histogram has 40 unit bins and conserves the sample count") {
    std::vector<int> sizes;
    Rng rng(3);
    for (int i = 0; i < 500; ++i) sizes.push_back(1 + static_cast<int>(rng.next_below(38)));
    const Histogram h = histogram40(sizes);
    CHECK(h.bins.size() == 40);
    int total = 0;
    for (int b : h.bins) total += b;
    CHECK(total == 500);
}

TEST_CASE("histogram of identical samples has one group") {
    const Histogram h = histogram40(std::vector<int>(500, 24));
    CHECK(h.group_count == 1);
    CHECK(h.bins[24] == 500);
}

TEST_CASE("histogram group count is bounded by the size span") {
    std::vector<int> sizes;
    Rng rng(11);
    for (int i = 0; i < 500; ++i) sizes.push_back(15 + static_cast<int>(rng.next_below(25)));
    const Histogram h = histogram40(sizes);  // sizes within [15, 39]
    CHECK(h.group_count <= 25);
}

TEST_CASE("histogram rejects out-of-range sizes") {
    CHECK_THROWS_AS(histogram40({0}), std::out_of_range);
    CHECK_THROWS_AS(histogram40({41}), std::out_of_range);
    CHECK_NOTHROW(histogram40({1, 40}));
}

TEST_CASE("week conversion anchors") {
    CHECK(epochs_to_weeks(287.5) == 22.0);  // exact
    CHECK(std::abs(epochs_to_weeks(183.0) - 14.0034) < 0.0001);
    CHECK(epochs_to_weeks(0.0) == 0.0);
}

TEST_CASE("week conversion is linear") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const double a = rng.next_double() * 400.0;
        const double b = rng.next_double() * 400.0;
        CHECK(epochs_to_weeks(a + b) ==
              doctest::Approx(epochs_to_weeks(a) + epochs_to_weeks(b)).epsilon(1e-12));
    }
}
