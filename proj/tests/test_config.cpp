#include <set>

#include "aquasim/config.hpp"
#include "aquasim/fuzzy.hpp"
#include "doctest.h"

using namespace aquasim;

TEST_CASE("matrix has 16 configs in results-table order") {
    const auto configs = matrix_configs(TuningDefaults{}, 0);
    REQUIRE(configs.size() == 16);
    CHECK(config_code(configs[0]) == "3Z-N-I");
    CHECK(config_code(configs[7]) == "U-A-I");
    CHECK(config_code(configs[14]) == "1Z-A-SI");
    CHECK(config_code(configs[15]) == "U-A-SI");
}

TEST_CASE("matrix covers the full cartesian product with distinct seeds") {
    const auto configs = matrix_configs(TuningDefaults{}, 12345);
    std::set<std::string> codes;
    std::set<std::uint64_t> seeds;
    for (const auto& c : configs) {
        codes.insert(config_code(c));
        seeds.insert(c.rng_seed);
    }
    CHECK(codes.size() == 16);
    CHECK(seeds.size() == 16);
}

TEST_CASE("matrix shape is seed independent, derived seeds are not") {
    const auto a = matrix_configs(TuningDefaults{}, 1);
    const auto b = matrix_configs(TuningDefaults{}, 2);
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK(config_code(a[i]) == config_code(b[i]));
        CHECK(a[i].rng_seed != b[i].rng_seed);
    }
}

TEST_CASE("config codes follow the results nomenclature") {
    CHECK(config_code(Disposition::ThreeZones, FeedingMode::Normal, Density::Intensive) ==
          "3Z-N-I");
    CHECK(config_code(Disposition::Uniform, FeedingMode::Alta, Density::Intensive) == "U-A-I");
    CHECK(config_code(Disposition::OneZone, FeedingMode::Alta, Density::SemiIntensive) ==
          "1Z-A-SI");
}

TEST_CASE("population sizes by density regime") {
    const auto intensive =
        make_config(Disposition::Uniform, FeedingMode::Normal, Density::Intensive, 0);
    const auto semi =
        make_config(Disposition::Uniform, FeedingMode::Normal, Density::SemiIntensive, 0);
    CHECK(intensive.population_size == 500);
    CHECK(semi.population_size < intensive.population_size);
    CHECK(intensive.stop_mean_size == 24.0);
    CHECK(intensive.epoch_cap > 0);
    CHECK(intensive.tuning.alta_multiplier == 1.2);
}

TEST_CASE("feed ration derives from the full-grown biomass") {
    const TuningDefaults t;
    CHECK(derived_pellets_per_drop(500, Density::Intensive, t) == 570);
    // semi-intensive scales with the population (and its feed factor)
    const int semi = derived_pellets_per_drop(250, Density::SemiIntensive, t);
    CHECK(semi <= 570 * 250 / 500 + 1);
    CHECK(semi > 0);
}

TEST_CASE("quality parameter table walks the full state ladder") {
    const TuningDefaults t;
    const auto state_of = [&](std::size_t row) {
        const CellParams& p = t.quality_param_table[row];
        return evaluate_state(p.o2, p.ph, p.temp).label;
    };
    CHECK(state_of(0) == StateLabel::Normal);     // Good
    CHECK(state_of(1) == StateLabel::Normal);     // Medium
    CHECK(state_of(2) == StateLabel::Tolerable);  // Tolerable
    CHECK(state_of(3) == StateLabel::Bad);        // Bad
}

TEST_CASE("scenario round-trip reproduces an identical config") {
    ExperimentConfig config =
        make_config(Disposition::TwoZones, FeedingMode::Alta, Density::SemiIntensive, 77);
    config.tuning.mutation_sigma = 0.0;
    config.tuning.smell_radius_base = 7.5;
    const std::string text = scenario_to_json(config);
    const ExperimentConfig parsed = parse_scenario(text);
    CHECK(parsed == config);
    CHECK(scenario_to_json(parsed) == text);
}

TEST_CASE("scenario parsing errors name the offending key") {
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"disposition":"3Z","feeding_mode":"Normal"})"),
                         doctest::Contains("density"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_scenario(
            R"({"disposition":"3Z","feeding_mode":"Normal","density":"Intensive","pellet":1})"),
        doctest::Contains("pellet"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_scenario(
            R"({"disposition":"3Z","feeding_mode":"Normal","density":"Intensive","seed":"x"})"),
        doctest::Contains("seed"), ConfigError);
    CHECK_THROWS_AS(parse_scenario("not json"), ConfigError);
}

TEST_CASE("scenario accepts minimal keys and tuning overrides") {
    const ExperimentConfig config = parse_scenario(
        R"({"disposition":"U","feeding_mode":"Alta","density":"SemiIntensive",
            "seed":9,"mutation_sigma":0.0,"feeding_period":6})");
    CHECK(config.disposition == Disposition::Uniform);
    CHECK(config.feeding_mode == FeedingMode::Alta);
    CHECK(config.population_size == 250);
    CHECK(config.rng_seed == 9);
    CHECK(config.tuning.mutation_sigma == 0.0);
    CHECK(config.tuning.feeding_period == 6);
}

TEST_CASE("validation rejects broken invariants") {
    ExperimentConfig config = make_config(Disposition::OneZone, FeedingMode::Normal,
                                          Density::Intensive, 0);
    CHECK_NOTHROW(validate(config));

    ExperimentConfig bad = config;
    bad.epoch_cap = 0;
    CHECK_THROWS_AS(validate(bad), ConfigError);

    bad = config;
    bad.tuning.density_thresholds = {5, 5, 9};
    CHECK_THROWS_AS(validate(bad), ConfigError);

    bad = config;
    bad.grid_width = 3 * bad.tuning.feeder_spread_radius;
    CHECK_THROWS_AS(validate(bad), ConfigError);
}
