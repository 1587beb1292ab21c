#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aquasim {

// Configuration / input errors; the CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Disposition { ThreeZones, TwoZones, OneZone, Uniform };
enum class FeedingMode { Normal, Alta };
enum class Density { Intensive, SemiIntensive };

// Species-scale constants. One simulated agent stands for 8000 real
// animals, so a 4-million-animal crop is a 500-agent population.
inline constexpr int kSampleScale = 8000;
inline constexpr int kIntensivePopulation = 500;
inline constexpr int kSemiIntensivePopulation = 250;
inline constexpr int kInitialSizeGrams = 1;
inline constexpr int kMaxSizeGrams = 38;

// Physico-chemical triple carried by habitat cells.
struct CellParams {
    double o2 = 0.0;    // ppm
    double ph = 0.0;    // pH units
    double temp = 0.0;  // Celsius
    friend bool operator==(const CellParams&, const CellParams&) = default;
};

// Rows indexed by quality level: Good, Medium, Tolerable, Bad.
using QualityParamTable = std::array<CellParams, 4>;

// Every tunable the model needs beyond what the source material pins down,
// with its default. Defaults are chosen so an intensive run reaches the
// 24 g stop in a few hundred epochs.
struct TuningDefaults {
    int feeding_period = 4;             // epochs between feed drops
    int pellets_per_drop_normal = 570;  // ceil(0.03 * 500 agents * 38 g)
    double alta_multiplier = 1.2;       // Alta mode drops 20% more feed
    int feeder_spread_radius = 5;       // Chebyshev scatter radius around a feeder
    double smell_radius_base = 6.0;     // cells
    int displacement_base = 4;          // cells per epoch
    int growth_pellets_per_gram = 3;
    double mutation_sigma = 0.05;       // fraction of species optimal width, per bound
    int tournament_size = 3;
    std::array<int, 3> density_thresholds{2, 5, 9};  // Good/Medium/Tolerable cutoffs
    // Semi-intensive ponds lean on natural productivity the model does not
    // simulate; their formulated-feed ration per animal is scaled by this.
    double semi_intensive_feed_factor = 0.78;
    QualityParamTable quality_param_table{{
        {8.0, 7.5, 26.0},  // Good    -> fuzzy Normal
        {6.0, 7.0, 28.0},  // Medium  -> fuzzy Normal
        {4.5, 7.0, 28.0},  // Tolerable -> fuzzy Tolerable
        {3.5, 6.0, 28.0},  // Bad     -> fuzzy Bad
    }};
    friend bool operator==(const TuningDefaults&, const TuningDefaults&) = default;
};

struct ExperimentConfig {
    Disposition disposition = Disposition::ThreeZones;
    FeedingMode feeding_mode = FeedingMode::Normal;
    Density density = Density::Intensive;
    std::uint64_t rng_seed = 0;
    int grid_width = 56;
    int grid_height = 56;
    int population_size = kIntensivePopulation;
    int epoch_cap = 2000;
    double stop_mean_size = 24.0;  // grams
    TuningDefaults tuning;
    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Feed ration for one drop: a fixed fraction of the full-grown biomass of
// the population, expressed in pellets (growth_pellets_per_gram per gram).
int derived_pellets_per_drop(int population_size, Density density, const TuningDefaults& t);

// A config for one (disposition, mode, density) cell of the experiment
// matrix, with population and feed ration derived from the density regime.
ExperimentConfig make_config(Disposition d, FeedingMode m, Density dens,
                             std::uint64_t seed, const TuningDefaults& base = {});

// The 16-cell matrix in results-table order (experiments 1..16): densities
// Intensive then SemiIntensive, modes Normal then Alta, dispositions
// 3Z, 2Z, 1Z, U. Each config receives a distinct seed derived from `seed`.
std::vector<ExperimentConfig> matrix_configs(const TuningDefaults& base, std::uint64_t seed);

// Short code in the results nomenclature, e.g. "3Z-N-I", "U-A-SI".
std::string config_code(const ExperimentConfig& config);
std::string config_code(Disposition d, FeedingMode m, Density dens);

const char* to_string(Disposition d);
const char* to_string(FeedingMode m);
const char* to_string(Density d);

// Throws ConfigError when an invariant is broken (non-positive epoch cap,
// non-increasing density thresholds, grid too small for the feeder layout).
void validate(const ExperimentConfig& config);

// JSON scenario file. Required keys: "disposition", "feeding_mode",
// "density". Optional: "seed", the ExperimentConfig scalars and every
// TuningDefaults field. Unknown keys are an error. seed_present reports
// whether the file carried its own seed.
ExperimentConfig load_scenario(const std::string& path, bool* seed_present = nullptr);
ExperimentConfig parse_scenario(const std::string& json_text, bool* seed_present = nullptr);
std::string scenario_to_json(const ExperimentConfig& config);

}  // namespace aquasim
