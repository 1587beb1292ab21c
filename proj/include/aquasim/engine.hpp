#pragma once

#include <functional>
#include <string>
#include <vector>

#include "aquasim/agents.hpp"
#include "aquasim/analytics.hpp"
#include "aquasim/config.hpp"

namespace aquasim {

// One pond: the container every agent lives in. Single writer; epochs are
// strictly sequential within a generation.
struct WorldState {
    int epoch = 0;
    HabitatGrid grid;
    PelletField pellets;
    std::vector<ShrimpAgent> agents;
    Rng rng;

    WorldState(const ExperimentConfig& config, const std::vector<Chromosome>& population,
               std::uint64_t seed);

    double mean_size() const;
    std::vector<Coord> agent_positions() const;
};

struct GenerationResult {
    int generation_index = 0;
    int epochs_used = 0;
    bool capped = false;  // epoch_cap hit before the stop criterion
    std::vector<GrowthPoint> mean_size_trajectory;  // one point per epoch run
    std::vector<int> final_sizes;
    std::vector<Chromosome> final_population;
    double initial_fitness_variance = 0.0;  // over the population as bred
    double mse = 0.0;  // of the trajectory against its own regression; 0 if < 2 points
    double std_dev = 0.0;
    Histogram histogram;
    int min_size = 0;
    int max_size = 0;
};

struct PreExperimentResult {
    std::vector<GenerationResult> generations;  // exactly 10
    int best_index = 0;                         // min MSE, earliest on ties
    const GenerationResult& best() const {
        return generations[static_cast<std::size_t>(best_index)];
    }
};

// Invoked after every completed epoch (grid dumps, probes).
using EpochHook = std::function<void(const WorldState&)>;

// One tick: scheduled feed drop, quality recompute from current agent
// density, then one decide-move-eat pass per agent in ascending id order.
void run_epoch(WorldState& world, const ExperimentConfig& config);

// Fresh world at uniform-random positions, epochs until the mean size
// reaches config.stop_mean_size or epoch_cap (then flagged capped).
GenerationResult run_generation(const ExperimentConfig& config,
                                const std::vector<Chromosome>& population,
                                std::uint64_t seed, int generation_index = 0,
                                const EpochHook& hook = {});

// The fixed 10-generation loop: generation 0 spawns the homogeneous
// population; each later generation is rebuilt from the previous one by
// tournament selection plus crossover.
PreExperimentResult run_pre_experiment(const ExperimentConfig& config,
                                       const EpochHook& hook = {});

constexpr int kGenerationsPerPreExperiment = 10;

struct MatrixRow {
    int exp_no = 0;  // 1-based, results-table order
    std::string code;
    double mse = 0.0;
    double std_dev = 0.0;
    double mean_size = 0.0;
    int max_size = 0;
    int min_size = 0;
    int epochs = 0;
    int groups = 0;
    double weeks = 0.0;
};

struct MatrixResult {
    std::vector<ExperimentConfig> configs;        // 16
    std::vector<PreExperimentResult> experiments;  // parallel to configs
    std::vector<MatrixRow> rows() const;
};

// All 16 pre-experiments (160 generations). jobs > 1 fans configs across
// threads; output is identical regardless of the worker count.
MatrixResult run_matrix(const TuningDefaults& base, std::uint64_t seed, int jobs = 1);

MatrixRow summarize(int exp_no, const ExperimentConfig& config, const GenerationResult& best);

}  // namespace aquasim
