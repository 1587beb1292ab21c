#include "aquasim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace aquasim {

WorldState::WorldState(const ExperimentConfig& config,
                       const std::vector<Chromosome>& population, std::uint64_t seed)
    : grid(config.grid_width, config.grid_height),
      pellets(config.grid_width, config.grid_height),
      rng(seed) {
    agents.reserve(population.size());
    for (std::size_t i = 0; i < population.size(); ++i) {
        ShrimpAgent agent;
        agent.id = static_cast<int>(i);
        agent.chromosome = population[i];
        agent.pos.col = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(grid.width())));
        agent.pos.row = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(grid.height())));
        agents.push_back(agent);
    }
}

double WorldState::mean_size() const {
    long total = 0;
    for (const ShrimpAgent& a : agents) total += a.chromosome.size_grams;
    return static_cast<double>(total) / static_cast<double>(agents.size());
}

std::vector<Coord> WorldState::agent_positions() const {
    std::vector<Coord> positions;
    positions.reserve(agents.size());
    for (const ShrimpAgent& a : agents) positions.push_back(a.pos);
    return positions;
}

void run_epoch(WorldState& world, const ExperimentConfig& config) {
    const TuningDefaults& t = config.tuning;
    const std::size_t agents_before = world.agents.size();

    // 1. scheduled feed drop
    if (world.epoch % t.feeding_period == 0) {
        int count = t.pellets_per_drop_normal;
        if (config.feeding_mode == FeedingMode::Alta)
            count = static_cast<int>(std::ceil(t.alta_multiplier * count));
        for (const FeedPellet& p :
             drop_feed(config.disposition, count, config.grid_width, config.grid_height,
                       t.feeder_spread_radius, world.rng))
            world.pellets.add(p.pos);
    }

    // 2. environment reacts to where the agents are right now
    world.grid.recompute_quality(world.agent_positions(), t.density_thresholds);

    // 3. one decide-move-eat pass per agent, ascending id
    for (ShrimpAgent& agent : world.agents) {
        const CellParams& cell =
            quality_params(world.grid.quality_at(agent.pos), t.quality_param_table);
        const ShrimpState state = evaluate_state(cell.o2, cell.ph, cell.temp,
                                                 agent.chromosome.tolerance_overrides());
        agent.state = state.label;

        const EffectiveCaps caps =
            apply_state(state.label, agent.chromosome.displacement, agent.chromosome.smell);

        if (const auto target = sense_food(agent.pos, caps.smell_radius, world.pellets)) {
            agent.mode = MoveMode::Hunting;
            const Coord target_pos = world.pellets.position(*target);
            agent.pos = hunt_step(agent.pos, target_pos, caps.displacement);
            if (agent.pos == target_pos)
                eat(agent, *target, world.pellets, t.growth_pellets_per_gram);
        } else {
            agent.mode = MoveMode::Exploratory;
            agent.pos = explore_step(agent.pos, world.grid, caps.displacement, world.rng);
        }
    }

    ++world.epoch;

    if (world.agents.size() != agents_before)
        throw std::logic_error("agent count changed within an epoch");
    if (world.pellets.total_dropped() - world.pellets.total_consumed() !=
        world.pellets.live_count())
        throw std::logic_error("pellet conservation violated");
}

GenerationResult run_generation(const ExperimentConfig& config,
                                const std::vector<Chromosome>& population,
                                std::uint64_t seed, int generation_index,
                                const EpochHook& hook) {
    validate(config);
    if (static_cast<int>(population.size()) != config.population_size)
        throw std::invalid_argument("population size does not match the configuration");

    WorldState world(config, population, seed);

    GenerationResult result;
    result.generation_index = generation_index;

    {
        double mean = 0.0;
        for (const Chromosome& c : population) mean += fitness(c);
        mean /= static_cast<double>(population.size());
        double var = 0.0;
        for (const Chromosome& c : population)
            var += (fitness(c) - mean) * (fitness(c) - mean);
        result.initial_fitness_variance = var / static_cast<double>(population.size());
    }

    while (world.mean_size() < config.stop_mean_size && world.epoch < config.epoch_cap) {
        run_epoch(world, config);
        result.mean_size_trajectory.emplace_back(static_cast<double>(world.epoch),
                                                 world.mean_size());
        if (hook) hook(world);
    }

    result.epochs_used = world.epoch;
    result.capped = world.mean_size() < config.stop_mean_size;

    result.final_sizes.reserve(world.agents.size());
    result.final_population.reserve(world.agents.size());
    for (const ShrimpAgent& a : world.agents) {
        result.final_sizes.push_back(a.chromosome.size_grams);
        result.final_population.push_back(a.chromosome);
    }

    if (result.mean_size_trajectory.size() >= 2)
        result.mse = mse_vs_regression(result.mean_size_trajectory);

    std::vector<double> sizes_real(result.final_sizes.begin(), result.final_sizes.end());
    result.std_dev = aquasim::std_dev(sizes_real);
    result.histogram = histogram40(result.final_sizes);
    const auto [min_it, max_it] =
        std::minmax_element(result.final_sizes.begin(), result.final_sizes.end());
    result.min_size = *min_it;
    result.max_size = *max_it;
    return result;
}

PreExperimentResult run_pre_experiment(const ExperimentConfig& config, const EpochHook& hook) {
    validate(config);

    std::uint64_t derive_state = config.rng_seed;
    Rng ga_rng(splitmix64(derive_state));

    PreExperimentResult pre;
    pre.generations.reserve(kGenerationsPerPreExperiment);

    std::vector<Chromosome> population =
        spawn_initial_population(config.population_size, config.tuning);

    for (int gen = 0; gen < kGenerationsPerPreExperiment; ++gen) {
        if (gen > 0) {
            const std::vector<Chromosome>& previous =
                pre.generations.back().final_population;
            const std::vector<Chromosome> parents = tournament_select(
                previous, config.tuning.tournament_size, config.population_size, ga_rng);
            population.clear();
            for (std::size_t i = 0; i < parents.size(); ++i)
                population.push_back(crossover(parents[i], parents[(i + 1) % parents.size()],
                                               config.tuning, ga_rng));
        }
        pre.generations.push_back(
            run_generation(config, population, splitmix64(derive_state), gen, hook));
    }

    pre.best_index = 0;
    for (int gen = 1; gen < kGenerationsPerPreExperiment; ++gen)
        if (pre.generations[static_cast<std::size_t>(gen)].mse <
            pre.generations[static_cast<std::size_t>(pre.best_index)].mse)
            pre.best_index = gen;
    return pre;
}

MatrixRow summarize(int exp_no, const ExperimentConfig& config, const GenerationResult& best) {
    MatrixRow row;
    row.exp_no = exp_no;
    row.code = config_code(config);
    row.mse = best.mse;
    row.std_dev = best.std_dev;
    double mean = 0.0;
    for (int s : best.final_sizes) mean += s;
    row.mean_size = mean / static_cast<double>(best.final_sizes.size());
    row.max_size = best.max_size;
    row.min_size = best.min_size;
    row.epochs = best.epochs_used;
    row.groups = best.histogram.group_count;
    row.weeks = epochs_to_weeks(row.epochs);
    return row;
}

std::vector<MatrixRow> MatrixResult::rows() const {
    std::vector<MatrixRow> rows;
    rows.reserve(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i)
        rows.push_back(summarize(static_cast<int>(i) + 1, configs[i], experiments[i].best()));
    return rows;
}

MatrixResult run_matrix(const TuningDefaults& base, std::uint64_t seed, int jobs) {
    MatrixResult result;
    result.configs = matrix_configs(base, seed);
    result.experiments.resize(result.configs.size());

    if (jobs <= 1) {
        for (std::size_t i = 0; i < result.configs.size(); ++i)
            result.experiments[i] = run_pre_experiment(result.configs[i]);
        return result;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= result.configs.size()) return;
            result.experiments[i] = run_pre_experiment(result.configs[i]);
        }
    };
    std::vector<std::thread> pool;
    const int n_workers = std::min<int>(jobs, static_cast<int>(result.configs.size()));
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    return result;
}

}  // namespace aquasim
