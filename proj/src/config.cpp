#include "aquasim/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "aquasim/rng.hpp"
#include "json.hpp"

namespace aquasim {

namespace {

using nlohmann::json;

Disposition parse_disposition(const std::string& s) {
    if (s == "3Z" || s == "ThreeZones") return Disposition::ThreeZones;
    if (s == "2Z" || s == "TwoZones") return Disposition::TwoZones;
    if (s == "1Z" || s == "OneZone") return Disposition::OneZone;
    if (s == "U" || s == "Uniform") return Disposition::Uniform;
    throw ConfigError("disposition: expected one of 3Z, 2Z, 1Z, U (got \"" + s + "\")");
}

FeedingMode parse_mode(const std::string& s) {
    if (s == "N" || s == "Normal") return FeedingMode::Normal;
    if (s == "A" || s == "Alta") return FeedingMode::Alta;
    throw ConfigError("feeding_mode: expected Normal or Alta (got \"" + s + "\")");
}

Density parse_density(const std::string& s) {
    if (s == "I" || s == "Intensive") return Density::Intensive;
    if (s == "SI" || s == "SemiIntensive") return Density::SemiIntensive;
    throw ConfigError("density: expected Intensive or SemiIntensive (got \"" + s + "\")");
}

const char* disposition_code(Disposition d) {
    switch (d) {
        case Disposition::ThreeZones: return "3Z";
        case Disposition::TwoZones: return "2Z";
        case Disposition::OneZone: return "1Z";
        case Disposition::Uniform: return "U";
    }
    return "?";
}

}  // namespace

int derived_pellets_per_drop(int population_size, Density density, const TuningDefaults& t) {
    const double fraction = 0.03;
    double ration = fraction * static_cast<double>(population_size) * kMaxSizeGrams;
    if (density == Density::SemiIntensive) ration *= t.semi_intensive_feed_factor;
    return static_cast<int>(std::ceil(ration));
}

ExperimentConfig make_config(Disposition d, FeedingMode m, Density dens,
                             std::uint64_t seed, const TuningDefaults& base) {
    ExperimentConfig config;
    config.disposition = d;
    config.feeding_mode = m;
    config.density = dens;
    config.rng_seed = seed;
    config.population_size =
        dens == Density::Intensive ? kIntensivePopulation : kSemiIntensivePopulation;
    config.tuning = base;
    config.tuning.pellets_per_drop_normal =
        derived_pellets_per_drop(config.population_size, dens, base);
    return config;
}

std::vector<ExperimentConfig> matrix_configs(const TuningDefaults& base, std::uint64_t seed) {
    static constexpr std::array<Density, 2> kDensities{Density::Intensive,
                                                       Density::SemiIntensive};
    static constexpr std::array<FeedingMode, 2> kModes{FeedingMode::Normal, FeedingMode::Alta};
    static constexpr std::array<Disposition, 4> kDispositions{
        Disposition::ThreeZones, Disposition::TwoZones, Disposition::OneZone,
        Disposition::Uniform};

    std::uint64_t derive_state = seed;
    std::vector<ExperimentConfig> configs;
    configs.reserve(16);
    for (Density dens : kDensities)
        for (FeedingMode mode : kModes)
            for (Disposition disp : kDispositions)
                configs.push_back(make_config(disp, mode, dens, splitmix64(derive_state), base));
    return configs;
}

std::string config_code(Disposition d, FeedingMode m, Density dens) {
    std::string code = disposition_code(d);
    code += m == FeedingMode::Normal ? "-N" : "-A";
    code += dens == Density::Intensive ? "-I" : "-SI";
    return code;
}

std::string config_code(const ExperimentConfig& config) {
    return config_code(config.disposition, config.feeding_mode, config.density);
}

const char* to_string(Disposition d) { return disposition_code(d); }
const char* to_string(FeedingMode m) { return m == FeedingMode::Normal ? "Normal" : "Alta"; }
const char* to_string(Density d) {
    return d == Density::Intensive ? "Intensive" : "SemiIntensive";
}

void validate(const ExperimentConfig& config) {
    const TuningDefaults& t = config.tuning;
    if (config.population_size < 1) throw ConfigError("population_size must be >= 1");
    if (config.epoch_cap < 1) throw ConfigError("epoch_cap must be >= 1");
    if (config.grid_width < 1 || config.grid_height < 1)
        throw ConfigError("grid dimensions must be >= 1");
    if (t.feeding_period < 1) throw ConfigError("feeding_period must be >= 1");
    if (t.pellets_per_drop_normal < 0) throw ConfigError("pellets_per_drop_normal must be >= 0");
    if (t.alta_multiplier < 1.0) throw ConfigError("alta_multiplier must be >= 1");
    if (t.growth_pellets_per_gram < 1) throw ConfigError("growth_pellets_per_gram must be >= 1");
    if (t.tournament_size < 1) throw ConfigError("tournament_size must be >= 1");
    if (t.mutation_sigma < 0.0) throw ConfigError("mutation_sigma must be >= 0");
    if (t.smell_radius_base < 0.0) throw ConfigError("smell_radius_base must be >= 0");
    if (t.displacement_base < 1) throw ConfigError("displacement_base must be >= 1");
    if (t.semi_intensive_feed_factor <= 0.0)
        throw ConfigError("semi_intensive_feed_factor must be > 0");
    if (!(t.density_thresholds[0] < t.density_thresholds[1] &&
          t.density_thresholds[1] < t.density_thresholds[2]))
        throw ConfigError("density_thresholds must be strictly increasing");
    if (config.disposition != Disposition::Uniform) {
        const int min_dim = std::min(config.grid_width, config.grid_height);
        if (min_dim < 4 * t.feeder_spread_radius)
            throw ConfigError("grid too small: need >= 4 * feeder_spread_radius cells per side");
    }
}

namespace {

json tuning_to_json(const TuningDefaults& t) {
    json j;
    j["feeding_period"] = t.feeding_period;
    j["pellets_per_drop_normal"] = t.pellets_per_drop_normal;
    j["alta_multiplier"] = t.alta_multiplier;
    j["feeder_spread_radius"] = t.feeder_spread_radius;
    j["smell_radius_base"] = t.smell_radius_base;
    j["displacement_base"] = t.displacement_base;
    j["growth_pellets_per_gram"] = t.growth_pellets_per_gram;
    j["mutation_sigma"] = t.mutation_sigma;
    j["tournament_size"] = t.tournament_size;
    j["density_thresholds"] = t.density_thresholds;
    j["semi_intensive_feed_factor"] = t.semi_intensive_feed_factor;
    json table = json::array();
    for (const CellParams& row : t.quality_param_table)
        table.push_back({row.o2, row.ph, row.temp});
    j["quality_param_table"] = table;
    return j;
}

template <typename T>
void read_field(const json& j, const char* key, T& target, bool& touched) {
    if (auto it = j.find(key); it != j.end()) {
        try {
            target = it->get<T>();
        } catch (const json::exception&) {
            throw ConfigError(std::string("scenario key \"") + key + "\" has the wrong type");
        }
        touched = true;
    }
}

}  // namespace

ExperimentConfig parse_scenario(const std::string& json_text, bool* seed_present) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("scenario must be a JSON object");

    static const std::array<const char*, 21> kKnownKeys{
        "disposition", "feeding_mode", "density", "seed",
        "grid_width", "grid_height", "population_size", "epoch_cap", "stop_mean_size",
        "feeding_period", "pellets_per_drop_normal", "alta_multiplier",
        "feeder_spread_radius", "smell_radius_base", "displacement_base",
        "growth_pellets_per_gram", "mutation_sigma", "tournament_size",
        "density_thresholds", "quality_param_table", "semi_intensive_feed_factor"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* key : kKnownKeys)
            if (it.key() == key) known = true;
        if (!known) throw ConfigError("unknown scenario key \"" + it.key() + "\"");
    }

    auto require_string = [&](const char* key) -> std::string {
        auto it = j.find(key);
        if (it == j.end()) throw ConfigError(std::string("missing scenario key \"") + key + "\"");
        if (!it->is_string())
            throw ConfigError(std::string("scenario key \"") + key + "\" must be a string");
        return it->get<std::string>();
    };

    const Disposition disp = parse_disposition(require_string("disposition"));
    const FeedingMode mode = parse_mode(require_string("feeding_mode"));
    const Density dens = parse_density(require_string("density"));

    std::uint64_t seed = 0;
    bool has_seed = false;
    read_field(j, "seed", seed, has_seed);
    if (seed_present) *seed_present = has_seed;
    bool touched = false;

    ExperimentConfig config = make_config(disp, mode, dens, seed);

    read_field(j, "grid_width", config.grid_width, touched);
    read_field(j, "grid_height", config.grid_height, touched);
    read_field(j, "population_size", config.population_size, touched);
    read_field(j, "epoch_cap", config.epoch_cap, touched);
    read_field(j, "stop_mean_size", config.stop_mean_size, touched);

    TuningDefaults& t = config.tuning;
    read_field(j, "feeding_period", t.feeding_period, touched);
    read_field(j, "alta_multiplier", t.alta_multiplier, touched);
    read_field(j, "feeder_spread_radius", t.feeder_spread_radius, touched);
    read_field(j, "smell_radius_base", t.smell_radius_base, touched);
    read_field(j, "displacement_base", t.displacement_base, touched);
    read_field(j, "growth_pellets_per_gram", t.growth_pellets_per_gram, touched);
    read_field(j, "mutation_sigma", t.mutation_sigma, touched);
    read_field(j, "tournament_size", t.tournament_size, touched);
    read_field(j, "density_thresholds", t.density_thresholds, touched);

    read_field(j, "semi_intensive_feed_factor", t.semi_intensive_feed_factor, touched);

    bool pellets_touched = false;
    read_field(j, "pellets_per_drop_normal", t.pellets_per_drop_normal, pellets_touched);
    if (!pellets_touched) {
        // ration tracks whatever population/factor ended up set
        t.pellets_per_drop_normal =
            derived_pellets_per_drop(config.population_size, config.density, t);
    }

    if (auto it = j.find("quality_param_table"); it != j.end()) {
        if (!it->is_array() || it->size() != 4)
            throw ConfigError("quality_param_table must be an array of 4 rows");
        for (std::size_t row = 0; row < 4; ++row) {
            const json& r = (*it)[row];
            if (!r.is_array() || r.size() != 3)
                throw ConfigError("quality_param_table rows must be [o2, ph, temp]");
            t.quality_param_table[row] = {r[0].get<double>(), r[1].get<double>(),
                                          r[2].get<double>()};
        }
    }

    validate(config);
    return config;
}

ExperimentConfig load_scenario(const std::string& path, bool* seed_present) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), seed_present);
}

std::string scenario_to_json(const ExperimentConfig& config) {
    json j = tuning_to_json(config.tuning);
    j["disposition"] = disposition_code(config.disposition);
    j["feeding_mode"] = to_string(config.feeding_mode);
    j["density"] = to_string(config.density);
    j["seed"] = config.rng_seed;
    j["grid_width"] = config.grid_width;
    j["grid_height"] = config.grid_height;
    j["population_size"] = config.population_size;
    j["epoch_cap"] = config.epoch_cap;
    j["stop_mean_size"] = config.stop_mean_size;
    return j.dump(2) + "\n";
}

}  // namespace aquasim
