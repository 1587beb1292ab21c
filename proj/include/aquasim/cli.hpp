#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aquasim/analytics.hpp"
#include "aquasim/config.hpp"

namespace aquasim {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitInput = 2;

// One row of the reduced historical growth matrix (7 numeric columns);
// the columns that are not pond/week/weight ride along untouched.
struct HistoricalRecord {
    std::string pond_id;
    double week = 0.0;
    double mean_weight = 0.0;  // grams
    std::vector<double> extra;
};

// Which CSV column holds what; the original layout is not published, so
// the mapping is adjustable.
struct HistoricalColumns {
    int pond = 0;
    int week = 1;
    int weight = 2;
};

// Loads and validates: per pond, weeks must be strictly ascending once
// sorted (duplicate weeks are a data error).
std::vector<HistoricalRecord> load_historical_csv(const std::string& path,
                                                  const HistoricalColumns& columns = {});

// Shortest decimal text that round-trips to the same double. Locale-free.
std::string format_double(double value);

// Runs one pre-experiment from a scenario file and writes summary.json,
// trajectory_gen{0..9}.csv and histogram_best.csv into out_dir.
// dump_every > 0 additionally writes a grid frame every N epochs.
int cmd_run(const std::string& scenario_path, const std::string& out_dir,
            std::optional<std::uint64_t> seed_override,
            std::optional<std::uint64_t> fallback_seed, int dump_every = 0);

// Runs the 16-config matrix and writes results.csv into out_dir.
int cmd_matrix(const std::string& out_dir, std::uint64_t seed, int jobs = 1);

// Regresses a simulated trajectory CSV and a historical CSV side by side
// and writes a comparison JSON with both lines and the epoch/week scale.
int cmd_compare(const std::string& trajectory_csv, const std::string& historical_csv,
                const std::string& out_file, const HistoricalColumns& columns = {});

}  // namespace aquasim
