#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "aquasim/cli.hpp"

namespace {

std::optional<std::uint64_t> env_seed() {
    const char* raw = std::getenv("AQUASIM_SEED");
    if (!raw || !*raw) return std::nullopt;
    try {
        return std::stoull(raw);
    } catch (const std::exception&) {
        std::cerr << "input error: AQUASIM_SEED is not a number\n";
        std::exit(aquasim::kExitInput);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shrimp-culture feed-distribution simulator"};
    app.require_subcommand(1);

    std::string scenario_path, out_dir = "out", out_file = "compare.json";
    std::string trajectory_csv, historical_csv;
    std::optional<std::uint64_t> seed_flag;
    int jobs = 1;
    int dump_every = 0;
    aquasim::HistoricalColumns columns;

    CLI::App* run = app.add_subcommand("run", "Run one scenario (10 generations)");
    run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--seed", seed_flag, "Override the RNG seed");
    run->add_option("--dump-grid", dump_every, "Dump a habitat text frame every N epochs");

    CLI::App* matrix = app.add_subcommand("matrix", "Run the 16-configuration matrix");
    matrix->add_option("--out", out_dir, "Output directory");
    matrix->add_option("--seed", seed_flag, "Master RNG seed");
    matrix->add_option("--jobs", jobs, "Worker threads (output is identical for any count)");

    CLI::App* compare = app.add_subcommand("compare", "Regress simulated vs historical growth");
    compare->add_option("trajectory", trajectory_csv, "Simulated trajectory CSV (epoch,mean_size)")
        ->required();
    compare->add_option("historical", historical_csv, "Historical growth CSV")->required();
    compare->add_option("--out", out_file, "Comparison JSON output file");
    compare->add_option("--pond-col", columns.pond, "Historical column index: pond id");
    compare->add_option("--week-col", columns.week, "Historical column index: week");
    compare->add_option("--weight-col", columns.weight, "Historical column index: mean weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return aquasim::kExitInput;
    }

    if (run->parsed())
        return aquasim::cmd_run(scenario_path, out_dir, seed_flag, env_seed(), dump_every);
    if (matrix->parsed()) {
        std::uint64_t seed = 0;
        if (seed_flag)
            seed = *seed_flag;
        else if (const auto env = env_seed())
            seed = *env;
        return aquasim::cmd_matrix(out_dir, seed, jobs);
    }
    return aquasim::cmd_compare(trajectory_csv, historical_csv, out_file, columns);
}
