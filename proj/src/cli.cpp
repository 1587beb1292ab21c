#include "aquasim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "aquasim/engine.hpp"
#include "json.hpp"

namespace aquasim {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    return fields;
}

bool parse_number(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{}) return false;
    for (const char* c = ptr; c < end; ++c)
        if (*c != ' ' && *c != '\t' && *c != '\r') return false;
    return true;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void write_trajectory_csv(const fs::path& path, const std::vector<GrowthPoint>& points) {
    std::ofstream out = open_out(path);
    out << "epoch,mean_size\n";
    for (const auto& [epoch, mean] : points)
        out << format_double(epoch) << ',' << format_double(mean) << '\n';
}

void write_histogram_csv(const fs::path& path, const Histogram& histogram) {
    std::ofstream out = open_out(path);
    out << "bin_lo,bin_hi,count\n";
    for (std::size_t i = 0; i < histogram.bins.size(); ++i)
        out << i << ',' << i + 1 << ',' << histogram.bins[i] << '\n';
}

json regression_report(const std::vector<GrowthPoint>& points) {
    const RegressionLine line = linear_regression(points);
    json report;
    report["slope"] = line.slope;
    report["intercept"] = line.intercept;
    report["mse"] = mse_vs_regression(points);
    report["points"] = points.size();
    return report;
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace

std::vector<HistoricalRecord> load_historical_csv(const std::string& path,
                                                  const HistoricalColumns& columns) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open historical file: " + path);

    const int needed = std::max({columns.pond, columns.week, columns.weight});
    std::vector<HistoricalRecord> records;
    std::string line;
    bool first = true;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (static_cast<int>(fields.size()) <= needed)
            throw ConfigError("historical file line " + std::to_string(line_no) +
                              ": expected at least " + std::to_string(needed + 1) + " columns");

        HistoricalRecord record;
        record.pond_id = fields[static_cast<std::size_t>(columns.pond)];
        const bool ok =
            parse_number(fields[static_cast<std::size_t>(columns.week)], record.week) &&
            parse_number(fields[static_cast<std::size_t>(columns.weight)], record.mean_weight);
        if (!ok) {
            if (first) {  // header row
                first = false;
                continue;
            }
            throw ConfigError("historical file line " + std::to_string(line_no) +
                              ": week/weight columns are not numeric");
        }
        first = false;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (static_cast<int>(i) == columns.pond || static_cast<int>(i) == columns.week ||
                static_cast<int>(i) == columns.weight)
                continue;
            double v = 0.0;
            parse_number(fields[i], v);
            record.extra.push_back(v);
        }
        records.push_back(std::move(record));
    }

    // growth control per pond must order into strictly ascending weeks
    std::map<std::string, std::vector<double>> weeks_by_pond;
    for (const HistoricalRecord& r : records) weeks_by_pond[r.pond_id].push_back(r.week);
    for (auto& [pond, weeks] : weeks_by_pond) {
        std::sort(weeks.begin(), weeks.end());
        for (std::size_t i = 1; i < weeks.size(); ++i)
            if (weeks[i] == weeks[i - 1])
                throw ConfigError("pond " + pond + " has duplicate week " +
                                  format_double(weeks[i]));
    }
    return records;
}

int cmd_run(const std::string& scenario_path, const std::string& out_dir,
            std::optional<std::uint64_t> seed_override,
            std::optional<std::uint64_t> fallback_seed, int dump_every) {
    return run_guarded([&]() {
        bool scenario_has_seed = false;
        ExperimentConfig config = load_scenario(scenario_path, &scenario_has_seed);
        if (seed_override)
            config.rng_seed = *seed_override;
        else if (!scenario_has_seed && fallback_seed)
            config.rng_seed = *fallback_seed;

        fs::create_directories(out_dir);

        std::ofstream frames;
        EpochHook hook;
        if (dump_every > 0) {
            frames = open_out(fs::path(out_dir) / "grid_frames.txt");
            hook = [&frames, dump_every](const WorldState& world) {
                if (world.epoch % dump_every != 0) return;
                frames << "# epoch " << world.epoch << '\n'
                       << render_frame(world.grid, world.pellets, world.agent_positions());
            };
        }

        const PreExperimentResult pre = run_pre_experiment(config, hook);

        for (const GenerationResult& gen : pre.generations)
            write_trajectory_csv(fs::path(out_dir) / ("trajectory_gen" +
                                                       std::to_string(gen.generation_index) +
                                                       ".csv"),
                                 gen.mean_size_trajectory);
        write_histogram_csv(fs::path(out_dir) / "histogram_best.csv", pre.best().histogram);

        const MatrixRow row = summarize(1, config, pre.best());
        json summary;
        summary["config"] = json::parse(scenario_to_json(config));
        summary["config_code"] = config_code(config);
        summary["best_generation"] = pre.best_index;
        summary["epochs"] = row.epochs;
        summary["capped"] = pre.best().capped;
        summary["mse"] = row.mse;
        summary["std"] = row.std_dev;
        summary["mean_size"] = row.mean_size;
        summary["max_size"] = row.max_size;
        summary["min_size"] = row.min_size;
        summary["groups"] = row.groups;
        summary["weeks"] = row.weeks;
        json per_generation = json::array();
        for (const GenerationResult& gen : pre.generations) {
            json g;
            g["generation"] = gen.generation_index;
            g["epochs"] = gen.epochs_used;
            g["mse"] = gen.mse;
            g["capped"] = gen.capped;
            per_generation.push_back(g);
        }
        summary["generations"] = per_generation;

        std::ofstream out = open_out(fs::path(out_dir) / "summary.json");
        out << summary.dump(2) << '\n';
        return kExitOk;
    });
}

int cmd_matrix(const std::string& out_dir, std::uint64_t seed, int jobs) {
    return run_guarded([&]() {
        const MatrixResult result = run_matrix(TuningDefaults{}, seed, jobs);

        fs::create_directories(out_dir);
        std::ofstream out = open_out(fs::path(out_dir) / "results.csv");
        out << "exp_no,config,mse,std,mean_size,max_size,min_size,epochs,groups,weeks\n";
        for (const MatrixRow& row : result.rows()) {
            out << row.exp_no << ',' << row.code << ',' << format_double(row.mse) << ','
                << format_double(row.std_dev) << ',' << format_double(row.mean_size) << ','
                << row.max_size << ',' << row.min_size << ',' << row.epochs << ','
                << row.groups << ',' << format_double(row.weeks) << '\n';
        }
        return kExitOk;
    });
}

int cmd_compare(const std::string& trajectory_csv, const std::string& historical_csv,
                const std::string& out_file, const HistoricalColumns& columns) {
    return run_guarded([&]() {
        std::ifstream in(trajectory_csv);
        if (!in) throw ConfigError("cannot open trajectory file: " + trajectory_csv);
        std::vector<GrowthPoint> simulated;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            const std::vector<std::string> fields = split_csv_line(line);
            if (fields.size() < 2)
                throw ConfigError("trajectory line " + std::to_string(line_no) +
                                  ": expected epoch,mean_size");
            double epoch = 0.0, mean = 0.0;
            if (!parse_number(fields[0], epoch) || !parse_number(fields[1], mean)) {
                if (line_no == 1) continue;  // header
                throw ConfigError("trajectory line " + std::to_string(line_no) +
                                  ": not numeric");
            }
            simulated.emplace_back(epoch, mean);
        }

        const std::vector<HistoricalRecord> records =
            load_historical_csv(historical_csv, columns);
        std::vector<GrowthPoint> historical;
        historical.reserve(records.size());
        for (const HistoricalRecord& r : records) historical.emplace_back(r.week, r.mean_weight);

        json report;
        try {
            report["simulated"] = regression_report(simulated);
            report["historical"] = regression_report(historical);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("regression input: ") + e.what());
        }
        report["weeks_per_epoch"] = 22.0 / 287.5;
        report["epochs_per_week"] = 287.5 / 22.0;

        std::ofstream out = open_out(out_file);
        out << report.dump(2) << '\n';
        return kExitOk;
    });
}

}  // namespace aquasim
