#include "aquasim/habitat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aquasim {

const char* to_string(QualityLevel q) {
    switch (q) {
        case QualityLevel::Good: return "Good";
        case QualityLevel::Medium: return "Medium";
        case QualityLevel::Tolerable: return "Tolerable";
        case QualityLevel::Bad: return "Bad";
    }
    return "?";
}

QualityLevel density_quality(int agent_count_in_neighborhood,
                             const std::array<int, 3>& thresholds) {
    if (!(thresholds[0] < thresholds[1] && thresholds[1] < thresholds[2]))
        throw ConfigError("density_thresholds must be strictly increasing");
    if (agent_count_in_neighborhood <= thresholds[0]) return QualityLevel::Good;
    if (agent_count_in_neighborhood <= thresholds[1]) return QualityLevel::Medium;
    if (agent_count_in_neighborhood <= thresholds[2]) return QualityLevel::Tolerable;
    return QualityLevel::Bad;
}

const CellParams& quality_params(QualityLevel q, const QualityParamTable& table) {
    return table[static_cast<std::size_t>(q)];
}

std::vector<Coord> feeder_positions(Disposition d, int grid_width, int grid_height,
                                    int spread_radius) {
    if (d == Disposition::Uniform) return {};
    if (std::min(grid_width, grid_height) < 4 * spread_radius)
        throw ConfigError("grid too small: need >= 4 * feeder_spread_radius cells per side");

    const int zones = d == Disposition::ThreeZones ? 3 : d == Disposition::TwoZones ? 2 : 1;
    std::vector<Coord> feeders;
    feeders.reserve(static_cast<std::size_t>(zones));
    for (int i = 1; i <= zones; ++i) {
        const int col = static_cast<int>(
            std::lround(static_cast<double>(grid_width) * i / (zones + 1)));
        feeders.push_back({col, grid_height / 2});
    }
    return feeders;
}

std::vector<FeedPellet> drop_feed(Disposition d, int pellet_count, int grid_width,
                                  int grid_height, int spread_radius, Rng& rng) {
    if (pellet_count < 0) throw std::invalid_argument("pellet_count must be >= 0");

    std::vector<FeedPellet> pellets;
    pellets.reserve(static_cast<std::size_t>(pellet_count));

    auto scatter = [&](int count, int col_lo, int col_hi, int row_lo, int row_hi) {
        for (int i = 0; i < count; ++i) {
            const int col = rng.next_int(col_lo, col_hi);
            const int row = rng.next_int(row_lo, row_hi);
            pellets.push_back({{col, row}, true});
        }
    };

    if (d == Disposition::Uniform) {
        scatter(pellet_count, 0, grid_width - 1, 0, grid_height - 1);
        return pellets;
    }

    const std::vector<Coord> feeders =
        feeder_positions(d, grid_width, grid_height, spread_radius);
    const int zones = static_cast<int>(feeders.size());
    const int base_share = pellet_count / zones;
    const int remainder = pellet_count % zones;
    for (int z = 0; z < zones; ++z) {
        const int share = base_share + (z < remainder ? 1 : 0);
        const Coord f = feeders[static_cast<std::size_t>(z)];
        scatter(share, std::max(0, f.col - spread_radius),
                std::min(grid_width - 1, f.col + spread_radius),
                std::max(0, f.row - spread_radius),
                std::min(grid_height - 1, f.row + spread_radius));
    }
    return pellets;
}

HabitatGrid::HabitatGrid(int width, int height)
    : width_(width),
      height_(height),
      quality_(static_cast<std::size_t>(width) * height, QualityLevel::Good),
      counts_(static_cast<std::size_t>(width) * height, 0),
      column_sum_(static_cast<std::size_t>(width) * height, 0) {
    if (width < 1 || height < 1) throw ConfigError("grid dimensions must be >= 1");
}

void HabitatGrid::recompute_quality(const std::vector<Coord>& agent_positions,
                                    const std::array<int, 3>& thresholds) {
    if (!(thresholds[0] < thresholds[1] && thresholds[1] < thresholds[2]))
        throw ConfigError("density_thresholds must be strictly increasing");

    constexpr int kRadius = 2;  // Moore neighborhood of radius 2

    std::fill(counts_.begin(), counts_.end(), 0);
    for (const Coord& p : agent_positions)
        ++counts_[static_cast<std::size_t>(p.row) * width_ + p.col];

    // separable box sum: vertical pass then horizontal pass
    for (int col = 0; col < width_; ++col) {
        int running = 0;
        for (int row = 0; row < std::min(kRadius, height_); ++row)
            running += counts_[static_cast<std::size_t>(row) * width_ + col];
        for (int row = 0; row < height_; ++row) {
            if (row + kRadius < height_)
                running += counts_[static_cast<std::size_t>(row + kRadius) * width_ + col];
            column_sum_[static_cast<std::size_t>(row) * width_ + col] = running;
            if (row - kRadius >= 0)
                running -= counts_[static_cast<std::size_t>(row - kRadius) * width_ + col];
        }
    }
    for (int row = 0; row < height_; ++row) {
        const std::size_t base = static_cast<std::size_t>(row) * width_;
        int running = 0;
        for (int col = 0; col < std::min(kRadius, width_); ++col)
            running += column_sum_[base + col];
        for (int col = 0; col < width_; ++col) {
            if (col + kRadius < width_) running += column_sum_[base + col + kRadius];
            quality_[base + col] = density_quality(running, thresholds);
            if (col - kRadius >= 0) running -= column_sum_[base + col - kRadius];
        }
    }
}

PelletField::PelletField(int width, int height)
    : width_(width),
      height_(height),
      cells_(static_cast<std::size_t>(width) * height) {}

int PelletField::add(Coord pos) {
    const int id = static_cast<int>(pellets_.size());
    pellets_.push_back({pos, true});
    cells_[static_cast<std::size_t>(pos.row) * width_ + pos.col].push_back(id);
    ++live_count_;
    return id;
}

void PelletField::consume(int pellet_id) {
    FeedPellet& p = pellets_[static_cast<std::size_t>(pellet_id)];
    if (!p.alive) throw std::logic_error("consuming a pellet that is already gone");
    p.alive = false;
    --live_count_;
    auto& cell = cells_[static_cast<std::size_t>(p.pos.row) * width_ + p.pos.col];
    cell.erase(std::find(cell.begin(), cell.end(), pellet_id));
}

std::vector<int> PelletField::live_ids() const {
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(live_count_));
    for (std::size_t i = 0; i < pellets_.size(); ++i)
        if (pellets_[i].alive) ids.push_back(static_cast<int>(i));
    return ids;
}

std::string render_frame(const HabitatGrid& grid, const PelletField& pellets,
                         const std::vector<Coord>& agent_positions) {
    static constexpr char kQualityChars[4] = {'.', 'g', 'y', 'r'};

    std::string frame;
    frame.reserve(static_cast<std::size_t>(grid.height()) * (grid.width() + 1));
    for (int row = 0; row < grid.height(); ++row) {
        for (int col = 0; col < grid.width(); ++col)
            frame += kQualityChars[static_cast<int>(grid.quality_at({col, row}))];
        frame += '\n';
    }

    auto put = [&](Coord c, char ch) {
        frame[static_cast<std::size_t>(c.row) * (grid.width() + 1) + c.col] = ch;
    };
    for (int id = 0; id < pellets.total_dropped(); ++id)
        if (pellets.alive(id)) put(pellets.position(id), '*');
    for (const Coord& p : agent_positions) put(p, 'S');
    return frame;
}

}  // namespace aquasim
