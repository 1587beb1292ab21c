#pragma once

#include <string>
#include <vector>

#include "aquasim/config.hpp"
#include "aquasim/rng.hpp"

namespace aquasim {

// Four environment grades, rendered white/green/yellow/red.
enum class QualityLevel { Good = 0, Medium = 1, Tolerable = 2, Bad = 3 };

const char* to_string(QualityLevel q);

struct Coord {
    int col = 0;
    int row = 0;
    friend bool operator==(const Coord& a, const Coord& b) = default;
};

struct FeedPellet {
    Coord pos;
    bool alive = true;
};

// Quality grade of one cell from the number of agents in its Moore
// neighborhood of radius 2. Thresholds must be strictly increasing.
QualityLevel density_quality(int agent_count_in_neighborhood,
                             const std::array<int, 3>& thresholds);

// Physico-chemical triple a cell of the given quality exposes.
const CellParams& quality_params(QualityLevel q, const QualityParamTable& table);

// Feeder columns at round(width * i/(Z+1)) on the middle row; Uniform has
// no discrete feeders. Grid sides must be >= 4 * spread_radius.
std::vector<Coord> feeder_positions(Disposition d, int grid_width, int grid_height,
                                    int spread_radius);

// One feed drop. Zoned dispositions split the pellets evenly across the
// feeders (remainder to the first ones) and scatter each share uniformly
// within spread_radius (Chebyshev) of its feeder; Uniform scatters over
// the whole grid.
std::vector<FeedPellet> drop_feed(Disposition d, int pellet_count, int grid_width,
                                  int grid_height, int spread_radius, Rng& rng);

// Per-cell quality derived from agent density. Parameters are looked up
// per cell on demand; the grid stores only the quality grade.
class HabitatGrid {
public:
    HabitatGrid(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    bool in_bounds(Coord c) const {
        return c.col >= 0 && c.col < width_ && c.row >= 0 && c.row < height_;
    }

    QualityLevel quality_at(Coord c) const {
        return quality_[static_cast<std::size_t>(c.row) * width_ + c.col];
    }

    // Pure function of the agent positions: every cell's grade is the
    // density_quality of its radius-2 Moore neighborhood count.
    void recompute_quality(const std::vector<Coord>& agent_positions,
                           const std::array<int, 3>& thresholds);

private:
    int width_, height_;
    std::vector<QualityLevel> quality_;
    std::vector<int> counts_;      // scratch: per-cell agent counts
    std::vector<int> column_sum_;  // scratch: vertical box sums
};

// Live pellets with a per-cell index so agents can scan their smell
// neighborhood instead of the whole pond. Pellet ids are creation-ordered.
class PelletField {
public:
    PelletField(int width, int height);

    int add(Coord pos);        // returns the new pellet id
    void consume(int pellet_id);  // throws if already dead

    bool alive(int pellet_id) const { return pellets_[static_cast<std::size_t>(pellet_id)].alive; }
    Coord position(int pellet_id) const {
        return pellets_[static_cast<std::size_t>(pellet_id)].pos;
    }
    const std::vector<int>& ids_in_cell(Coord c) const {
        return cells_[static_cast<std::size_t>(c.row) * width_ + c.col];
    }

    int width() const { return width_; }
    int height() const { return height_; }
    int live_count() const { return live_count_; }
    int total_dropped() const { return static_cast<int>(pellets_.size()); }
    int total_consumed() const { return total_dropped() - live_count_; }

    std::vector<int> live_ids() const;

private:
    int width_, height_;
    std::vector<FeedPellet> pellets_;
    std::vector<std::vector<int>> cells_;
    int live_count_ = 0;
};

// One text frame: '.', 'g', 'y', 'r' for the quality grades, '*' where a
// live pellet sits, 'S' where an agent sits (agents win over pellets).
std::string render_frame(const HabitatGrid& grid, const PelletField& pellets,
                         const std::vector<Coord>& agent_positions);

}  // namespace aquasim
