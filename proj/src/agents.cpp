#include "aquasim/agents.hpp"

#include <cmath>
#include <stdexcept>

namespace aquasim {

namespace {

constexpr Coord kCardinals[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

int sign(int v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

}  // namespace

EffectiveCaps apply_state(StateLabel state, int displacement_base, double smell_base) {
    double multiplier = 1.0;
    if (state == StateLabel::Tolerable) multiplier = 0.5;
    if (state == StateLabel::Bad) multiplier = 0.25;

    EffectiveCaps caps;
    caps.displacement =
        std::max(1, static_cast<int>(std::floor(displacement_base * multiplier)));
    caps.smell_radius = smell_base * multiplier;
    return caps;
}

std::optional<int> sense_food(Coord agent_pos, double smell_radius,
                              const PelletField& pellets) {
    if (smell_radius < 0.0) return std::nullopt;

    const int reach = static_cast<int>(std::floor(smell_radius));
    const double radius_sq = smell_radius * smell_radius;

    const int col_lo = std::max(0, agent_pos.col - reach);
    const int col_hi = std::min(pellets.width() - 1, agent_pos.col + reach);
    const int row_lo = std::max(0, agent_pos.row - reach);
    const int row_hi = std::min(pellets.height() - 1, agent_pos.row + reach);

    long best_d2 = -1;
    int best_id = -1;
    for (int row = row_lo; row <= row_hi; ++row) {
        for (int col = col_lo; col <= col_hi; ++col) {
            const long dx = col - agent_pos.col;
            const long dy = row - agent_pos.row;
            const long d2 = dx * dx + dy * dy;
            if (static_cast<double>(d2) > radius_sq) continue;
            for (int id : pellets.ids_in_cell({col, row})) {
                if (best_id < 0 || d2 < best_d2 || (d2 == best_d2 && id < best_id)) {
                    best_d2 = d2;
                    best_id = id;
                }
            }
        }
    }
    if (best_id < 0) return std::nullopt;
    return best_id;
}

Coord hunt_step(Coord pos, Coord target, int displacement) {
    for (int step = 0; step < displacement; ++step) {
        if (pos == target) break;
        pos.col += sign(target.col - pos.col);
        pos.row += sign(target.row - pos.row);
    }
    return pos;
}

Coord explore_step(Coord pos, const HabitatGrid& grid, int displacement, Rng& rng) {
    for (int step = 0; step < displacement; ++step) {
        Coord in_grid[4];
        Coord not_bad[4];
        int n_in_grid = 0;
        int n_not_bad = 0;
        for (const Coord& dir : kCardinals) {
            const Coord next{pos.col + dir.col, pos.row + dir.row};
            if (!grid.in_bounds(next)) continue;
            in_grid[n_in_grid++] = next;
            if (grid.quality_at(next) != QualityLevel::Bad) not_bad[n_not_bad++] = next;
        }
        if (n_in_grid == 0) break;  // 1x1 grid
        if (n_not_bad > 0)
            pos = not_bad[rng.next_below(static_cast<std::uint64_t>(n_not_bad))];
        else
            pos = in_grid[rng.next_below(static_cast<std::uint64_t>(n_in_grid))];
    }
    return pos;
}

void eat(ShrimpAgent& agent, int pellet_id, PelletField& pellets,
         int growth_pellets_per_gram) {
    if (!pellets.alive(pellet_id))
        throw std::logic_error("eat: pellet is already gone");
    if (!(pellets.position(pellet_id) == agent.pos))
        throw std::logic_error("eat: agent is not on the pellet cell");

    pellets.consume(pellet_id);
    ++agent.feed_count;
    if (agent.feed_count >= growth_pellets_per_gram) {
        agent.feed_count = 0;
        agent.chromosome.size_grams =
            std::min(kMaxSizeGrams, agent.chromosome.size_grams + 1);
    }
    agent.mode = MoveMode::Exploratory;
}

}  // namespace aquasim
