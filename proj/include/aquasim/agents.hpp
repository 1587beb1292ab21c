#pragma once

#include <optional>

#include "aquasim/genome.hpp"
#include "aquasim/habitat.hpp"

namespace aquasim {

enum class MoveMode { Exploratory, Hunting };

struct ShrimpAgent {
    int id = 0;
    Coord pos;
    Chromosome chromosome;
    int feed_count = 0;  // pellets eaten since the last gram gained
    StateLabel state = StateLabel::Normal;
    MoveMode mode = MoveMode::Exploratory;
};

struct EffectiveCaps {
    int displacement = 1;
    double smell_radius = 0.0;
};

// Stress model: Normal keeps full capability, Tolerable halves it, Bad
// quarters it. Displacement is floored at 1 so agents never freeze.
EffectiveCaps apply_state(StateLabel state, int displacement_base, double smell_base);

// Nearest live pellet within the smell radius (Euclidean distance between
// cell coordinates); ties break toward the lowest pellet id. Scans only
// the cells the radius can reach.
std::optional<int> sense_food(Coord agent_pos, double smell_radius,
                              const PelletField& pellets);

// One hunting move: up to `displacement` steps, each adjusting both
// coordinates one cell toward the target (diagonal closing allowed),
// stopping on arrival. The environment is ignored while hunting.
Coord hunt_step(Coord pos, Coord target, int displacement);

// One exploratory move: `displacement` unit steps, each drawn uniformly
// among the in-grid cardinal neighbors whose cell is not Bad; if every
// candidate is Bad, among all in-grid cardinal neighbors. Never diagonal.
Coord explore_step(Coord pos, const HabitatGrid& grid, int displacement, Rng& rng);

// Consumes the pellet under the agent: feed counter advances, every
// growth_pellets_per_gram pellets adds one gram up to the 38 g cap, and
// the agent returns to exploratory mode. Position mismatch or a dead
// pellet throws (internal consistency error).
void eat(ShrimpAgent& agent, int pellet_id, PelletField& pellets,
         int growth_pellets_per_gram);

}  // namespace aquasim
