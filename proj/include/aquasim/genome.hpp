#pragma once

#include <vector>

#include "aquasim/config.hpp"
#include "aquasim/fuzzy.hpp"
#include "aquasim/rng.hpp"

namespace aquasim {

// Two segments: the heritable tolerance pairs (one (min,max) pair per
// physico-chemical parameter) and the acquired properties, which are never
// crossed over and are reset at birth.
struct Chromosome {
    Range o2{5.0, 12.0};
    Range ph{6.5, 8.5};
    Range temp{22.0, 30.0};
    int displacement = 4;  // cells per epoch
    double smell = 6.0;    // smell radius, cells
    int size_grams = kInitialSizeGrams;

    ToleranceOverrides tolerance_overrides() const {
        return ToleranceOverrides{o2, ph, temp};
    }
};

// Sum of the three tolerance widths plus the three properties.
double fitness(const Chromosome& c);

bool operator==(const Chromosome& a, const Chromosome& b);

// n identical chromosomes at the species optimal tolerances with default
// properties (the initial population is homogeneous). n < 1 throws.
std::vector<Chromosome> spawn_initial_population(int n, const TuningDefaults& tuning);

// Draws parent_count tournaments of k members (uniform with replacement)
// and returns each tournament's fittest member; ties break toward the
// lowest population index. Empty population throws.
std::vector<Chromosome> tournament_select(const std::vector<Chromosome>& pop, int k,
                                          int parent_count, Rng& rng);

// Each tolerance pair is taken whole from one parent by fair coin; pairs
// are never split, so min <= max survives crossover. Properties are not
// inherited: the offspring starts at the species defaults and 1 g. With
// mutation_sigma > 0 each bound then gets Gaussian noise scaled by the
// species optimal width, clamped to the universe and re-ordered.
Chromosome crossover(const Chromosome& a, const Chromosome& b, const TuningDefaults& tuning,
                     Rng& rng);

// min <= max for every pair, bounds inside the universes, size in [1,38].
bool chromosome_valid(const Chromosome& c);

}  // namespace aquasim
