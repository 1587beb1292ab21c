#include "aquasim/genome.hpp"

#include <algorithm>
#include <stdexcept>

namespace aquasim {

namespace {

Range mutate_pair(Range pair, const ParamUniverse& universe, double sigma_scale, Rng& rng) {
    const double sigma = sigma_scale * (universe.opt_hi - universe.opt_lo);
    double lo = pair.lo + rng.next_normal(0.0, sigma);
    double hi = pair.hi + rng.next_normal(0.0, sigma);
    lo = std::clamp(lo, universe.lo, universe.hi);
    hi = std::clamp(hi, universe.lo, universe.hi);
    if (lo > hi) std::swap(lo, hi);
    return {lo, hi};
}

}  // namespace

double fitness(const Chromosome& c) {
    return c.o2.width() + c.ph.width() + c.temp.width() + c.displacement + c.smell +
           c.size_grams;
}

bool operator==(const Chromosome& a, const Chromosome& b) {
    return a.o2.lo == b.o2.lo && a.o2.hi == b.o2.hi && a.ph.lo == b.ph.lo &&
           a.ph.hi == b.ph.hi && a.temp.lo == b.temp.lo && a.temp.hi == b.temp.hi &&
           a.displacement == b.displacement && a.smell == b.smell &&
           a.size_grams == b.size_grams;
}

std::vector<Chromosome> spawn_initial_population(int n, const TuningDefaults& tuning) {
    if (n < 1) throw std::invalid_argument("population size must be >= 1");
    Chromosome seed;
    seed.o2 = {kOxygenUniverse.opt_lo, kOxygenUniverse.opt_hi};
    seed.ph = {kPhUniverse.opt_lo, kPhUniverse.opt_hi};
    seed.temp = {kTemperatureUniverse.opt_lo, kTemperatureUniverse.opt_hi};
    seed.displacement = tuning.displacement_base;
    seed.smell = tuning.smell_radius_base;
    seed.size_grams = kInitialSizeGrams;
    return std::vector<Chromosome>(static_cast<std::size_t>(n), seed);
}

std::vector<Chromosome> tournament_select(const std::vector<Chromosome>& pop, int k,
                                          int parent_count, Rng& rng) {
    if (pop.empty()) throw std::invalid_argument("empty population");
    if (k < 1) throw std::invalid_argument("tournament size must be >= 1");

    std::vector<Chromosome> parents;
    parents.reserve(static_cast<std::size_t>(parent_count));
    for (int t = 0; t < parent_count; ++t) {
        std::size_t best_index = pop.size();
        double best_fitness = -1.0;
        for (int draw = 0; draw < k; ++draw) {
            const std::size_t i = rng.next_below(pop.size());
            const double f = fitness(pop[i]);
            if (f > best_fitness || (f == best_fitness && i < best_index)) {
                best_fitness = f;
                best_index = i;
            }
        }
        parents.push_back(pop[best_index]);
    }
    return parents;
}

Chromosome crossover(const Chromosome& a, const Chromosome& b, const TuningDefaults& tuning,
                     Rng& rng) {
    Chromosome child;
    child.o2 = rng.next_bool() ? a.o2 : b.o2;
    child.ph = rng.next_bool() ? a.ph : b.ph;
    child.temp = rng.next_bool() ? a.temp : b.temp;

    // new cohort: acquired properties start over
    child.displacement = tuning.displacement_base;
    child.smell = tuning.smell_radius_base;
    child.size_grams = kInitialSizeGrams;

    if (tuning.mutation_sigma > 0.0) {
        child.o2 = mutate_pair(child.o2, kOxygenUniverse, tuning.mutation_sigma, rng);
        child.ph = mutate_pair(child.ph, kPhUniverse, tuning.mutation_sigma, rng);
        child.temp = mutate_pair(child.temp, kTemperatureUniverse, tuning.mutation_sigma, rng);
    }
    return child;
}

bool chromosome_valid(const Chromosome& c) {
    auto pair_ok = [](const Range& r, const ParamUniverse& u) {
        return r.lo <= r.hi && r.lo >= u.lo && r.hi <= u.hi;
    };
    return pair_ok(c.o2, kOxygenUniverse) && pair_ok(c.ph, kPhUniverse) &&
           pair_ok(c.temp, kTemperatureUniverse) && c.size_grams >= kInitialSizeGrams &&
           c.size_grams <= kMaxSizeGrams && c.displacement >= 1 && c.smell >= 0.0;
}

}  // namespace aquasim
