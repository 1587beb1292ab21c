#include "aquasim/agents.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aquasim;

TEST_CASE("stress multipliers scale capabilities but never freeze an agent") {
    EffectiveCaps caps = apply_state(StateLabel::Normal, 1, 6.0);
    CHECK(caps.displacement == 1);
    CHECK(caps.smell_radius == 6.0);

    caps = apply_state(StateLabel::Tolerable, 1, 6.0);
    CHECK(caps.displacement == 1);  // floored
    CHECK(caps.smell_radius == 3.0);

    caps = apply_state(StateLabel::Bad, 2, 6.0);
    CHECK(caps.displacement == 1);
    CHECK(caps.smell_radius == 1.5);

    // stress never raises capability
    for (StateLabel s : {StateLabel::Normal, StateLabel::Tolerable, StateLabel::Bad}) {
        const EffectiveCaps c = apply_state(s, 3, 9.0);
        CHECK(c.displacement <= 3);
        CHECK(c.smell_radius <= 9.0);
    }
}

TEST_CASE("smell picks the closest pellet in range") {
    PelletField field(30, 30);

    SUBCASE("the 3-4-5 pellet is inside a radius of 6") {
        const int id = field.add({3, 4});
        const auto found = sense_food({0, 0}, 6.0, field);
        REQUIRE(found.has_value());
        CHECK(*found == id);
    }

    SUBCASE("a pellet on the agent cell beats everything") {
        field.add({1, 0});
        const int here = field.add({5, 5});
        field.add({6, 5});
        CHECK(*sense_food({5, 5}, 6.0, field) == here);
    }

    SUBCASE("out of range means no target") {
        field.add({7, 0});  // distance 7
        CHECK(!sense_food({0, 0}, 6.0, field).has_value());
    }

    SUBCASE("equidistant pellets resolve to the lowest id") {
        const int first = field.add({13, 14});   // both at distance 5 from (10,10)
        field.add({14, 13});
        CHECK(*sense_food({10, 10}, 6.0, field) == first);
    }

    SUBCASE("dead pellets are invisible") {
        const int id = field.add({2, 2});
        const int farther = field.add({4, 4});
        field.consume(id);
        CHECK(*sense_food({0, 0}, 6.0, field) == farther);
    }
}

TEST_CASE("smell agrees with the exhaustive-scan oracle") {
    Rng rng(2026);
    for (int instance = 0; instance < 2000; ++instance) {
        PelletField field(40, 40);
        const int n = static_cast<int>(rng.next_below(12));
        for (int i = 0; i < n; ++i)
            field.add({static_cast<int>(rng.next_below(40)),
                       static_cast<int>(rng.next_below(40))});
        // kill a few
        for (int i = 0; i < n / 3; ++i) {
            const auto live = field.live_ids();
            field.consume(live[rng.next_below(live.size())]);
        }
        const Coord agent{static_cast<int>(rng.next_below(40)),
                          static_cast<int>(rng.next_below(40))};
        const double radius = rng.next_double() * 9.0;
        CHECK(sense_food(agent, radius, field) == oracle::nearest_pellet(agent, radius, field));
    }
}

TEST_CASE("hunting closes both coordinates and stops at the target") {
    CHECK(hunt_step({2, 2}, {5, 2}, 1) == Coord{3, 2});
    CHECK(hunt_step({2, 2}, {4, 4}, 1) == Coord{3, 3});
    CHECK(hunt_step({7, 7}, {7, 7}, 3) == Coord{7, 7});
    CHECK(hunt_step({0, 0}, {2, 1}, 5) == Coord{2, 1});  // early stop on arrival

    // each step strictly shrinks the Chebyshev distance
    Coord pos{0, 0};
    const Coord target{9, 4};
    int previous = 9;
    while (!(pos == target)) {
        pos = hunt_step(pos, target, 1);
        const int chebyshev =
            std::max(std::abs(target.col - pos.col), std::abs(target.row - pos.row));
        CHECK(chebyshev < previous);
        previous = chebyshev;
    }
}

TEST_CASE("exploration is an unbiased cardinal walk on clean water") {
    HabitatGrid grid(11, 11);
    grid.recompute_quality({}, {2, 5, 9});

    Rng rng(31);
    std::array<int, 4> counts{};  // E, W, S, N
    const Coord start{5, 5};
    for (int draw = 0; draw < 12000; ++draw) {
        const Coord next = explore_step(start, grid, 1, rng);
        const int dx = next.col - start.col;
        const int dy = next.row - start.row;
        CHECK(std::abs(dx) + std::abs(dy) == 1);  // exactly one axis-aligned unit
        if (dx == 1) ++counts[0];
        if (dx == -1) ++counts[1];
        if (dy == 1) ++counts[2];
        if (dy == -1) ++counts[3];
    }
    for (int c : counts) CHECK(std::abs(c - 3000) < 4 * 47.4);  // 4 sigma
}

TEST_CASE("exploration avoids bad water when it can") {
    HabitatGrid grid(11, 11);
    std::vector<Coord> crowd(12, Coord{8, 5});  // makes (6,5) bad, the rest near (5,5) good
    grid.recompute_quality(crowd, {2, 5, 9});
    REQUIRE(grid.quality_at({6, 5}) == QualityLevel::Bad);
    REQUIRE(grid.quality_at({4, 5}) == QualityLevel::Good);
    REQUIRE(grid.quality_at({5, 4}) == QualityLevel::Good);
    REQUIRE(grid.quality_at({5, 6}) == QualityLevel::Good);

    Rng rng(33);
    std::array<int, 4> counts{};
    for (int draw = 0; draw < 12000; ++draw) {
        const Coord next = explore_step({5, 5}, grid, 1, rng);
        if (next == Coord{6, 5}) ++counts[0];
        if (next == Coord{4, 5}) ++counts[1];
        if (next == Coord{5, 6}) ++counts[2];
        if (next == Coord{5, 4}) ++counts[3];
    }
    CHECK(counts[0] == 0);
    for (int i : {1, 2, 3})
        CHECK(std::abs(counts[static_cast<std::size_t>(i)] - 4000) < 4 * 51.6);
}

TEST_CASE("exploration respects the pond walls") {
    HabitatGrid grid(11, 11);
    grid.recompute_quality({}, {2, 5, 9});
    Rng rng(35);
    for (int draw = 0; draw < 500; ++draw) {
        const Coord next = explore_step({0, 0}, grid, 1, rng);
        CHECK(grid.in_bounds(next));
        CHECK((next == Coord{1, 0} || next == Coord{0, 1}));
    }
}

TEST_CASE("when everything around is bad the agent still moves") {
    HabitatGrid grid(5, 5);
    std::vector<Coord> crowd(12, Coord{2, 2});  // radius-2 blankets the whole 5x5 pond
    grid.recompute_quality(crowd, {2, 5, 9});
    Rng rng(37);
    const Coord next = explore_step({2, 2}, grid, 1, rng);
    CHECK(std::abs(next.col - 2) + std::abs(next.row - 2) == 1);
}

TEST_CASE("eating removes the pellet and advances growth") {
    PelletField field(10, 10);
    const TuningDefaults tuning;

    ShrimpAgent agent;
    agent.pos = {4, 4};
    agent.feed_count = 2;
    agent.chromosome.size_grams = 10;
    agent.mode = MoveMode::Hunting;

    const int id = field.add({4, 4});
    eat(agent, id, field, tuning.growth_pellets_per_gram);
    CHECK(agent.feed_count == 0);
    CHECK(agent.chromosome.size_grams == 11);
    CHECK(agent.mode == MoveMode::Exploratory);
    CHECK(field.live_count() == 0);
    CHECK_THROWS_AS(eat(agent, id, field, tuning.growth_pellets_per_gram), std::logic_error);

    // growth caps at 38 grams
    agent.chromosome.size_grams = 38;
    agent.feed_count = 2;
    const int id2 = field.add({4, 4});
    eat(agent, id2, field, tuning.growth_pellets_per_gram);
    CHECK(agent.chromosome.size_grams == 38);

    // eating from a distance is an internal error
    const int id3 = field.add({9, 9});
    CHECK_THROWS_AS(eat(agent, id3, field, tuning.growth_pellets_per_gram), std::logic_error);
}
