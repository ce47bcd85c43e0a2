#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "elid/oracle.hpp"
#include "elid/solver.hpp"

using namespace elid;

namespace {

ScenarioConfig small_config() {
    ScenarioConfig config = default_scenario();
    config.road.d_road = 300.0;
    config.road.sector_end = {300.0};
    config.road.sector_score = {1.0};
    config.road.z_max = 40.0;
    config.num_elids = 1;
    config.lambda = 0.0;
    config.lidar.theta = 60.0 * std::numbers::pi / 180.0;
    return config;
}

SwarmConfig tame_swarm(int particles, int t_max, std::uint64_t seed) {
    SwarmConfig swarm;
    swarm.num_particles = particles;
    swarm.t_max = t_max;
    swarm.alpha = 0.7;
    swarm.beta_p = 1.5;
    swarm.beta_g = 1.5;
    swarm.xi = 1e-7;
    swarm.seed = seed;
    return swarm;
}

}  // namespace

TEST_CASE("update_velocity matches the update rule") {
    SwarmConfig swarm;
    swarm.alpha = 1.0;
    swarm.beta_p = 2.0;
    swarm.beta_g = 2.0;

    CHECK(update_velocity(0.0, 3.0, 3.0, 3.0, swarm, 0.7, 0.4) == 0.0);
    CHECK(update_velocity(0.0, 0.0, 1.0, 2.0, swarm, 0.5, 0.5) == 3.0);

    swarm.alpha = 0.5;
    swarm.beta_p = 0.0;
    swarm.beta_g = 0.0;
    CHECK(update_velocity(4.0, 10.0, -5.0, 7.0, swarm, 0.9, 0.1) == 2.0);
}

TEST_CASE("update_velocity honors the clamp") {
    SwarmConfig swarm;
    swarm.alpha = 1.0;
    swarm.beta_p = 2.0;
    swarm.beta_g = 2.0;
    swarm.velocity_clamp = 1.0;
    CHECK(update_velocity(0.0, 0.0, 1.0, 2.0, swarm, 0.5, 0.5) == 1.0);
    CHECK(update_velocity(0.0, 0.0, -1.0, -2.0, swarm, 0.5, 0.5) == -1.0);
}

TEST_CASE("pure inertia below one decays any velocity under tolerance") {
    SwarmConfig swarm;
    swarm.alpha = 0.5;
    swarm.beta_p = 0.0;
    swarm.beta_g = 0.0;
    double v = 64.0;
    const double tol = 1e-6;
    const int needed = static_cast<int>(
        std::ceil(std::log(tol / std::abs(v)) / std::log(swarm.alpha)));
    for (int i = 0; i < needed; ++i) v = update_velocity(v, 0.0, 0.0, 0.0, swarm, 0.5, 0.5);
    CHECK(std::abs(v) < tol);
}

TEST_CASE("update_binary follows the logistic of the velocity") {
    CHECK(update_binary(0.0, 0.49) == true);   // sigma(0) = 0.5 exactly
    CHECK(update_binary(0.0, 0.51) == false);
    CHECK(update_binary(20.0, 0.999) == true);   // sigma(20) = 1 - 2.06e-9
    CHECK(update_binary(-20.0, 1e-8) == false);  // sigma(-20) ~ 2.06e-9
    CHECK(update_binary(-20.0, 1e-10) == true);
}

TEST_CASE("solve rejects invalid configurations before iterating") {
    const ScenarioConfig config = small_config();
    SwarmConfig swarm = tame_swarm(10, 10, 1);
    swarm.num_particles = 0;
    CHECK_THROWS_AS(solve(config, swarm), ScenarioError);
    swarm = tame_swarm(10, 0, 1);
    CHECK_THROWS_AS(solve(config, swarm), ScenarioError);
    swarm = tame_swarm(10, 10, 1);
    swarm.velocity_clamp = -1.0;
    CHECK_THROWS_AS(solve(config, swarm), ScenarioError);
}

TEST_CASE("global best trace never increases") {
    const ScenarioConfig config = small_config();
    const SolveResult result = solve(config, tame_swarm(20, 60, 3));
    REQUIRE(result.trace.size() >= 2);
    for (std::size_t t = 1; t < result.trace.size(); ++t) {
        CHECK(result.trace[t].best_fitness <= result.trace[t - 1].best_fitness);
    }
    CHECK(result.best_fitness == result.trace.back().best_fitness);
}

TEST_CASE("identical seeds give bit-identical runs, any worker count") {
    ScenarioConfig config = small_config();
    config.num_elids = 4;
    const SwarmConfig swarm = tame_swarm(16, 40, 99);

    SwarmConfig two_threads = swarm;
    two_threads.num_threads = 2;
    SwarmConfig four_threads = swarm;
    four_threads.num_threads = 4;

    const SolveResult a = solve(config, swarm);
    const SolveResult b = solve(config, swarm);
    const SolveResult c = solve(config, two_threads);
    const SolveResult d = solve(config, four_threads);

    REQUIRE(a.trace.size() == b.trace.size());
    REQUIRE(a.trace.size() == c.trace.size());
    REQUIRE(a.trace.size() == d.trace.size());
    for (std::size_t t = 0; t < a.trace.size(); ++t) {
        CHECK(a.trace[t].best_fitness == b.trace[t].best_fitness);
        CHECK(a.trace[t].best_fitness == c.trace[t].best_fitness);
        CHECK(a.trace[t].best_fitness == d.trace[t].best_fitness);
    }
    for (std::size_t m = 0; m < a.best_placements.size(); ++m) {
        CHECK(a.best_placements[m].x == d.best_placements[m].x);
        CHECK(a.best_placements[m].z == d.best_placements[m].z);
        CHECK(a.best_placements[m].placed == d.best_placements[m].placed);
    }
}

TEST_CASE("different seeds explore differently") {
    const ScenarioConfig config = small_config();
    const SolveResult a = solve(config, tame_swarm(12, 25, 1));
    const SolveResult b = solve(config, tame_swarm(12, 25, 2));
    CHECK(a.best_placements[0].x != b.best_placements[0].x);
}

TEST_CASE("every particle respects the box bounds after every iteration") {
    ScenarioConfig config = small_config();
    config.num_elids = 3;
    bool checked = false;
    const IterationObserver observer = [&](int, std::span<const Particle> swarm) {
        for (const Particle& p : swarm) {
            for (const Placement& pl : p.position) {
                CHECK(pl.x >= 0.0);
                CHECK(pl.x <= config.road.d_road);
                CHECK(pl.z >= config.road.z_min);
                CHECK(pl.z <= config.road.z_max);
            }
        }
        checked = true;
    };
    solve(config, tame_swarm(10, 30, 7), observer);
    CHECK(checked);
}

TEST_CASE("infinite xi stalls out after exactly the stall window") {
    const ScenarioConfig config = small_config();
    SwarmConfig swarm = tame_swarm(1, 200, 5);
    swarm.xi = std::numeric_limits<double>::infinity();
    swarm.stall_window = 20;
    const SolveResult result = solve(config, swarm);
    CHECK(result.iterations_run == 20);
    CHECK(result.trace.size() == 21);
}

TEST_CASE("stall window defaults to a tenth of the iteration cap") {
    SwarmConfig swarm;
    swarm.t_max = 500;
    CHECK(swarm.effective_stall_window() == 50);
    swarm.t_max = 7;
    CHECK(swarm.effective_stall_window() == 1);
    swarm.stall_window = 3;
    CHECK(swarm.effective_stall_window() == 3);
}

TEST_CASE("feasible-best tracking never beats the global best") {
    const ScenarioConfig config = small_config();
    const SolveResult result = solve(config, tame_swarm(20, 60, 13));
    REQUIRE(result.has_feasible_best);
    CHECK(result.feasible_best_fitness >= result.best_fitness);
    if (result.feasible) {
        // a feasible global best is by definition the best feasible point
        CHECK(result.feasible_best_fitness == result.best_fitness);
        CHECK(result.feasible_best_coverage == result.best_coverage);
    }
    const FitnessBreakdown check = fitness(result.feasible_best_placements, config);
    CHECK(check.feasible);
    CHECK(check.fitness == result.feasible_best_fitness);
}

TEST_CASE("single-unit swarm lands within 5% of the grid optimum") {
    const ScenarioConfig config = small_config();
    const GridSearchResult grid = grid_search(config, 1.0, 0.5);
    const SolveResult pso = solve(config, tame_swarm(30, 150, 1));
    CHECK(pso.best_fitness <=
          grid.best.fitness + 0.05 * std::abs(grid.best.fitness));
    CHECK(pso.feasible);
}
