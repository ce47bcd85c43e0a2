#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "elid/objective.hpp"
#include "elid/rng.hpp"
#include "elid/scenario.hpp"

using namespace elid;

namespace {

CoverageFootprint extent(double x_start, double x_end, double l_width) {
    CoverageFootprint fp;
    fp.x_start = x_start;
    fp.x_end = x_end;
    fp.l_width = l_width;
    return fp;
}

std::vector<Placement> random_placements(const ScenarioConfig& config, UniformStream& rng,
                                         int count) {
    std::vector<Placement> out;
    for (int m = 0; m < count; ++m) {
        out.push_back({rng.next_in(0.0, config.road.d_road),
                       rng.next_in(config.road.z_min, config.road.z_max),
                       rng.next() < 0.5});
    }
    return out;
}

}  // namespace

TEST_CASE("points_of_interest collects road ends and clipped extents") {
    SUBCASE("no units") {
        const std::vector<CoverageFootprint> fps;
        CHECK(points_of_interest(fps, 1000.0) == std::vector<double>{0.0, 1000.0});
    }
    SUBCASE("single unit") {
        const std::vector<CoverageFootprint> fps{extent(100.0, 300.0, 10.0)};
        CHECK(points_of_interest(fps, 1000.0) ==
              std::vector<double>{0.0, 100.0, 300.0, 1000.0});
    }
    SUBCASE("two overlapping units") {
        const std::vector<CoverageFootprint> fps{extent(100.0, 300.0, 10.0),
                                                 extent(250.0, 500.0, 10.0)};
        CHECK(points_of_interest(fps, 1000.0) ==
              std::vector<double>{0.0, 100.0, 250.0, 300.0, 500.0, 1000.0});
    }
    SUBCASE("size is always 2M + 2, duplicates retained") {
        const std::vector<CoverageFootprint> fps{extent(100.0, 300.0, 10.0),
                                                 extent(100.0, 300.0, 10.0)};
        CHECK(points_of_interest(fps, 1000.0).size() == 6);
    }
}

TEST_CASE("cell_width takes the best covering unit, capped at the road width") {
    RoadGeometry road;
    road.y_min = 5.0;
    road.y_max = 20.0;

    const std::vector<CoverageFootprint> fps{extent(0.0, 200.0, 41.2),
                                             extent(50.0, 400.0, 12.0)};
    SUBCASE("no covering unit") {
        const std::vector<Placement> off{{0, 15, false}, {0, 15, false}};
        CHECK(cell_width(60.0, 120.0, fps, off, road) == 0.0);
    }
    SUBCASE("single covering unit capped at the road width") {
        const std::vector<Placement> one{{0, 15, true}, {0, 15, false}};
        CHECK(cell_width(60.0, 120.0, fps, one, road) == 15.0);
    }
    SUBCASE("max over covering units") {
        const std::vector<Placement> both{{0, 15, true}, {0, 15, true}};
        CHECK(cell_width(60.0, 120.0, fps, both, road) == 15.0);
        // only the second unit contains [250, 300]
        CHECK(cell_width(250.0, 300.0, fps, both, road) == 12.0);
    }
    SUBCASE("containment is closed on both ends") {
        const std::vector<Placement> both{{0, 15, true}, {0, 15, true}};
        CHECK(cell_width(0.0, 200.0, fps, both, road) == 15.0);
        CHECK(cell_width(50.0, 400.0, fps, both, road) == 12.0);
    }
}

TEST_CASE("cell_relevance averages sector scores by overlap length") {
    RoadGeometry road;
    road.d_road = 1000.0;
    road.sector_end = {60.0, 150.0, 300.0, 700.0, 860.0, 940.0, 1000.0};
    road.sector_score = {1.0, 0.9, 0.8, 0.77, 0.8, 0.9, 1.0};

    CHECK(cell_relevance(300.0, 700.0, road) == doctest::Approx(0.77).epsilon(1e-15));
    CHECK(cell_relevance(400.0, 500.0, road) == doctest::Approx(0.77).epsilon(1e-15));
    CHECK(cell_relevance(0.0, 100.0, road) == doctest::Approx(0.96).epsilon(1e-12));
    CHECK(cell_relevance(250.0, 250.0, road) == 0.0);
}

namespace {

ScenarioConfig bench_config() {
    ScenarioConfig config = default_scenario();
    config.swarm.num_particles = 10;
    config.swarm.t_max = 10;
    return config;
}

}  // namespace

TEST_CASE("effective_coverage: nothing placed covers nothing") {
    const ScenarioConfig config = bench_config();
    std::vector<Placement> placements{{100.0, 30.0, false}, {600.0, 40.0, false}};
    const auto fps = footprints(config.lidar, config.road, placements, config.width_rule);
    CHECK(effective_coverage(fps, placements, config.road, config.eta) == 0.0);
}

TEST_CASE("effective_coverage: full coverage hits the sector-weighted mean") {
    const ScenarioConfig config = bench_config();
    // Four units at 40 m span the kilometer completely (extent ~279 m each).
    std::vector<Placement> placements;
    for (double x : {125.0, 375.0, 625.0, 875.0}) placements.push_back({x, 40.0, true});
    const auto fps = footprints(config.lidar, config.road, placements, config.width_rule);
    CHECK(effective_coverage(fps, placements, config.road, config.eta) ==
          doctest::Approx(0.829).epsilon(1e-9));
}

TEST_CASE("effective_coverage: uniform relevance and full cover give exactly one") {
    ScenarioConfig config = bench_config();
    config.road.sector_end = {config.road.d_road};
    config.road.sector_score = {1.0};
    std::vector<Placement> placements;
    for (double x : {125.0, 375.0, 625.0, 875.0}) placements.push_back({x, 40.0, true});
    const auto fps = footprints(config.lidar, config.road, placements, config.width_rule);
    CHECK(effective_coverage(fps, placements, config.road, config.eta) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partition spans the whole road for any placement set") {
    const ScenarioConfig config = bench_config();
    UniformStream rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const int m_count = 1 + static_cast<int>(rng.next() * 20.0);
        const auto placements = random_placements(config, rng, m_count);
        const auto fps = footprints(config.lidar, config.road, placements, config.width_rule);
        const auto cells = partition(fps, placements, config.road);
        CHECK(cells.size() == 2 * placements.size() + 1);
        double total = 0.0;
        for (const PartitionCell& cell : cells) {
            CHECK(cell.lo <= cell.hi);
            CHECK(cell.gamma >= 0.0);
            CHECK(cell.gamma <= 1.0);
            CHECK(cell.width <= config.road.width());
            total += cell.hi - cell.lo;
        }
        CHECK(total == doctest::Approx(config.road.d_road).epsilon(1e-9));
    }
}

TEST_CASE("a redundant unit inside an existing extent changes nothing") {
    const ScenarioConfig config = bench_config();
    std::vector<Placement> placements{{400.0, 45.0, true}};
    auto fps = footprints(config.lidar, config.road, placements, config.width_rule);
    const double before = effective_coverage(fps, placements, config.road, config.eta);

    // Lower mount at the same spot: smaller extent and smaller width, both
    // nested inside the first unit's coverage.
    placements.push_back({400.0, 20.0, true});
    fps = footprints(config.lidar, config.road, placements, config.width_rule);
    REQUIRE(fps[1].x_start >= fps[0].x_start);
    REQUIRE(fps[1].x_end <= fps[0].x_end);
    REQUIRE(std::min(fps[1].l_width, config.road.width()) <=
            std::min(fps[0].l_width, config.road.width()));
    const double after = effective_coverage(fps, placements, config.road, config.eta);
    CHECK(after == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("placing one more unit never decreases coverage") {
    const ScenarioConfig config = bench_config();
    UniformStream rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        auto placements = random_placements(config, rng, 6);
        const std::size_t flip = static_cast<std::size_t>(rng.next() * 6.0);
        placements[flip].placed = false;
        auto fps = footprints(config.lidar, config.road, placements, config.width_rule);
        const double before = effective_coverage(fps, placements, config.road, config.eta);
        placements[flip].placed = true;
        fps = footprints(config.lidar, config.road, placements, config.width_rule);
        const double after = effective_coverage(fps, placements, config.road, config.eta);
        CHECK(after >= before - 1e-12);
    }
}

TEST_CASE("coverage stays within its analytic bounds") {
    ScenarioConfig config = bench_config();
    config.eta = 0.8;
    const double max_score =
        *std::max_element(config.road.sector_score.begin(), config.road.sector_score.end());
    UniformStream rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto placements = random_placements(config, rng, 8);
        const auto fps = footprints(config.lidar, config.road, placements, config.width_rule);
        const double cov = effective_coverage(fps, placements, config.road, config.eta);
        CHECK(cov >= 0.0);
        CHECK(cov <= max_score / config.eta + 1e-12);
    }
}

TEST_CASE("constraint penalties: feasible, single excess, doubled throughput") {
    std::vector<Placement> placements{{100, 20, true}};

    SUBCASE("all slack yields zero penalty") {
        std::vector<DataEnergyProfile> prof{{1e6, 5.0}};
        const ConstraintReport r = constraint_penalties(placements, prof, 1e9, 20.0, 1.0);
        CHECK(r.total_penalty == 0.0);
        CHECK(r.feasible);
    }
    SUBCASE("energy excess of one half squares to a quarter") {
        std::vector<DataEnergyProfile> prof{{0.0, 30.0}};
        const ConstraintReport r = constraint_penalties(placements, prof, 1e9, 20.0, 1.0);
        CHECK(r.energy_excess[0] == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(r.total_penalty == doctest::Approx(0.25).epsilon(1e-15));
        CHECK_FALSE(r.feasible);
    }
    SUBCASE("data at twice the cap gives unit throughput penalty") {
        std::vector<DataEnergyProfile> prof{{2e9, 0.0}};
        const ConstraintReport r = constraint_penalties(placements, prof, 1e9, 20.0, 1.0);
        CHECK(r.throughput_excess == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(r.total_penalty == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("unplaced units do not count") {
        placements[0].placed = false;
        std::vector<DataEnergyProfile> prof{{5e9, 100.0}};
        const ConstraintReport r = constraint_penalties(placements, prof, 1e9, 20.0, 1.0);
        CHECK(r.total_penalty == 0.0);
        CHECK(r.feasible);
    }
    SUBCASE("zero limits forbid any generated load") {
        std::vector<DataEnergyProfile> prof{{1.0, 1.0}};
        const ConstraintReport r = constraint_penalties(placements, prof, 0.0, 0.0, 1.0);
        CHECK_FALSE(r.feasible);
        CHECK(std::isinf(r.total_penalty));
    }
}

TEST_CASE("fitness assembles its terms and flags feasibility") {
    const ScenarioConfig config = bench_config();

    SUBCASE("empty placement is worth exactly zero") {
        std::vector<Placement> placements(4, Placement{500.0, 30.0, false});
        const FitnessBreakdown fb = fitness(placements, config);
        CHECK(fb.coverage == 0.0);
        CHECK(fb.lamp_count_penalty == 0.0);
        CHECK(fb.constraint_penalty == 0.0);
        CHECK(fb.fitness == 0.0);
        CHECK(fb.feasible);
    }
    SUBCASE("single placed unit pays one lambda") {
        std::vector<Placement> placements{{500.0, 30.0, true}};
        const FitnessBreakdown fb = fitness(placements, config);
        CHECK(fb.lamp_count_penalty == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(fb.fitness ==
              -fb.coverage + fb.lamp_count_penalty + fb.constraint_penalty);
        CHECK(fb.feasible);  // Table I limits are generous at depth 5
        CHECK(fb.constraint_penalty == 0.0);
    }
    SUBCASE("coverage of an isolated unit equals its clipped extent share") {
        ScenarioConfig uniform = config;
        uniform.road.sector_end = {uniform.road.d_road};
        uniform.road.sector_score = {1.0};
        std::vector<Placement> placements{{500.0, 30.0, true}};
        const auto fps =
            footprints(uniform.lidar, uniform.road, placements, uniform.width_rule);
        const double expected =
            (fps[0].x_end - fps[0].x_start) / uniform.road.d_road;
        const FitnessBreakdown fb = fitness(placements, uniform);
        CHECK(fb.coverage == doctest::Approx(expected).epsilon(1e-12));
        CHECK(fb.fitness == doctest::Approx(-expected + 0.25).epsilon(1e-12));
    }
}

TEST_CASE("fitness is invariant under unit index permutation") {
    const ScenarioConfig config = bench_config();
    UniformStream rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        auto placements = random_placements(config, rng, 7);
        const FitnessBreakdown a = fitness(placements, config);
        std::rotate(placements.begin(), placements.begin() + 3, placements.end());
        std::swap(placements[0], placements[4]);
        const FitnessBreakdown b = fitness(placements, config);
        CHECK(b.fitness == doctest::Approx(a.fitness).epsilon(1e-12));
        CHECK(b.coverage == doctest::Approx(a.coverage).epsilon(1e-12));
        CHECK(b.feasible == a.feasible);
    }
}
