#include "elid/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elid {

namespace {

// Pairwise (recursive halving) sum: deterministic and far more accurate than
// sequential accumulation on long column runs.
double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double sector_score_at(const RoadGeometry& road, double x) {
    for (std::size_t a = 0; a < road.sector_end.size(); ++a) {
        if (x <= road.sector_end[a]) return road.sector_score[a];
    }
    return road.sector_score.back();
}

double covered_width_at(double x, std::span<const CoverageFootprint> fps,
                        std::span<const Placement> placements,
                        const RoadGeometry& road) {
    double best = 0.0;
    for (std::size_t m = 0; m < fps.size(); ++m) {
        if (!placements[m].placed) continue;
        if (fps[m].x_start <= x && x <= fps[m].x_end) {
            best = std::max(best, std::min(fps[m].l_width, road.width()));
        }
    }
    return best;
}

}  // namespace

double raster_coverage(std::span<const CoverageFootprint> fps,
                       std::span<const Placement> placements,
                       const RoadGeometry& road, double eta,
                       const RasterConfig& raster) {
    if (!(raster.resolution > 0.0)) {
        throw std::invalid_argument("raster_coverage: resolution must be positive");
    }
    const auto columns =
        static_cast<std::size_t>(std::ceil(road.d_road / raster.resolution));
    std::vector<double> contributions;
    contributions.reserve(columns);

    for (std::size_t i = 0; i < columns; ++i) {
        const double lo = static_cast<double>(i) * raster.resolution;
        const double col_width = std::min(raster.resolution, road.d_road - lo);
        const double x = lo + col_width / 2.0;
        const double score = sector_score_at(road, x);
        const double band = covered_width_at(x, fps, placements, road);

        if (!raster.full_grid) {
            contributions.push_back(band * score * col_width);
            continue;
        }
        // Lateral rasterization: rows across the road, covered while the row
        // center sits within the band anchored at the near edge.
        const auto rows =
            static_cast<std::size_t>(std::ceil(road.width() / raster.resolution));
        double covered = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            const double row_lo = static_cast<double>(r) * raster.resolution;
            const double row_width = std::min(raster.resolution, road.width() - row_lo);
            const double y_offset = row_lo + row_width / 2.0;
            if (y_offset <= band) covered += row_width;
        }
        contributions.push_back(covered * score * col_width);
    }

    const double total = pairwise_sum(contributions);
    return total / (eta * road.width() * road.d_road);
}

namespace {

std::vector<double> axis_values(double lo, double hi, double step) {
    std::vector<double> values;
    const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    values.reserve(static_cast<std::size_t>(count) + 1);
    for (long long i = 0; i <= count; ++i) values.push_back(lo + static_cast<double>(i) * step);
    return values;
}

}  // namespace

GridSearchResult grid_search(const ScenarioConfig& config, double x_step, double z_step) {
    config.validate();
    if (config.num_elids > 2) {
        throw std::invalid_argument("grid_search: at most 2 candidate units supported");
    }
    if (!(x_step > 0.0) || !(z_step > 0.0)) {
        throw std::invalid_argument("grid_search: steps must be positive");
    }

    const std::vector<double> xs = axis_values(0.0, config.road.d_road, x_step);
    const std::vector<double> zs = axis_values(config.road.z_min, config.road.z_max, z_step);

    // Candidate list per unit: one canonical unplaced entry, then every
    // placed (x, z) grid point.
    std::vector<Placement> candidates;
    candidates.push_back({0.0, config.road.z_min, false});
    for (double x : xs) {
        for (double z : zs) candidates.push_back({x, z, true});
    }

    double combos = 1.0;
    for (int m = 0; m < config.num_elids; ++m) combos *= static_cast<double>(candidates.size());
    if (combos > 1e6) {
        throw std::invalid_argument("grid_search: grid exceeds 1e6 combinations");
    }

    GridSearchResult result;
    std::vector<Placement> assignment(config.num_elids, candidates.front());
    bool have_best = false;

    std::vector<std::size_t> idx(config.num_elids, 0);
    while (true) {
        for (int m = 0; m < config.num_elids; ++m) assignment[m] = candidates[idx[m]];
        const FitnessBreakdown fb = fitness(assignment, config);
        ++result.combinations_evaluated;
        if (!have_best || fb.fitness < result.best.fitness) {
            result.best = fb;
            result.best_placements = assignment;
            have_best = true;
        }
        // Odometer increment over the per-unit candidate indices.
        int m = config.num_elids - 1;
        while (m >= 0) {
            if (++idx[m] < candidates.size()) break;
            idx[m] = 0;
            --m;
        }
        if (m < 0) break;
    }
    return result;
}

}  // namespace elid
