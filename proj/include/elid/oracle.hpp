#pragma once

#include <span>
#include <vector>

#include "elid/objective.hpp"
#include "elid/scenario.hpp"

namespace elid {

/// Rasterization settings for the brute-force coverage evaluator.
struct RasterConfig {
    double resolution = 0.05;  // grid cell edge [m]
    /// When false, only the road axis is discretized and the covered width
    /// of each column is handled analytically (the band depth is constant
    /// along the road for a given unit). When true, the lateral axis is
    /// rasterized too, auditing the width logic itself.
    bool full_grid = false;
};

/// Brute-force effective coverage: midpoint-sampled columns along the road,
/// summed pairwise for a bit-stable total. Independent of the analytic
/// partition path; agreement within 1e-3 absolute at 0.05 m resolution is
/// the contract.
double raster_coverage(std::span<const CoverageFootprint> fps,
                       std::span<const Placement> placements,
                       const RoadGeometry& road, double eta,
                       const RasterConfig& raster);

struct GridSearchResult {
    std::vector<Placement> best_placements;
    FitnessBreakdown best;
    long long combinations_evaluated = 0;
};

/// Exhaustive fitness minimization over the Cartesian (x, z, placed) grid,
/// for small instances only (at most 2 candidate units and 10^6
/// combinations; throws std::invalid_argument beyond that). Unplaced
/// candidates are enumerated once at a canonical position since fitness
/// does not depend on the coordinates of an unplaced unit. Deterministic:
/// ties keep the first minimizer in enumeration order.
GridSearchResult grid_search(const ScenarioConfig& config, double x_step,
                             double z_step);

}  // namespace elid
