#pragma once

#include <span>
#include <vector>

#include "elid/datamodel.hpp"
#include "elid/geometry.hpp"
#include "elid/scenario.hpp"

namespace elid {

/// One point-of-interest delimited sub-rectangle of the roadway.
struct PartitionCell {
    double lo = 0.0;     // lower roadway-axis bound [m]
    double hi = 0.0;     // upper roadway-axis bound [m]
    double width = 0.0;  // covered width [m], capped by the road width
    double gamma = 0.0;  // length-weighted relevance in [0, 1]
    double area = 0.0;   // (hi - lo) * width [m^2]
};

/// Constraint excesses h (feasible when h <= 0) and their penalty total.
struct ConstraintReport {
    double throughput_excess = -1.0;     // sum(eps*D)/B - 1, one global constraint
    std::vector<double> energy_excess;   // eps*E/E_limit - 1 per unit
    double total_penalty = 0.0;          // sum of rho * max(h, 0)^2
    bool feasible = true;                // total_penalty == 0
};

/// Scalar fitness and its components.
struct FitnessBreakdown {
    double coverage = 0.0;            // effective coverage ratio
    double lamp_count_penalty = 0.0;  // lambda * number of placed units
    double constraint_penalty = 0.0;  // exterior penalty total
    double fitness = 0.0;             // -coverage + lamp_count_penalty + constraint_penalty
    bool feasible = true;
};

/// Sorted multiset of roadway-axis coordinates where a coverage boundary
/// occurs: {0, d_road} plus every unit's clipped start and end. Unplaced
/// units contribute too (their width is zeroed later), so the result always
/// has exactly 2*|M| + 2 entries; duplicates are retained.
std::vector<double> points_of_interest(std::span<const CoverageFootprint> fps,
                                       double d_road);

/// Covered width of the cell [lo, hi]: the best placed unit whose clipped
/// extent contains the whole cell (closed inequalities, since cell bounds
/// coincide with coverage boundaries), with the unit width capped at the
/// road width. Zero when no placed unit covers the cell.
double cell_width(double lo, double hi, std::span<const CoverageFootprint> fps,
                  std::span<const Placement> placements, const RoadGeometry& road);

/// Length-weighted mean relevance of [lo, hi] over the road sectors it
/// overlaps. Zero-length cells yield 0 by convention.
double cell_relevance(double lo, double hi, const RoadGeometry& road);

/// The full cell partition induced by the points of interest.
std::vector<PartitionCell> partition(std::span<const CoverageFootprint> fps,
                                     std::span<const Placement> placements,
                                     const RoadGeometry& road);

/// Relevance-weighted effective coverage ratio:
/// sum_j gamma_j * area_j / (eta * road_width * d_road).
double effective_coverage(std::span<const CoverageFootprint> fps,
                          std::span<const Placement> placements,
                          const RoadGeometry& road, double eta);

/// Exterior-penalty evaluation of the throughput and per-unit energy
/// constraints. A zero limit is handled as: no generated data/energy is
/// feasible, any positive amount is an unbounded excess.
ConstraintReport constraint_penalties(std::span<const Placement> placements,
                                      std::span<const DataEnergyProfile> profiles,
                                      double bandwidth_limit, double energy_limit,
                                      double rho);

/// Penalized scalar fitness of a candidate placement set under a scenario.
/// Deterministic and side-effect free; safe to call concurrently.
FitnessBreakdown fitness(std::span<const Placement> placements,
                         const ScenarioConfig& config);

}  // namespace elid
