#include "elid/objective.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace elid {

std::vector<double> points_of_interest(std::span<const CoverageFootprint> fps,
                                       double d_road) {
    std::vector<double> pois;
    pois.reserve(2 * fps.size() + 2);
    pois.push_back(0.0);
    pois.push_back(d_road);
    for (const CoverageFootprint& fp : fps) {
        pois.push_back(fp.x_start);
        pois.push_back(fp.x_end);
    }
    std::sort(pois.begin(), pois.end());
    return pois;
}

double cell_width(double lo, double hi, std::span<const CoverageFootprint> fps,
                  std::span<const Placement> placements, const RoadGeometry& road) {
    assert(fps.size() == placements.size());
    double best = 0.0;
    for (std::size_t m = 0; m < fps.size(); ++m) {
        if (!placements[m].placed) continue;
        if (fps[m].x_start <= lo && hi <= fps[m].x_end) {
            best = std::max(best, std::min(fps[m].l_width, road.width()));
        }
    }
    return best;
}

double cell_relevance(double lo, double hi, const RoadGeometry& road) {
    if (!(hi > lo)) return 0.0;
    double weighted = 0.0;
    double sector_lo = 0.0;
    for (std::size_t a = 0; a < road.sector_end.size(); ++a) {
        const double sector_hi = road.sector_end[a];
        if (sector_lo < hi && sector_hi > lo) {
            weighted += road.sector_score[a] *
                        (std::min(hi, sector_hi) - std::max(lo, sector_lo));
        }
        sector_lo = sector_hi;
    }
    return weighted / (hi - lo);
}

std::vector<PartitionCell> partition(std::span<const CoverageFootprint> fps,
                                     std::span<const Placement> placements,
                                     const RoadGeometry& road) {
    const std::vector<double> pois = points_of_interest(fps, road.d_road);
    std::vector<PartitionCell> cells;
    cells.reserve(pois.size() - 1);
    for (std::size_t j = 1; j < pois.size(); ++j) {
        PartitionCell cell;
        cell.lo = pois[j - 1];
        cell.hi = pois[j];
        cell.width = cell_width(cell.lo, cell.hi, fps, placements, road);
        cell.gamma = cell_relevance(cell.lo, cell.hi, road);
        cell.area = (cell.hi - cell.lo) * cell.width;
        cells.push_back(cell);
    }
    return cells;
}

double effective_coverage(std::span<const CoverageFootprint> fps,
                          std::span<const Placement> placements,
                          const RoadGeometry& road, double eta) {
    double weighted_area = 0.0;
    for (const PartitionCell& cell : partition(fps, placements, road)) {
        weighted_area += cell.gamma * cell.area;
    }
    return weighted_area / (eta * road.width() * road.d_road);
}

namespace {

// Ratio with the zero-denominator convention used by the limit checks.
double capacity_ratio(double amount, double limit) {
    if (limit > 0.0) return amount / limit;
    return amount > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

double exterior_penalty(double excess, double rho) {
    if (!(excess > 0.0) || rho == 0.0) return 0.0;
    return rho * excess * excess;
}

}  // namespace

ConstraintReport constraint_penalties(std::span<const Placement> placements,
                                      std::span<const DataEnergyProfile> profiles,
                                      double bandwidth_limit, double energy_limit,
                                      double rho) {
    assert(placements.size() == profiles.size());
    ConstraintReport report;

    double total_data = 0.0;
    for (std::size_t m = 0; m < placements.size(); ++m) {
        if (placements[m].placed) total_data += profiles[m].data_bytes;
    }
    report.throughput_excess = capacity_ratio(total_data, bandwidth_limit) - 1.0;
    report.total_penalty = exterior_penalty(report.throughput_excess, rho);

    report.energy_excess.reserve(placements.size());
    for (std::size_t m = 0; m < placements.size(); ++m) {
        const double used = placements[m].placed ? profiles[m].energy_w : 0.0;
        const double excess = capacity_ratio(used, energy_limit) - 1.0;
        report.energy_excess.push_back(excess);
        report.total_penalty += exterior_penalty(excess, rho);
    }

    report.feasible = report.total_penalty == 0.0;
    return report;
}

FitnessBreakdown fitness(std::span<const Placement> placements,
                         const ScenarioConfig& config) {
    const std::vector<CoverageFootprint> fps =
        footprints(config.lidar, config.road, placements, config.width_rule);
    const std::vector<DataEnergyProfile> prof = profiles(config.lidar, fps);

    FitnessBreakdown out;
    out.coverage = effective_coverage(fps, placements, config.road, config.eta);

    int placed = 0;
    for (const Placement& p : placements) placed += p.placed ? 1 : 0;
    out.lamp_count_penalty = config.lambda * placed;

    const ConstraintReport report = constraint_penalties(
        placements, prof, config.bandwidth_limit, config.energy_limit, config.rho);
    out.constraint_penalty = report.total_penalty;
    out.feasible = report.feasible;
    out.fitness = -out.coverage + out.lamp_count_penalty + out.constraint_penalty;
    return out;
}

}  // namespace elid
