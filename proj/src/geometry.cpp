#include "elid/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elid {

double orientation_angle(double z, double y_min) {
    if (!(z > 0.0)) {
        throw std::domain_error("orientation_angle: height must be positive");
    }
    if (!(y_min > 0.0)) {
        throw std::domain_error("orientation_angle: near-edge distance must be positive");
    }
    return std::atan(y_min / z);
}

double lateral_width(double z, double omega, double phi, WidthRule rule) {
    const double far_reach = std::tan(omega + phi);
    const double near_reach = std::tan(omega);
    switch (rule) {
        case WidthRule::BeamReachSum:
            return z * (far_reach + near_reach);
        case WidthRule::BandDepth:
            return z * (far_reach - near_reach);
    }
    throw std::logic_error("lateral_width: unknown width rule");
}

CoverageFootprint footprint(const LidarSpec& spec, const RoadGeometry& road,
                            const Placement& p, WidthRule rule) {
    const double omega = orientation_angle(p.z, road.y_min);
    if (!(omega + spec.phi < std::numbers::pi / 2.0)) {
        throw InfeasibleGeometryError(
            "footprint: omega + phi reaches pi/2, coverage is unbounded");
    }

    CoverageFootprint fp;
    fp.omega = omega;
    const double sec_omega = 1.0 / std::cos(omega);
    const double sec_tilted = 1.0 / std::cos(omega + spec.phi);
    fp.l_near = 2.0 * p.z * sec_omega * std::tan(spec.theta / 2.0);
    fp.l_far = fp.l_near * sec_tilted / sec_omega;
    fp.l_width = lateral_width(p.z, omega, spec.phi, rule);
    fp.a_total = (fp.l_near + fp.l_far) * fp.l_width / 2.0;
    fp.a_rect = fp.l_near * fp.l_width;
    fp.x_start = std::max(p.x - fp.l_near, 0.0);
    fp.x_end = std::min(p.x + fp.l_near, road.d_road);
    // Fully off-road placements collapse to a zero-length extent.
    if (fp.x_start > fp.x_end) fp.x_start = fp.x_end = std::clamp(p.x, 0.0, road.d_road);
    return fp;
}

std::vector<CoverageFootprint> footprints(const LidarSpec& spec,
                                          const RoadGeometry& road,
                                          std::span<const Placement> placements,
                                          WidthRule rule) {
    std::vector<CoverageFootprint> out;
    out.reserve(placements.size());
    for (const Placement& p : placements) out.push_back(footprint(spec, road, p, rule));
    return out;
}

}  // namespace elid
