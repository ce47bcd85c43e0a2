#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace elid {

/// A placement whose vertical rotation plus vertical FoV reaches pi/2 has an
/// unbounded footprint; callers treat it as a bounds violation.
struct InfeasibleGeometryError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Fixed technical specification shared by every ELiD unit.
struct LidarSpec {
    double theta = 0.0;    // horizontal FoV [rad], in (0, pi)
    double phi = 0.0;      // vertical FoV [rad], in (0, pi/2)
    double f_scan = 0.0;   // scan rate [Hz]
    double h_cov = 0.0;    // detection-zone height [m]
    double p_comm = 0.0;   // communication power [W]
    double p_rad = 0.0;    // laser scan power [W]
    double r_comm = 0.0;   // upload rate [bytes/s]
    int octree_depth = 2;  // octree recursion depth, >= 2
};

/// Roadway layout: axis length, lateral band, mounting-height bounds and
/// relevance sectors. Sector a spans (sector_end[a-1], sector_end[a]] with
/// score sector_score[a]; the list of ends is strictly ascending and the
/// last entry equals d_road.
struct RoadGeometry {
    double d_road = 0.0;  // roadway length [m]
    double y_min = 0.0;   // lateral distance to near road edge [m]
    double y_max = 0.0;   // lateral distance to far road edge [m]
    double z_min = 0.0;   // lowest mounting height [m]
    double z_max = 0.0;   // highest mounting height [m]
    std::vector<double> sector_end;    // [m], ascending, back() == d_road
    std::vector<double> sector_score;  // relevance in [0, 1] per sector

    double width() const { return y_max - y_min; }
};

/// Decision variables for one candidate ELiD.
struct Placement {
    double x = 0.0;       // roadway-axis position [m]
    double z = 0.0;       // mounting height [m]
    bool placed = false;  // install flag
};

/// The lateral coverage width of a unit has two readings that differ in the
/// sign of the near-edge term: the distance from the projection of the far
/// beam to the mirrored near beam, z*(tan(w+phi) + tan(w)), or the depth of
/// the illuminated band on the road surface, z*(tan(w+phi) - tan(w)).
/// BeamReachSum is the default.
enum class WidthRule {
    BeamReachSum,  // z * (tan(omega+phi) + tan(omega))
    BandDepth,     // z * (tan(omega+phi) - tan(omega))
};

/// Per-unit coverage footprint derived from (x, z) and the fixed specs.
struct CoverageFootprint {
    double omega = 0.0;    // vertical rotation angle [rad]
    double l_near = 0.0;   // near trapezoid base [m]
    double l_far = 0.0;    // far trapezoid base [m]
    double l_width = 0.0;  // coverage width [m]
    double a_total = 0.0;  // trapezoid area [m^2]
    double a_rect = 0.0;   // inscribed rectangle area [m^2]
    double x_start = 0.0;  // clipped coverage start along the road [m]
    double x_end = 0.0;    // clipped coverage end along the road [m]
};

/// Vertical rotation that points the lowest beam at the near road edge:
/// arctan(y_min / z). Strictly decreasing in z, strictly increasing in
/// y_min, always in (0, pi/2). Throws std::domain_error unless both
/// arguments are positive.
double orientation_angle(double z, double y_min);

/// Lateral coverage width under the chosen rule. Isolated here so the two
/// width readings can be swapped by a single flag.
double lateral_width(double z, double omega, double phi, WidthRule rule);

/// Full coverage footprint for one placement. Throws std::domain_error on
/// non-positive z/y_min and InfeasibleGeometryError when omega + phi is not
/// below pi/2 (the trapezoid would be unbounded). A placement whose
/// footprint lies entirely off-road yields x_start == x_end; that is valid
/// zero-length coverage, not an error.
CoverageFootprint footprint(const LidarSpec& spec, const RoadGeometry& road,
                            const Placement& p,
                            WidthRule rule = WidthRule::BeamReachSum);

/// Footprints for a whole candidate set, aligned by index.
std::vector<CoverageFootprint> footprints(const LidarSpec& spec,
                                          const RoadGeometry& road,
                                          std::span<const Placement> placements,
                                          WidthRule rule = WidthRule::BeamReachSum);

}  // namespace elid
