#pragma once

#include <string>

#include "elid/geometry.hpp"
#include "elid/swarm_config.hpp"

namespace elid {

/// One GB is 10^9 bytes everywhere in this project (decimal SI); scenario
/// files carry bandwidth in GB/s and the loader converts to bytes/s.
inline constexpr double kBytesPerGigabyte = 1e9;

/// Raised by scenario parsing and validation with a message naming the
/// violated field or invariant.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Complete description of one planning problem: fixed hardware and road
/// parameters, operating limits, objective weights and solver settings.
struct ScenarioConfig {
    LidarSpec lidar;
    RoadGeometry road;
    double bandwidth_limit = 0.0;  // network throughput cap [bytes/s]
    double energy_limit = 0.0;     // per-unit energy cap [W]
    double lambda = 0.0;           // unit-count regularization weight
    double eta = 1.0;              // required coverage fraction, in (0, 1]
    double rho = 1.0;              // exterior penalty weight
    int num_elids = 1;             // candidate unit count |M|
    WidthRule width_rule = WidthRule::BeamReachSum;
    double delta_step_deg = 0.0;   // accepted for completeness, not consumed
    double gamma_step_m = 0.0;     // accepted for completeness, not consumed
    SwarmConfig swarm;
    std::string description;

    /// Throws ScenarioError naming the first violated invariant.
    void validate() const;
};

/// Parses and validates a scenario file (JSON, see README for the schema).
/// Angles are given in degrees and bandwidths in GB/s in the file; the
/// returned config holds radians and bytes/s.
ScenarioConfig load_scenario(const std::string& path);

/// The bundled urban-street scenario used as the default benchmark
/// (three-lane one-way road, 1 km, Velodyne-class unit specs).
ScenarioConfig default_scenario();

}  // namespace elid
