#include "elid/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace elid {

namespace {

constexpr double kPi = std::numbers::pi;

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

[[noreturn]] void fail(const std::string& message) { throw ScenarioError(message); }

void validate_lidar(const LidarSpec& lidar) {
    if (!(lidar.theta > 0.0 && lidar.theta < kPi)) fail("lidar.theta_deg must be in (0, 180)");
    if (!(lidar.phi > 0.0 && lidar.phi < kPi / 2.0)) fail("lidar.phi_deg must be in (0, 90)");
    if (!(lidar.f_scan > 0.0)) fail("lidar.f_scan_hz must be positive");
    if (!(lidar.h_cov > 0.0)) fail("lidar.h_cov_m must be positive");
    if (!(lidar.p_comm >= 0.0)) fail("lidar.p_comm_w must be non-negative");
    if (!(lidar.p_rad >= 0.0)) fail("lidar.p_rad_w must be non-negative");
    if (!(lidar.r_comm > 0.0)) fail("lidar.r_comm_gbps must be positive");
    if (lidar.octree_depth < 2 || lidar.octree_depth > 22) {
        fail("lidar.octree_depth must be in [2, 22]");
    }
}

void validate_road(const RoadGeometry& road) {
    if (!(road.d_road > 0.0)) fail("road.d_road_m must be positive");
    if (!(road.y_min > 0.0)) fail("road.y_min_m must be positive");
    if (!(road.y_max > road.y_min)) fail("road.y_max_m must exceed road.y_min_m");
    if (!(road.z_min > 0.0)) fail("road.z_min_m must be positive");
    if (!(road.z_max >= road.z_min)) fail("road.z_max_m must be >= road.z_min_m");
    if (road.sector_end.empty()) fail("road.sector_ends_m must not be empty");
    if (road.sector_end.size() != road.sector_score.size()) {
        fail("road.sector_ends_m and road.sector_scores must have equal length");
    }
    double prev = 0.0;
    for (double q : road.sector_end) {
        if (!(q > prev)) fail("road.sector_ends_m must be strictly ascending and positive");
        prev = q;
    }
    if (road.sector_end.back() != road.d_road) {
        fail("road.sector_ends_m must end exactly at road.d_road_m");
    }
    for (double s : road.sector_score) {
        if (!(s >= 0.0 && s <= 1.0)) fail("road.sector_scores entries must be in [0, 1]");
    }
}

}  // namespace

void ScenarioConfig::validate() const {
    validate_lidar(lidar);
    validate_road(road);
    // The rotation is largest at the lowest mount; requiring the trapezoid to
    // stay bounded there keeps every height in the box valid.
    if (!(std::atan(road.y_min / road.z_min) + lidar.phi < kPi / 2.0)) {
        fail("orientation angle at z_min plus lidar.phi_deg must stay below 90 degrees");
    }
    if (!(bandwidth_limit >= 0.0)) fail("limits.bandwidth_gbps must be non-negative");
    if (!(energy_limit >= 0.0)) fail("limits.energy_w must be non-negative");
    if (!(lambda >= 0.0)) fail("lambda must be non-negative");
    if (!(eta > 0.0 && eta <= 1.0)) fail("eta must be in (0, 1]");
    if (!(rho >= 0.0)) fail("rho must be non-negative");
    if (num_elids < 1) fail("num_elids must be >= 1");
    if (swarm.num_particles < 1) fail("swarm.num_particles must be >= 1");
    if (swarm.t_max < 1) fail("swarm.t_max must be >= 1");
    if (!(swarm.xi >= 0.0)) fail("swarm.xi must be non-negative");
    if (swarm.stall_window < 0) fail("swarm.stall_window must be non-negative");
    if (swarm.velocity_clamp && !(*swarm.velocity_clamp > 0.0)) {
        fail("swarm.velocity_clamp must be positive when given");
    }
    if (swarm.num_threads < 0) fail("swarm.num_threads must be non-negative");
}

namespace {

using nlohmann::json;

double require_number(const json& node, const std::string& context, const char* key) {
    if (!node.contains(key)) fail(context + "." + key + " is missing");
    if (!node.at(key).is_number()) fail(context + "." + key + " must be a number");
    return node.at(key).get<double>();
}

int require_int(const json& node, const std::string& context, const char* key) {
    if (!node.contains(key)) fail(context + "." + key + " is missing");
    if (!node.at(key).is_number_integer()) fail(context + "." + key + " must be an integer");
    return node.at(key).get<int>();
}

std::vector<double> require_number_list(const json& node, const std::string& context,
                                        const char* key) {
    if (!node.contains(key) || !node.at(key).is_array()) {
        fail(context + "." + key + " must be an array of numbers");
    }
    std::vector<double> values;
    for (const json& v : node.at(key)) {
        if (!v.is_number()) fail(context + "." + key + " must contain only numbers");
        values.push_back(v.get<double>());
    }
    return values;
}

const json& require_object(const json& node, const char* key) {
    if (!node.contains(key) || !node.at(key).is_object()) {
        fail(std::string(key) + " section is missing");
    }
    return node.at(key);
}

SwarmConfig parse_swarm(const json& node) {
    SwarmConfig swarm;
    swarm.num_particles = require_int(node, "swarm", "num_particles");
    swarm.t_max = require_int(node, "swarm", "t_max");
    swarm.alpha = require_number(node, "swarm", "alpha");
    swarm.beta_p = require_number(node, "swarm", "beta_p");
    swarm.beta_g = require_number(node, "swarm", "beta_g");
    swarm.xi = require_number(node, "swarm", "xi");
    if (node.contains("stall_window")) {
        swarm.stall_window = require_int(node, "swarm", "stall_window");
    }
    if (node.contains("seed")) {
        swarm.seed = node.at("seed").get<std::uint64_t>();
    }
    if (node.contains("velocity_clamp") && !node.at("velocity_clamp").is_null()) {
        swarm.velocity_clamp = require_number(node, "swarm", "velocity_clamp");
    }
    if (node.contains("num_threads")) {
        swarm.num_threads = require_int(node, "swarm", "num_threads");
    }
    return swarm;
}

}  // namespace

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open scenario file: " + path);

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        fail("scenario parse error in " + path + ": " + e.what());
    }

    ScenarioConfig config;
    const json& lidar = require_object(doc, "lidar");
    config.lidar.theta = deg_to_rad(require_number(lidar, "lidar", "theta_deg"));
    config.lidar.phi = deg_to_rad(require_number(lidar, "lidar", "phi_deg"));
    config.lidar.f_scan = require_number(lidar, "lidar", "f_scan_hz");
    config.lidar.h_cov = require_number(lidar, "lidar", "h_cov_m");
    config.lidar.p_comm = require_number(lidar, "lidar", "p_comm_w");
    config.lidar.p_rad = require_number(lidar, "lidar", "p_rad_w");
    config.lidar.r_comm = require_number(lidar, "lidar", "r_comm_gbps") * kBytesPerGigabyte;
    config.lidar.octree_depth = require_int(lidar, "lidar", "octree_depth");

    const json& road = require_object(doc, "road");
    config.road.d_road = require_number(road, "road", "d_road_m");
    config.road.y_min = require_number(road, "road", "y_min_m");
    config.road.y_max = require_number(road, "road", "y_max_m");
    config.road.z_min = require_number(road, "road", "z_min_m");
    config.road.z_max = require_number(road, "road", "z_max_m");
    config.road.sector_end = require_number_list(road, "road", "sector_ends_m");
    config.road.sector_score = require_number_list(road, "road", "sector_scores");

    const json& limits = require_object(doc, "limits");
    config.bandwidth_limit =
        require_number(limits, "limits", "bandwidth_gbps") * kBytesPerGigabyte;
    config.energy_limit = require_number(limits, "limits", "energy_w");

    config.lambda = require_number(doc, "scenario", "lambda");
    config.eta = require_number(doc, "scenario", "eta");
    config.rho = doc.contains("rho") ? require_number(doc, "scenario", "rho") : 1.0;
    config.num_elids = require_int(doc, "scenario", "num_elids");

    if (doc.contains("width_rule")) {
        const std::string rule = doc.at("width_rule").get<std::string>();
        if (rule == "sum") {
            config.width_rule = WidthRule::BeamReachSum;
        } else if (rule == "difference") {
            config.width_rule = WidthRule::BandDepth;
        } else {
            fail("width_rule must be \"sum\" or \"difference\"");
        }
    }
    if (doc.contains("delta_step_deg")) {
        config.delta_step_deg = require_number(doc, "scenario", "delta_step_deg");
    }
    if (doc.contains("gamma_step_m")) {
        config.gamma_step_m = require_number(doc, "scenario", "gamma_step_m");
    }
    if (doc.contains("description")) {
        config.description = doc.at("description").get<std::string>();
    }

    config.swarm = parse_swarm(require_object(doc, "swarm"));
    config.validate();
    return config;
}

ScenarioConfig default_scenario() {
    ScenarioConfig config;
    config.lidar.theta = deg_to_rad(120.0);
    config.lidar.phi = deg_to_rad(35.0);
    config.lidar.f_scan = 30.0;
    config.lidar.h_cov = 2.0;
    config.lidar.p_comm = 5.0;
    config.lidar.p_rad = 10.0;
    config.lidar.r_comm = 1.0 * kBytesPerGigabyte;
    config.lidar.octree_depth = 5;

    config.road.d_road = 1000.0;
    config.road.y_min = 5.0;
    config.road.y_max = 20.0;
    config.road.z_min = 15.0;
    config.road.z_max = 50.0;
    config.road.sector_end = {60.0, 150.0, 300.0, 700.0, 860.0, 940.0, 1000.0};
    config.road.sector_score = {1.0, 0.9, 0.8, 0.77, 0.8, 0.9, 1.0};

    config.bandwidth_limit = 10.0 * kBytesPerGigabyte;
    config.energy_limit = 20.0;
    config.lambda = 0.25;
    config.eta = 1.0;
    config.rho = 1.0;
    config.num_elids = 20;
    config.delta_step_deg = 0.1;
    config.gamma_step_m = 0.1;

    config.swarm.num_particles = 100;
    config.swarm.t_max = 500;
    config.swarm.alpha = 1.0;
    config.swarm.beta_p = 2.0;
    config.swarm.beta_g = 2.0;
    config.swarm.xi = 1e-4;
    config.swarm.seed = 1;

    config.description = "Three-lane one-way urban street, 1 km";
    return config;
}

}  // namespace elid
