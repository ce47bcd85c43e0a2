#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "elid/geometry.hpp"

namespace elid {

/// Worst-case data and energy figures for one unit.
struct DataEnergyProfile {
    double data_bytes = 0.0;  // generated data quantity D
    double energy_w = 0.0;    // energy consumption E [W]
};

/// Worst-case octree data density in bytes per cubic meter: 8^(depth-2) + 12,
/// exact integer arithmetic. Valid for depth in [2, 22]; below 2 the exponent
/// is negative, above 22 the value no longer fits 64 bits.
std::int64_t octree_density(int depth);

/// Data generated per scan cycle: h_cov * a_total * density / f_scan.
double data_generated(const LidarSpec& spec, const CoverageFootprint& fp);

/// Operating power: p_comm * data / r_comm + p_rad / f_scan.
double energy_consumed(const LidarSpec& spec, double data_bytes);

/// Data/energy profile per unit, aligned with the footprint list.
std::vector<DataEnergyProfile> profiles(const LidarSpec& spec,
                                        std::span<const CoverageFootprint> fps);

}  // namespace elid
