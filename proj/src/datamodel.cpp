#include "elid/datamodel.hpp"

#include <stdexcept>

namespace elid {

std::int64_t octree_density(int depth) {
    if (depth < 2) {
        throw std::domain_error("octree_density: depth must be at least 2");
    }
    if (depth > 22) {
        // 8^21 overflows a signed 64-bit integer.
        throw std::domain_error("octree_density: depth above 22 overflows 64-bit bytes");
    }
    std::int64_t cells = 1;
    for (int i = 0; i < depth - 2; ++i) cells *= 8;
    return cells + 12;
}

double data_generated(const LidarSpec& spec, const CoverageFootprint& fp) {
    return spec.h_cov * fp.a_total *
           static_cast<double>(octree_density(spec.octree_depth)) / spec.f_scan;
}

double energy_consumed(const LidarSpec& spec, double data_bytes) {
    if (data_bytes < 0.0) {
        throw std::domain_error("energy_consumed: negative data quantity");
    }
    return spec.p_comm * data_bytes / spec.r_comm + spec.p_rad / spec.f_scan;
}

std::vector<DataEnergyProfile> profiles(const LidarSpec& spec,
                                        std::span<const CoverageFootprint> fps) {
    std::vector<DataEnergyProfile> out;
    out.reserve(fps.size());
    for (const CoverageFootprint& fp : fps) {
        DataEnergyProfile p;
        p.data_bytes = data_generated(spec, fp);
        p.energy_w = energy_consumed(spec, p.data_bytes);
        out.push_back(p);
    }
    return out;
}

}  // namespace elid
