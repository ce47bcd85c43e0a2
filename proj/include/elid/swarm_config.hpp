#pragma once

#include <cstdint>
#include <optional>

namespace elid {

/// Hyperparameters of the hybrid continuous/binary particle swarm.
struct SwarmConfig {
    int num_particles = 100;  // |S|
    double alpha = 1.0;       // inertia
    double beta_p = 2.0;      // personal-best weight
    double beta_g = 2.0;      // global-best weight
    int t_max = 500;          // iteration cap
    double xi = 1e-4;         // minimum fitness improvement that resets the stall counter
    int stall_window = 0;     // consecutive stalled iterations before early stop;
                              // 0 picks the default floor(t_max / 10), at least 1
    std::uint64_t seed = 1;   // master RNG seed
    std::optional<double> velocity_clamp;  // max |v| per dimension, unclamped if absent
    int num_threads = 1;      // particle evaluation workers; 0 = hardware concurrency

    int effective_stall_window() const {
        if (stall_window > 0) return stall_window;
        const int w = t_max / 10;
        return w > 0 ? w : 1;
    }
};

}  // namespace elid
