#pragma once

#include <functional>
#include <span>
#include <vector>

#include "elid/objective.hpp"
#include "elid/rng.hpp"
#include "elid/scenario.hpp"
#include "elid/swarm_config.hpp"

namespace elid {

/// One swarm member. Velocities exist for every dimension including the
/// binary install flags; the flags themselves are resampled through the
/// sigmoid rule each iteration.
struct Particle {
    std::vector<Placement> position;
    std::vector<double> vel_x;
    std::vector<double> vel_z;
    std::vector<double> vel_eps;
    std::vector<Placement> best_position;
    FitnessBreakdown current;
    FitnessBreakdown best;
    UniformStream rng;
};

struct TracePoint {
    double best_fitness = 0.0;
    double best_coverage = 0.0;
};

struct SolveResult {
    std::vector<Placement> best_placements;
    double best_fitness = 0.0;
    double best_coverage = 0.0;  // effective coverage of the best placements
    bool feasible = false;
    int iterations_run = 0;
    /// Entry 0 is the post-initialization state; one entry per iteration
    /// follows. The fitness sequence is non-increasing.
    std::vector<TracePoint> trace;
    /// Best constraint-satisfying evaluation seen anywhere in the run,
    /// ranked by fitness. The smooth penalty can leave the overall best
    /// slightly infeasible, so the best feasible point is tracked
    /// separately; absent when no evaluation ever satisfied the limits.
    bool has_feasible_best = false;
    std::vector<Placement> feasible_best_placements;
    double feasible_best_fitness = 0.0;
    double feasible_best_coverage = 0.0;
};

/// Called after each synchronization barrier with the iteration number
/// (0 = initialization) and the full swarm state. Used by diagnostics and
/// property tests; must not mutate the particles.
using IterationObserver =
    std::function<void(int iteration, std::span<const Particle> swarm)>;

/// Velocity update for one dimension:
/// alpha*v + beta_p*r_p*(p_best - x) + beta_g*r_g*(g_best - x),
/// clamped to +-velocity_clamp when configured.
double update_velocity(double v, double x, double p_best, double g_best,
                       const SwarmConfig& swarm, double r_p, double r_g);

/// Binary resampling rule of classic discrete particle swarms:
/// sigma = 1 / (1 + exp(-v_new)), returns r_b < sigma. Positive velocity
/// biases the flag toward 1, so flags converge with their attractors.
bool update_binary(double v_new, double r_b);

/// Runs the hybrid continuous/binary particle swarm on the scenario's
/// penalized fitness. Deterministic for a fixed seed regardless of
/// swarm.num_threads: every particle owns an independent seeded stream and
/// best updates happen serially at the per-iteration barrier. Terminates at
/// t_max iterations or once the global best has not improved by more than
/// xi for stall_window consecutive iterations.
/// Throws ScenarioError on invalid configuration before iteration 0.
SolveResult solve(const ScenarioConfig& config, const SwarmConfig& swarm,
                  const IterationObserver& observer = {});

}  // namespace elid
