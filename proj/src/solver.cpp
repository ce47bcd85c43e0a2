#include "elid/solver.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace elid {

double update_velocity(double v, double x, double p_best, double g_best,
                       const SwarmConfig& swarm, double r_p, double r_g) {
    double v_new = swarm.alpha * v + swarm.beta_p * r_p * (p_best - x) +
                   swarm.beta_g * r_g * (g_best - x);
    if (swarm.velocity_clamp) {
        v_new = std::clamp(v_new, -*swarm.velocity_clamp, *swarm.velocity_clamp);
    }
    return v_new;
}

bool update_binary(double v_new, double r_b) {
    const double sigma = 1.0 / (1.0 + std::exp(-v_new));
    return r_b < sigma;
}

namespace {

void validate_swarm(const SwarmConfig& swarm) {
    if (swarm.num_particles < 1) throw ScenarioError("swarm: num_particles must be >= 1");
    if (swarm.t_max < 1) throw ScenarioError("swarm: t_max must be >= 1");
    if (!(swarm.xi >= 0.0)) throw ScenarioError("swarm: xi must be >= 0");
    if (swarm.velocity_clamp && !(*swarm.velocity_clamp > 0.0)) {
        throw ScenarioError("swarm: velocity_clamp must be positive");
    }
    if (swarm.num_threads < 0) throw ScenarioError("swarm: num_threads must be >= 0");
}

// Clamp to [lo, hi] and zero the velocity when the bound is hit.
void clamp_dimension(double lo, double hi, double& x, double& v) {
    if (x < lo) {
        x = lo;
        v = 0.0;
    } else if (x > hi) {
        x = hi;
        v = 0.0;
    }
}

void init_particle(Particle& p, const ScenarioConfig& config, std::uint64_t master_seed,
                   int index) {
    const int m_count = config.num_elids;
    p.position.resize(m_count);
    p.vel_x.assign(m_count, 0.0);
    p.vel_z.assign(m_count, 0.0);
    p.vel_eps.assign(m_count, 0.0);
    p.rng = UniformStream(derive_seed(master_seed, static_cast<std::uint64_t>(index)));
    for (int m = 0; m < m_count; ++m) {
        p.position[m].x = p.rng.next_in(0.0, config.road.d_road);
        p.position[m].z = p.rng.next_in(config.road.z_min, config.road.z_max);
        p.position[m].placed = p.rng.next() < 0.5;
    }
    p.current = fitness(p.position, config);
    p.best_position = p.position;
    p.best = p.current;
}

// One full velocity/position/flag update plus evaluation. Draw order per
// particle and iteration: r_p then r_g for each dimension in (x, z, eps)
// order per unit index, then one r_b per eps dimension.
void step_particle(Particle& p, const ScenarioConfig& config, const SwarmConfig& swarm,
                   std::span<const Placement> g_best) {
    const int m_count = config.num_elids;
    for (int m = 0; m < m_count; ++m) {
        double r_p = p.rng.next();
        double r_g = p.rng.next();
        p.vel_x[m] = update_velocity(p.vel_x[m], p.position[m].x, p.best_position[m].x,
                                     g_best[m].x, swarm, r_p, r_g);
        p.position[m].x += p.vel_x[m];
        clamp_dimension(0.0, config.road.d_road, p.position[m].x, p.vel_x[m]);

        r_p = p.rng.next();
        r_g = p.rng.next();
        p.vel_z[m] = update_velocity(p.vel_z[m], p.position[m].z, p.best_position[m].z,
                                     g_best[m].z, swarm, r_p, r_g);
        p.position[m].z += p.vel_z[m];
        clamp_dimension(config.road.z_min, config.road.z_max, p.position[m].z, p.vel_z[m]);

        r_p = p.rng.next();
        r_g = p.rng.next();
        p.vel_eps[m] = update_velocity(p.vel_eps[m], p.position[m].placed ? 1.0 : 0.0,
                                       p.best_position[m].placed ? 1.0 : 0.0,
                                       g_best[m].placed ? 1.0 : 0.0, swarm, r_p, r_g);
    }
    for (int m = 0; m < m_count; ++m) {
        p.position[m].placed = update_binary(p.vel_eps[m], p.rng.next());
    }
    p.current = fitness(p.position, config);
}

// Runs fn(i) for every particle index, optionally across worker threads.
// Results are independent of the worker count: particles share no state.
void for_each_particle(int count, int num_threads, const std::function<void(int)>& fn) {
    int workers = num_threads == 0
                      ? static_cast<int>(std::thread::hardware_concurrency())
                      : num_threads;
    if (workers < 1) workers = 1;
    workers = std::min(workers, count);
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < count; i += workers) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace

SolveResult solve(const ScenarioConfig& config, const SwarmConfig& swarm,
                  const IterationObserver& observer) {
    config.validate();
    validate_swarm(swarm);

    std::vector<Particle> particles(swarm.num_particles);
    for_each_particle(swarm.num_particles, swarm.num_threads, [&](int i) {
        init_particle(particles[i], config, swarm.seed, i);
    });

    // Global best: serial scan in index order, strict improvement only.
    int best_index = 0;
    for (int i = 1; i < swarm.num_particles; ++i) {
        if (particles[i].best.fitness < particles[best_index].best.fitness) best_index = i;
    }
    std::vector<Placement> g_best_pos = particles[best_index].best_position;
    FitnessBreakdown g_best = particles[best_index].best;

    SolveResult result;
    auto track_feasible = [&result](const Particle& p) {
        if (p.current.feasible &&
            (!result.has_feasible_best || p.current.fitness < result.feasible_best_fitness)) {
            result.has_feasible_best = true;
            result.feasible_best_fitness = p.current.fitness;
            result.feasible_best_coverage = p.current.coverage;
            result.feasible_best_placements = p.position;
        }
    };
    for (const Particle& p : particles) track_feasible(p);

    result.trace.push_back({g_best.fitness, g_best.coverage});
    if (observer) observer(0, particles);

    const int stall_window = swarm.effective_stall_window();
    int stall = 0;
    int iterations = 0;
    for (int t = 1; t <= swarm.t_max; ++t) {
        for_each_particle(swarm.num_particles, swarm.num_threads, [&](int i) {
            step_particle(particles[i], config, swarm, g_best_pos);
        });

        for (Particle& p : particles) {
            track_feasible(p);
            if (p.current.fitness < p.best.fitness) {
                p.best = p.current;
                p.best_position = p.position;
            }
        }
        const double previous_best = g_best.fitness;
        for (const Particle& p : particles) {
            if (p.best.fitness < g_best.fitness) {
                g_best = p.best;
                g_best_pos = p.best_position;
            }
        }

        iterations = t;
        result.trace.push_back({g_best.fitness, g_best.coverage});
        if (observer) observer(t, particles);

        if (previous_best - g_best.fitness > swarm.xi) {
            stall = 0;
        } else {
            ++stall;
        }
        if (stall >= stall_window) break;
    }

    result.best_placements = std::move(g_best_pos);
    result.best_fitness = g_best.fitness;
    result.best_coverage = g_best.coverage;
    result.feasible = g_best.feasible;
    result.iterations_run = iterations;
    return result;
}

}  // namespace elid
