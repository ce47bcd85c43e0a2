#include "elid/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <thread>

namespace elid {

namespace fs = std::filesystem;

namespace {

ScenarioConfig load_with_overrides(const std::string& path, const RunOverrides& overrides) {
    ScenarioConfig config = load_scenario(path);
    if (overrides.seed) config.swarm.seed = *overrides.seed;
    if (overrides.num_threads) config.swarm.num_threads = *overrides.num_threads;
    if (overrides.width_rule) config.width_rule = *overrides.width_rule;
    return config;
}

int count_placed(std::span<const Placement> placements) {
    int n = 0;
    for (const Placement& p : placements) n += p.placed ? 1 : 0;
    return n;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void write_summary(std::ostream& out, const ScenarioConfig& config,
                   const SolveResult& result) {
    out << "scenario: " << (config.description.empty() ? "(unnamed)" : config.description)
        << "\n"
        << "candidate units: " << config.num_elids << "\n"
        << "iterations run: " << result.iterations_run << "\n"
        << "feasible: " << (result.feasible ? "yes" : "no") << "\n"
        << "units placed: " << count_placed(result.best_placements) << "\n"
        << "best fitness: " << format_double(result.best_fitness) << "\n"
        << "effective coverage: " << format_double(result.best_coverage) << "\n"
        << "reported coverage: "
        << format_double(result.feasible ? result.best_coverage : 0.0) << "\n"
        << "best feasible coverage: "
        << (result.has_feasible_best ? format_double(result.feasible_best_coverage)
                                     : std::string("none"))
        << "\n";
}

}  // namespace

EvaluateReport evaluate_placements(const ScenarioConfig& config,
                                   std::span<const Placement> placements) {
    if (placements.size() > static_cast<std::size_t>(config.num_elids)) {
        throw ScenarioError("placements file lists more units than the scenario's num_elids");
    }
    for (std::size_t m = 0; m < placements.size(); ++m) {
        const Placement& p = placements[m];
        if (!(p.x >= 0.0 && p.x <= config.road.d_road)) {
            throw ScenarioError("placement " + std::to_string(m) +
                                ": x_m outside [0, d_road]");
        }
        if (!(p.z >= config.road.z_min && p.z <= config.road.z_max)) {
            throw ScenarioError("placement " + std::to_string(m) +
                                ": z_m outside [z_min, z_max]");
        }
    }

    EvaluateReport report;
    report.footprints = footprints(config.lidar, config.road, placements, config.width_rule);
    report.profiles = profiles(config.lidar, report.footprints);
    report.breakdown = fitness(placements, config);
    report.constraints = constraint_penalties(placements, report.profiles,
                                              config.bandwidth_limit, config.energy_limit,
                                              config.rho);
    report.reported_coverage = report.breakdown.feasible ? report.breakdown.coverage : 0.0;
    return report;
}

int cmd_solve(const std::string& scenario_path, const RunOverrides& overrides,
              const std::string& out_dir, std::ostream& out, std::ostream& err) {
    try {
        const ScenarioConfig config = load_with_overrides(scenario_path, overrides);
        const SolveResult result = solve(config, config.swarm);

        const fs::path dir(out_dir);
        fs::create_directories(dir);

        const auto fps =
            footprints(config.lidar, config.road, result.best_placements, config.width_rule);
        const auto prof = profiles(config.lidar, fps);
        {
            auto file = open_output(dir / "placements.csv");
            write_placements_csv(file, result.best_placements, fps, prof);
        }
        {
            auto file = open_output(dir / "trace.csv");
            write_trace_csv(file, result.trace);
        }
        {
            auto file = open_output(dir / "summary.txt");
            write_summary(file, config, result);
        }
        write_summary(out, config, result);
        return result.feasible ? kExitOk : kExitInfeasible;
    } catch (const std::exception& e) {
        err << "solve: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_evaluate(const std::string& scenario_path, const std::string& placements_path,
                 const RunOverrides& overrides, std::ostream& out, std::ostream& err) {
    try {
        const ScenarioConfig config = load_with_overrides(scenario_path, overrides);
        const std::vector<Placement> placements = read_placements_csv(placements_path);
        const EvaluateReport report = evaluate_placements(config, placements);

        out << "units listed: " << placements.size() << "\n"
            << "units placed: " << count_placed(placements) << "\n"
            << "effective coverage: " << format_double(report.breakdown.coverage) << "\n"
            << "reported coverage: " << format_double(report.reported_coverage) << "\n"
            << "lamp count penalty: " << format_double(report.breakdown.lamp_count_penalty)
            << "\n"
            << "constraint penalty: " << format_double(report.breakdown.constraint_penalty)
            << "\n"
            << "fitness: " << format_double(report.breakdown.fitness) << "\n"
            << "feasible: " << (report.breakdown.feasible ? "yes" : "no") << "\n"
            << "throughput slack (1 - sum(D)/B): "
            << format_double(-report.constraints.throughput_excess) << "\n";
        for (std::size_t m = 0; m < report.constraints.energy_excess.size(); ++m) {
            out << "energy slack unit " << m << " (1 - E/Ebar): "
                << format_double(-report.constraints.energy_excess[m]) << "\n";
        }
        return report.breakdown.feasible ? kExitOk : kExitInfeasible;
    } catch (const std::exception& e) {
        err << "evaluate: " << e.what() << "\n";
        return kExitError;
    }
}

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace

int cmd_sweep(const std::string& scenario_path, const std::vector<int>& depths,
              const std::vector<double>& bandwidths_gbps, int seeds_per_cell,
              const RunOverrides& overrides, const std::string& out_dir, bool parallel,
              std::ostream& out, std::ostream& err) {
    try {
        if (depths.empty() || bandwidths_gbps.empty()) {
            throw ScenarioError("sweep: depth and bandwidth lists must not be empty");
        }
        if (seeds_per_cell < 1) throw ScenarioError("sweep: seeds_per_cell must be >= 1");

        const ScenarioConfig base = load_with_overrides(scenario_path, overrides);
        const std::uint64_t master_seed = base.swarm.seed;

        struct Cell {
            std::size_t d_idx;
            std::size_t b_idx;
        };
        std::vector<Cell> cells;
        for (std::size_t di = 0; di < depths.size(); ++di) {
            for (std::size_t bi = 0; bi < bandwidths_gbps.size(); ++bi) {
                cells.push_back({di, bi});
            }
        }

        std::vector<std::vector<SweepRow>> cell_rows(cells.size());
        auto run_cell = [&](std::size_t c) {
            ScenarioConfig config = base;
            config.lidar.octree_depth = depths[cells[c].d_idx];
            config.bandwidth_limit = bandwidths_gbps[cells[c].b_idx] * kBytesPerGigabyte;
            config.validate();
            for (int rep = 0; rep < seeds_per_cell; ++rep) {
                SwarmConfig swarm = config.swarm;
                swarm.seed = derive_seed(master_seed, cells[c].d_idx, cells[c].b_idx,
                                         static_cast<std::uint64_t>(rep));
                const SolveResult result = solve(config, swarm);
                SweepRow row;
                row.octree_depth = depths[cells[c].d_idx];
                row.bandwidth_gbps = bandwidths_gbps[cells[c].b_idx];
                row.seed = swarm.seed;
                row.coverage =
                    result.has_feasible_best ? result.feasible_best_coverage : 0.0;
                row.fitness = result.best_fitness;
                row.lamps = count_placed(result.best_placements);
                row.iterations = result.iterations_run;
                cell_rows[c].push_back(row);
            }
            std::vector<double> coverages;
            for (const SweepRow& row : cell_rows[c]) coverages.push_back(row.coverage);
            const double med = median(std::move(coverages));
            for (SweepRow& row : cell_rows[c]) row.cell_median_coverage = med;
        };

        if (parallel && cells.size() > 1) {
            const unsigned workers =
                std::min<unsigned>(std::thread::hardware_concurrency(),
                                   static_cast<unsigned>(cells.size()));
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < std::max(1u, workers); ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t c = w; c < cells.size(); c += std::max(1u, workers)) {
                        run_cell(c);
                    }
                });
            }
            for (std::thread& t : pool) t.join();
        } else {
            for (std::size_t c = 0; c < cells.size(); ++c) run_cell(c);
        }

        std::vector<SweepRow> rows;
        for (const auto& cr : cell_rows) rows.insert(rows.end(), cr.begin(), cr.end());

        const fs::path dir(out_dir);
        fs::create_directories(dir);
        auto file = open_output(dir / "sweep.csv");
        write_sweep_csv(file, rows);

        out << "sweep: " << cells.size() << " cells x " << seeds_per_cell
            << " seeds written to " << (dir / "sweep.csv").string() << "\n";
        for (const auto& cr : cell_rows) {
            out << "d=" << cr.front().octree_depth
                << " B=" << format_double(cr.front().bandwidth_gbps)
                << " GB/s median coverage " << format_double(cr.front().cell_median_coverage)
                << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "sweep: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_oracle_check(const std::string& scenario_path, double resolution, int trials,
                     std::uint64_t seed, double tolerance, const RunOverrides& overrides,
                     std::ostream& out, std::ostream& err) {
    try {
        const ScenarioConfig config = load_with_overrides(scenario_path, overrides);
        if (!(resolution > 0.0)) throw ScenarioError("oracle-check: resolution must be positive");
        if (trials < 1) throw ScenarioError("oracle-check: trials must be >= 1");

        UniformStream rng(derive_seed(seed));
        const RasterConfig raster{resolution, false};
        double worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            const int m_count =
                1 + static_cast<int>(rng.next() * static_cast<double>(config.num_elids));
            std::vector<Placement> placements;
            placements.reserve(static_cast<std::size_t>(m_count));
            for (int m = 0; m < m_count; ++m) {
                Placement p;
                p.x = rng.next_in(0.0, config.road.d_road);
                p.z = rng.next_in(config.road.z_min, config.road.z_max);
                p.placed = rng.next() < 0.5;
                placements.push_back(p);
            }
            const auto fps =
                footprints(config.lidar, config.road, placements, config.width_rule);
            const double analytic =
                effective_coverage(fps, placements, config.road, config.eta);
            const double rastered =
                raster_coverage(fps, placements, config.road, config.eta, raster);
            worst = std::max(worst, std::abs(analytic - rastered));
        }
        out << "oracle-check: " << trials << " trials, resolution "
            << format_double(resolution) << " m, max |analytic - raster| = "
            << format_double(worst) << " (tolerance " << format_double(tolerance) << ")\n";
        return worst <= tolerance ? kExitOk : kExitInfeasible;
    } catch (const std::exception& e) {
        err << "oracle-check: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace elid
