// elid-planner: placement planning for elevated roadside LiDAR units.
//
// Subcommands: solve, evaluate, sweep, oracle-check. See README.md for the
// scenario schema and output formats.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elid/commands.hpp"

namespace {

elid::RunOverrides make_overrides(const std::optional<std::uint64_t>& seed,
                                  const std::optional<int>& threads,
                                  const std::string& width_rule) {
    elid::RunOverrides overrides;
    overrides.seed = seed;
    overrides.num_threads = threads;
    if (width_rule == "sum") overrides.width_rule = elid::WidthRule::BeamReachSum;
    if (width_rule == "difference") overrides.width_rule = elid::WidthRule::BandDepth;
    return overrides;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elevated LiDAR placement planner"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir = "elid-out";
    std::string placements_path;
    std::string width_rule;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
        cmd->add_option("--width-rule", width_rule,
                        "Override the lateral width rule: sum or difference")
            ->check(CLI::IsMember({"sum", "difference"}));
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "Optimize placements with the swarm");
    add_common(solve_cmd);
    solve_cmd->add_option("--seed", seed, "Override the swarm RNG seed");
    solve_cmd->add_option("--threads", threads, "Particle evaluation workers (0 = all cores)");
    solve_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();

    CLI::App* eval_cmd =
        app.add_subcommand("evaluate", "Evaluate a fixed placements file without solving");
    add_common(eval_cmd);
    eval_cmd->add_option("--placements", placements_path, "Placements CSV file")->required();

    std::vector<int> depths;
    std::vector<double> bandwidths;
    int seeds_per_cell = 10;
    bool parallel = false;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Sensitivity sweep over octree depth and bandwidth");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--depths", depths, "Octree depths, comma separated")
        ->required()
        ->delimiter(',');
    sweep_cmd
        ->add_option("--bandwidths-gbps", bandwidths, "Throughput caps in GB/s, comma separated")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--seeds", seeds_per_cell, "Solver runs per cell")
        ->capture_default_str();
    sweep_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
    sweep_cmd->add_flag("--parallel", parallel, "Run sweep cells on all cores");
    sweep_cmd->add_option("--seed", seed, "Override the master seed");

    double resolution = 0.05;
    int trials = 100;
    double tolerance = 1e-3;
    std::uint64_t oracle_seed = 1;
    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle-check", "Compare analytic coverage against the rasterization oracle");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--resolution", resolution, "Raster column width in meters")
        ->capture_default_str();
    oracle_cmd->add_option("--trials", trials, "Randomized configurations to test")
        ->capture_default_str();
    oracle_cmd->add_option("--tolerance", tolerance, "Max allowed absolute error")
        ->capture_default_str();
    oracle_cmd->add_option("--seed", oracle_seed, "Trial generator seed")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // CLI11 returns 0 for --help; anything else is an operational error.
        return code == 0 ? elid::kExitOk : elid::kExitError;
    }

    const elid::RunOverrides overrides = make_overrides(seed, threads, width_rule);
    if (solve_cmd->parsed()) {
        return elid::cmd_solve(scenario_path, overrides, out_dir, std::cout, std::cerr);
    }
    if (eval_cmd->parsed()) {
        return elid::cmd_evaluate(scenario_path, placements_path, overrides, std::cout,
                                  std::cerr);
    }
    if (sweep_cmd->parsed()) {
        return elid::cmd_sweep(scenario_path, depths, bandwidths, seeds_per_cell, overrides,
                               out_dir, parallel, std::cout, std::cerr);
    }
    if (oracle_cmd->parsed()) {
        return elid::cmd_oracle_check(scenario_path, resolution, trials, oracle_seed,
                                      tolerance, overrides, std::cout, std::cerr);
    }
    return elid::kExitError;
}
