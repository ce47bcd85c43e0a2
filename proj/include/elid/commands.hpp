#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "elid/csvio.hpp"
#include "elid/objective.hpp"
#include "elid/oracle.hpp"
#include "elid/scenario.hpp"
#include "elid/solver.hpp"

namespace elid {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;       // operational error (I/O, parse, validation)
inline constexpr int kExitInfeasible = 2;  // evaluation/solve ended on an infeasible best

/// Optional per-invocation overrides on top of the scenario file.
struct RunOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> num_threads;
    std::optional<WidthRule> width_rule;
};

/// Evaluation of a fixed placement set (no solving).
struct EvaluateReport {
    FitnessBreakdown breakdown;
    ConstraintReport constraints;
    double reported_coverage = 0.0;  // forced to zero on any constraint violation
    std::vector<CoverageFootprint> footprints;
    std::vector<DataEnergyProfile> profiles;
};

/// Evaluates fixed placements under a scenario. Throws ScenarioError when a
/// placement violates the box bounds or the list is longer than num_elids.
EvaluateReport evaluate_placements(const ScenarioConfig& config,
                                   std::span<const Placement> placements);

/// `solve`: run the swarm, write placements.csv, trace.csv and summary.txt
/// under out_dir. Returns kExitOk on a feasible best, kExitInfeasible
/// otherwise, kExitError on operational failure.
int cmd_solve(const std::string& scenario_path, const RunOverrides& overrides,
              const std::string& out_dir, std::ostream& out, std::ostream& err);

/// `evaluate`: print the fitness breakdown and per-constraint slack of a
/// placements file. Exit semantics mirror cmd_solve.
int cmd_evaluate(const std::string& scenario_path, const std::string& placements_path,
                 const RunOverrides& overrides, std::ostream& out, std::ostream& err);

/// `sweep`: solve each (octree depth, bandwidth) cell for several seeds and
/// write sweep.csv. Per-cell seeds derive from the master seed with
/// derive_seed(master, depth_index, bandwidth_index, repetition), so results
/// do not depend on cell execution order.
int cmd_sweep(const std::string& scenario_path, const std::vector<int>& depths,
              const std::vector<double>& bandwidths_gbps, int seeds_per_cell,
              const RunOverrides& overrides, const std::string& out_dir, bool parallel,
              std::ostream& out, std::ostream& err);

/// `oracle-check`: analytic-vs-raster equivalence over randomized
/// configurations. Returns kExitOk when the max absolute error stays within
/// tolerance, kExitInfeasible when it does not.
int cmd_oracle_check(const std::string& scenario_path, double resolution, int trials,
                     std::uint64_t seed, double tolerance, const RunOverrides& overrides,
                     std::ostream& out, std::ostream& err);

}  // namespace elid
