#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "elid/datamodel.hpp"
#include "elid/geometry.hpp"
#include "elid/solver.hpp"

namespace elid {

/// Shortest-roundtrip decimal form of a double ("%.17g" is exact under
/// strtod); all CSV output goes through this so emitted files re-read
/// bit-identically.
std::string format_double(double value);

void write_placements_csv(std::ostream& out, std::span<const Placement> placements,
                          std::span<const CoverageFootprint> fps,
                          std::span<const DataEnergyProfile> profiles);

/// Reads a placements table. Accepts both the full table emitted by the
/// solve command and a minimal one; the columns placed, x_m and z_m are
/// located by header name, everything else is ignored.
/// Throws std::runtime_error with a line diagnostic on malformed input.
std::vector<Placement> read_placements_csv(const std::string& path);

void write_trace_csv(std::ostream& out, std::span<const TracePoint> trace);

struct SweepRow {
    int octree_depth = 0;
    double bandwidth_gbps = 0.0;
    std::uint64_t seed = 0;
    double coverage = 0.0;  // reported coverage: zero when the best is infeasible
    double fitness = 0.0;
    int lamps = 0;
    int iterations = 0;
    double cell_median_coverage = 0.0;
};

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace elid
