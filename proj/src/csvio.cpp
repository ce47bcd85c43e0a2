#include "elid/csvio.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace elid {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_placements_csv(std::ostream& out, std::span<const Placement> placements,
                          std::span<const CoverageFootprint> fps,
                          std::span<const DataEnergyProfile> profiles) {
    out << "index,placed,x_m,z_m,omega_rad,l_near_m,l_far_m,l_width_m,"
           "a_total_m2,a_rect_m2,x_start_m,x_end_m,data_bytes,energy_w\n";
    for (std::size_t m = 0; m < placements.size(); ++m) {
        out << m << ',' << (placements[m].placed ? 1 : 0) << ','
            << format_double(placements[m].x) << ',' << format_double(placements[m].z) << ','
            << format_double(fps[m].omega) << ',' << format_double(fps[m].l_near) << ','
            << format_double(fps[m].l_far) << ',' << format_double(fps[m].l_width) << ','
            << format_double(fps[m].a_total) << ',' << format_double(fps[m].a_rect) << ','
            << format_double(fps[m].x_start) << ',' << format_double(fps[m].x_end) << ','
            << format_double(profiles[m].data_bytes) << ','
            << format_double(profiles[m].energy_w) << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& text, int line_number) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || (end && *end != '\0' && *end != '\r')) {
        throw std::runtime_error("placements file: bad number '" + text + "' on line " +
                                 std::to_string(line_number));
    }
    return value;
}

}  // namespace

std::vector<Placement> read_placements_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open placements file: " + path);

    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("placements file is empty (missing header): " + path);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const std::vector<std::string> header = split_csv_line(line);
    int col_x = -1;
    int col_z = -1;
    int col_placed = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "x_m") col_x = static_cast<int>(i);
        if (header[i] == "z_m") col_z = static_cast<int>(i);
        if (header[i] == "placed") col_placed = static_cast<int>(i);
    }
    if (col_x < 0 || col_z < 0 || col_placed < 0) {
        throw std::runtime_error(
            "placements file must have columns placed, x_m and z_m: " + path);
    }

    std::vector<Placement> placements;
    int line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        const auto need = static_cast<std::size_t>(std::max({col_x, col_z, col_placed})) + 1;
        if (fields.size() < need) {
            throw std::runtime_error("placements file: too few columns on line " +
                                     std::to_string(line_number));
        }
        Placement p;
        p.x = parse_double(fields[static_cast<std::size_t>(col_x)], line_number);
        p.z = parse_double(fields[static_cast<std::size_t>(col_z)], line_number);
        p.placed = parse_double(fields[static_cast<std::size_t>(col_placed)], line_number) != 0.0;
        placements.push_back(p);
    }
    return placements;
}

void write_trace_csv(std::ostream& out, std::span<const TracePoint> trace) {
    out << "iteration,best_fitness,best_coverage\n";
    for (std::size_t t = 0; t < trace.size(); ++t) {
        out << t << ',' << format_double(trace[t].best_fitness) << ','
            << format_double(trace[t].best_coverage) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << "d,bandwidth_gbps,seed,coverage,fitness,lamps,iterations,"
           "cell_median_coverage\n";
    for (const SweepRow& row : rows) {
        out << row.octree_depth << ',' << format_double(row.bandwidth_gbps) << ','
            << row.seed << ',' << format_double(row.coverage) << ','
            << format_double(row.fitness) << ',' << row.lamps << ',' << row.iterations
            << ',' << format_double(row.cell_median_coverage) << '\n';
    }
}

}  // namespace elid
