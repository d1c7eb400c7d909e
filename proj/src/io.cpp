#include "fkpp/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

#include "fkpp/errors.hpp"

namespace fkpp::io {

std::string format17(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw file_error("cannot open '" + path + "' for writing");
    }
    return out;
}

void finish_write(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw file_error("write to '" + path + "' failed");
    }
}

} // namespace

void write_trajectory_csv(const std::string& path, const std::vector<ScalarField>& snapshots) {
    std::ofstream out = open_for_write(path);
    out << "t,x,rho\n";
    for (const ScalarField& snapshot : snapshots) {
        const std::string t = format17(snapshot.time);
        for (std::size_t i = 0; i < snapshot.values.size(); ++i) {
            out << t << ',' << format17(snapshot.grid->x[i]) << ','
                << format17(snapshot.values[i]) << '\n';
        }
    }
    finish_write(out, path);
}

std::vector<ScalarField> read_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw file_error("cannot open '" + path + "' for reading");
    }
    std::string line;
    if (!std::getline(in, line) || line != "t,x,rho") {
        throw file_error("'" + path + "' is not a trajectory table (expected header t,x,rho)");
    }

    std::vector<double> xs, first_xs, rhos;
    std::vector<ScalarField> snapshots;
    std::vector<std::pair<double, std::vector<double>>> blocks; // (t, rho values)
    double current_t = std::numeric_limits<double>::quiet_NaN();
    bool have_block = false;
    std::size_t line_no = 1;

    auto flush_block = [&]() {
        if (!have_block) {
            return;
        }
        if (first_xs.empty()) {
            first_xs = xs;
        } else if (xs != first_xs) {
            throw file_error("'" + path + "' snapshots do not share one grid");
        }
        blocks.emplace_back(current_t, std::move(rhos));
        xs.clear();
        rhos = {};
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const char* p = line.c_str();
        char* end = nullptr;
        const double t = std::strtod(p, &end);
        if (end == p || *end != ',') {
            throw file_error("'" + path + "' line " + std::to_string(line_no) + ": bad row");
        }
        p = end + 1;
        const double x = std::strtod(p, &end);
        if (end == p || *end != ',') {
            throw file_error("'" + path + "' line " + std::to_string(line_no) + ": bad row");
        }
        p = end + 1;
        const double rho = std::strtod(p, &end);
        if (end == p || *end != '\0') {
            throw file_error("'" + path + "' line " + std::to_string(line_no) + ": bad row");
        }
        if (!have_block || t != current_t) {
            flush_block();
            current_t = t;
            have_block = true;
        }
        xs.push_back(x);
        rhos.push_back(rho);
    }
    flush_block();

    if (blocks.empty() || first_xs.size() < 3) {
        throw file_error("'" + path + "' holds no usable snapshots");
    }
    const GridPtr grid = make_grid_ptr(first_xs.front(), first_xs.back(), first_xs.size());
    snapshots.reserve(blocks.size());
    for (auto& [t, values] : blocks) {
        if (values.size() != grid->n) {
            throw file_error("'" + path + "' snapshots do not share one grid");
        }
        snapshots.push_back({grid, std::move(values), t});
    }
    return snapshots;
}

void write_front_trace_csv(const std::string& path, const FrontTrace& trace) {
    std::ofstream out = open_for_write(path);
    out << "t,x_front\n";
    for (const FrontSample& sample : trace.samples) {
        out << format17(sample.t) << ',' << format17(sample.x) << '\n';
    }
    finish_write(out, path);
}

void write_action_table_csv(const std::string& path, const std::vector<ActionSample>& samples) {
    std::ofstream out = open_for_write(path);
    out << "x,t,G\n";
    for (const ActionSample& sample : samples) {
        out << format17(sample.x) << ',' << format17(sample.t) << ',' << format17(sample.g)
            << '\n';
    }
    finish_write(out, path);
}

void write_sweep_csv(const std::string& path, const std::vector<scaling::SweepRow>& rows) {
    std::ofstream out = open_for_write(path);
    out << "epsilon,front_error,hj_residual_median,g_eq_residual_median\n";
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const scaling::SweepRow& row : rows) {
        if (row.ok) {
            out << format17(row.epsilon) << ',' << format17(row.front_error) << ','
                << format17(row.hj_residual_median) << ',' << format17(row.g_eq_residual_median)
                << '\n';
        } else {
            out << format17(row.epsilon) << ',' << format17(nan) << ',' << format17(nan) << ','
                << format17(nan) << '\n';
        }
    }
    finish_write(out, path);
}

} // namespace fkpp::io
