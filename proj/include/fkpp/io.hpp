#pragma once

#include <string>
#include <vector>

#include "fkpp/model.hpp"
#include "fkpp/scaling.hpp"

namespace fkpp::io {

/// Shortest decimal string that round-trips the double (17 significant
/// digits), so rewritten CSV files are byte-identical.
std::string format17(double value);

/// Long-format snapshot table, columns t,x,rho.
void write_trajectory_csv(const std::string& path, const std::vector<ScalarField>& snapshots);

/// Inverse of write_trajectory_csv: groups rows by time and rebuilds the
/// shared grid.
std::vector<ScalarField> read_trajectory_csv(const std::string& path);

/// Columns t,x_front.
void write_front_trace_csv(const std::string& path, const FrontTrace& trace);

struct ActionSample {
    double x = 0.0;
    double t = 0.0;
    double g = 0.0;
};

/// Columns x,t,G — one closed-form action tabulated for plotting.
void write_action_table_csv(const std::string& path, const std::vector<ActionSample>& samples);

/// Columns epsilon,front_error,hj_residual_median,g_eq_residual_median.
/// Failed rows keep their epsilon and carry nan statistics.
void write_sweep_csv(const std::string& path, const std::vector<scaling::SweepRow>& rows);

} // namespace fkpp::io
