#include "fkpp/front.hpp"

#include <cmath>
#include <string>

#include "fkpp/errors.hpp"

namespace fkpp::front {

namespace {

struct LineFit {
    double slope = 0.0;
    double stderr_ = 0.0;
};

/// Ordinary least squares y = a + b x; stderr is the standard error of b.
LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t m = xs.size();
    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= static_cast<double>(m);
    y_mean /= static_cast<double>(m);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double dxi = xs[i] - x_mean;
        sxx += dxi * dxi;
        sxy += dxi * (ys[i] - y_mean);
    }
    if (!(sxx > 0.0)) {
        throw insufficient_samples_error("all abscissae coincide; slope is undefined");
    }
    LineFit fit;
    fit.slope = sxy / sxx;

    double sse = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = ys[i] - y_mean - fit.slope * (xs[i] - x_mean);
        sse += r * r;
    }
    fit.stderr_ = m > 2 ? std::sqrt(sse / (static_cast<double>(m - 2) * sxx)) : 0.0;
    return fit;
}

} // namespace

double front_position(const ScalarField& field, double level) {
    if (!(level > 0.0) || !(level < 1.0)) {
        throw invalid_bounds_error("crossing level must lie in (0, 1), got " +
                                   std::to_string(level));
    }
    const std::vector<double>& v = field.values;
    const std::vector<double>& x = field.grid->x;
    for (std::size_t i = v.size() - 1; i-- > 0;) {
        if (v[i] >= level && v[i + 1] < level) {
            const double t = (v[i] - level) / (v[i] - v[i + 1]);
            return x[i] + t * (x[i + 1] - x[i]);
        }
    }
    throw no_crossing_error("field never crosses level " + std::to_string(level) +
                            " downward");
}

FrontTrace trace_front(const std::vector<ScalarField>& snapshots, double level) {
    FrontTrace trace;
    trace.level = level;
    for (const ScalarField& snapshot : snapshots) {
        try {
            trace.samples.push_back({snapshot.time, front_position(snapshot, level)});
        } catch (const no_crossing_error&) {
            // The front may not have formed yet (or has left the window);
            // such snapshots carry no position.
        }
    }
    if (trace.samples.empty()) {
        throw no_crossing_error("no snapshot crosses level " + std::to_string(level));
    }
    return trace;
}

SpeedFit front_speed(const FrontTrace& trace, double fit_window) {
    if (!(fit_window > 0.0) || fit_window > 1.0) {
        throw invalid_bounds_error("fit window must lie in (0, 1], got " +
                                   std::to_string(fit_window));
    }
    const std::size_t total = trace.samples.size();
    const std::size_t count = std::min(
        total, static_cast<std::size_t>(
                   std::ceil(fit_window * static_cast<double>(total) - 1e-12)));
    if (count < 10) {
        throw insufficient_samples_error("speed fit needs at least 10 samples, window has " +
                                         std::to_string(count));
    }
    std::vector<double> ts, xs;
    ts.reserve(count);
    xs.reserve(count);
    for (std::size_t i = total - count; i < total; ++i) {
        ts.push_back(trace.samples[i].t);
        xs.push_back(trace.samples[i].x);
    }
    const LineFit fit = fit_line(ts, xs);
    return {fit.slope, fit.stderr_, count};
}

double decay_rate(const ScalarField& field, double rho_lo, double rho_hi) {
    if (!(rho_lo > 0.0) || !(rho_lo < rho_hi)) {
        throw invalid_bounds_error("need 0 < rho_lo < rho_hi, got [" + std::to_string(rho_lo) +
                                   ", " + std::to_string(rho_hi) + "]");
    }
    std::vector<double> xs, logs;
    for (std::size_t i = 0; i < field.values.size(); ++i) {
        const double r = field.values[i];
        if (r >= rho_lo && r <= rho_hi) {
            xs.push_back(field.grid->x[i]);
            logs.push_back(std::log(r));
        }
    }
    if (xs.size() < 10) {
        throw insufficient_samples_error("decay fit needs at least 10 nodes in the band, found " +
                                         std::to_string(xs.size()));
    }
    return -fit_line(xs, logs).slope;
}

} // namespace fkpp::front
