#pragma once

// Basin-of-attraction grids and convergence-rate measurement.
//
// A cell of the N x N grid is labelled by the first sink whose eps-ball its
// center's orbit enters, or Unresolved if no capture happens within the
// iteration budget (separatrix points). Counts are exact integers; the
// label array is deterministic and independent of the worker count.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "torusync/fixed_points.hpp"
#include "torusync/map.hpp"
#include "torusync/parallel.hpp"
#include "torusync/torus.hpp"

namespace torusync {

inline constexpr std::int16_t basin_unresolved = -1;

// Index of the first sink whose eps-ball the orbit enters (the start point
// counts as iterate 0); nullopt if the budget runs out.
inline std::optional<int> classify_point(const MapSpec& s, TorusPoint p,
                                         const std::vector<TorusPoint>& sinks,
                                         double eps = 1e-6, long max_iter = 100000) {
    for (long n = 0; n <= max_iter; ++n) {
        for (size_t k = 0; k < sinks.size(); ++k)
            if (torus_distance(p, sinks[k]) <= eps) return static_cast<int>(k);
        p = apply_map(s, p);
    }
    return std::nullopt;
}

struct BasinGrid {
    int resolution = 0;
    std::vector<TorusPoint> sinks;       // census order (sorted by x, then y)
    std::vector<std::int16_t> labels;    // row-major: labels[j*N + i], cell center
                                         // ((i+.5)h, (j+.5)h), h = 2pi/N
    std::vector<long> counts;            // per sink
    long unresolved_count = 0;

    long cells() const { return static_cast<long>(resolution) * resolution; }
    std::int16_t label(int i, int j) const {
        return labels[static_cast<size_t>(j) * resolution + i];
    }
    double fraction(size_t k) const {
        return static_cast<double>(counts[k]) / static_cast<double>(cells());
    }
    double unresolved_fraction() const {
        return static_cast<double>(unresolved_count) / static_cast<double>(cells());
    }

    friend bool operator==(const BasinGrid& a, const BasinGrid& b) {
        return a.resolution == b.resolution && a.labels == b.labels &&
               a.sinks.size() == b.sinks.size() && a.counts == b.counts &&
               a.unresolved_count == b.unresolved_count;
    }
};

// Label every cell center. Sinks come from the census of `s` unless an
// explicit list is supplied (used for perturbed maps with continued sinks).
inline BasinGrid basin_grid(const MapSpec& s, int resolution, double eps = 1e-6,
                            long max_iter = 100000,
                            std::optional<std::vector<TorusPoint>> sink_override = {}) {
    if (resolution < 16) throw std::invalid_argument("basin_grid: resolution must be >= 16");
    BasinGrid g;
    g.resolution = resolution;
    if (sink_override) {
        g.sinks = *sink_override;
    } else {
        for (const auto& r : sinks_of(enumerate_fixed_points(s))) g.sinks.push_back(r.location);
    }
    g.labels.assign(static_cast<size_t>(g.cells()), basin_unresolved);
    const double h = two_pi / resolution;
    detail::parallel_for(0, g.cells(), [&](long c) {
        int i = static_cast<int>(c % resolution), j = static_cast<int>(c / resolution);
        TorusPoint p{(i + 0.5) * h, (j + 0.5) * h};
        auto lab = classify_point(s, p, g.sinks, eps, max_iter);
        if (lab) g.labels[static_cast<size_t>(c)] = static_cast<std::int16_t>(*lab);
    });
    g.counts.assign(g.sinks.size(), 0);
    g.unresolved_count = 0;
    for (auto l : g.labels) {
        if (l == basin_unresolved)
            g.unresolved_count++;
        else
            g.counts[static_cast<size_t>(l)]++;
    }
    return g;
}

// --- convergence rate -----------------------------------------------------

struct RateEstimate {
    double slope = 0.0;       // mean per-step log-distance decrement
    double predicted = 0.0;   // log(spectral radius at the sink)
    double relative_error = 0.0;
    long window_steps = 0;
};

// Measure the exponential contraction toward a sink on the distance window
// (1e-12, 1e-2), where the linearisation dominates. Throws
// RateWindowEmptyError if the orbit never yields two window iterates.
inline RateEstimate convergence_rate(const MapSpec& s, TorusPoint p,
                                     const FixedPointRecord& sink, long max_iter = 100000) {
    const double d_hi = 1e-2, d_lo = 1e-12;
    std::optional<double> first_log;
    long first_n = 0;
    double last_log = 0.0;
    long last_n = 0;
    TorusPoint q = p;
    for (long n = 0; n <= max_iter; ++n) {
        double d = torus_distance(q, sink.location);
        if (d <= d_lo) break;
        if (d < d_hi) {
            if (!first_log) {
                first_log = std::log(d);
                first_n = n;
            }
            last_log = std::log(d);
            last_n = n;
        }
        TorusPoint next = apply_map(s, q);
        // Numerically fixed short of the d_lo cutoff: the remaining gap is the
        // offset between the orbit's own limit and the census location, and
        // padding the window with stalled samples would flatten the slope.
        if (next.x == q.x && next.y == q.y) break;
        q = next;
    }
    if (!first_log || last_n == first_n) throw RateWindowEmptyError{};
    RateEstimate r;
    r.window_steps = last_n - first_n;
    r.slope = (last_log - *first_log) / static_cast<double>(r.window_steps);
    double rho = std::max(std::abs(sink.lambda1), std::abs(sink.lambda2));
    r.predicted = std::log(rho);
    r.relative_error = std::abs(r.slope - r.predicted) / std::abs(r.predicted);
    return r;
}

}  // namespace torusync
