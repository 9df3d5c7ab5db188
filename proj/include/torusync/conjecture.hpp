#pragma once

// Numeric support for the "complete Lyapunov function" conjecture: scan
// L(G(p)) - L(p) on a grid, excluding small balls around the six fixed
// points, and measure the glue-seam jumps of L (identically zero in exact
// arithmetic).

#include <algorithm>
#include <vector>

#include "torusync/lyapunov.hpp"
#include "torusync/map.hpp"
#include "torusync/parallel.hpp"
#include "torusync/segments.hpp"
#include "torusync/torus.hpp"

namespace torusync {

// L evaluated by lift coordinates with the same diagonal gluing rule.
inline double eval_L_lift(LiftPoint p) {
    const double q = two_pi / 3.0;
    double ux, uy;
    if (p.y >= p.x) {
        ux = p.x - q;
        uy = p.y - 2.0 * q;
    } else {
        ux = p.y - q;
        uy = p.x - 2.0 * q;
    }
    return ux * ux + uy * uy - ux * uy;
}

struct ConjectureReport {
    int resolution = 0;
    double exclusion_radius = 0.0;
    long cells_checked = 0;
    double max_increment = 0.0;  // max of L(G(p)) - L(p) outside the balls
    TorusPoint argmax;
    double seam_x_max = 0.0;     // |L(0,y) - L(2pi,y)|
    double seam_y_max = 0.0;     // |L(x,0) - L(x,2pi)|
    double seam_diag_max = 0.0;  // branch mismatch on y = x

    bool negative_outside() const { return max_increment < 0.0; }
};

inline ConjectureReport conjecture_scan(const MapSpec& s, int resolution,
                                        double exclusion_radius = 0.05) {
    ConjectureReport rep;
    rep.resolution = resolution;
    rep.exclusion_radius = exclusion_radius;

    std::vector<TorusPoint> fps;
    for (int f = 0; f < 6; ++f)
        fps.push_back(fixed_point_location(static_cast<FixedPointId>(f)));

    const double h = two_pi / resolution;
    struct RowMax {
        double val = -std::numeric_limits<double>::infinity();
        TorusPoint at;
        long n = 0;
    };
    std::vector<RowMax> rows(static_cast<size_t>(resolution));
    detail::parallel_for(0, resolution, [&](long j) {
        RowMax& rm = rows[static_cast<size_t>(j)];
        for (int i = 0; i < resolution; ++i) {
            TorusPoint p{(i + 0.5) * h, (j + 0.5) * h};
            bool excluded = false;
            for (const auto& f : fps)
                if (torus_distance(p, f) <= exclusion_radius) { excluded = true; break; }
            if (excluded) continue;
            double inc = eval_L(apply_map(s, p)) - eval_L(p);
            rm.n++;
            if (inc > rm.val) {
                rm.val = inc;
                rm.at = p;
            }
        }
    });
    rep.max_increment = -std::numeric_limits<double>::infinity();
    for (const auto& rm : rows) {
        rep.cells_checked += rm.n;
        if (rm.n > 0 && rm.val > rep.max_increment) {
            rep.max_increment = rm.val;
            rep.argmax = rm.at;
        }
    }

    for (int k = 0; k <= resolution; ++k) {
        double t = k * h;
        rep.seam_x_max = std::max(
            rep.seam_x_max, std::abs(eval_L_lift({0.0, t}) - eval_L_lift({two_pi, t})));
        rep.seam_y_max = std::max(
            rep.seam_y_max, std::abs(eval_L_lift({t, 0.0}) - eval_L_lift({t, two_pi})));
        const double q = two_pi / 3.0;
        // Branch mismatch on y = x: upper uses (x-q, y-2q), lower (y-q, x-2q).
        double ux = t - q, uy = t - 2 * q;
        double upper = ux * ux + uy * uy - ux * uy;
        double lx = t - q, ly = t - 2 * q;
        double lower = lx * lx + ly * ly - lx * ly;
        rep.seam_diag_max = std::max(rep.seam_diag_max, std::abs(upper - lower));
    }
    return rep;
}

}  // namespace torusync
