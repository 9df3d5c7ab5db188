#pragma once

// Fixed-point census: Newton search in the lift, deduplication on the torus,
// hyperbolic classification and parameter continuation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "torusync/map.hpp"
#include "torusync/parallel.hpp"
#include "torusync/torus.hpp"

namespace torusync {

enum class FixedPointKind { Source, Sink, Saddle, NonHyperbolic };

inline const char* to_string(FixedPointKind k) {
    switch (k) {
        case FixedPointKind::Source: return "source";
        case FixedPointKind::Sink: return "sink";
        case FixedPointKind::Saddle: return "saddle";
        default: return "nonhyperbolic";
    }
}

// Hyperbolicity tolerance: |(|lambda| - 1)| <= this => treated as on the
// unit circle.
inline constexpr double classification_tol = 1e-8;

inline FixedPointKind classify_eigenvalues(std::complex<double> l1, std::complex<double> l2) {
    double m1 = std::abs(l1), m2 = std::abs(l2);
    if (std::abs(m1 - 1.0) <= classification_tol || std::abs(m2 - 1.0) <= classification_tol)
        return FixedPointKind::NonHyperbolic;
    bool in1 = m1 < 1.0, in2 = m2 < 1.0;
    if (in1 && in2) return FixedPointKind::Sink;
    if (!in1 && !in2) return FixedPointKind::Source;
    return FixedPointKind::Saddle;
}

struct FixedPointRecord {
    TorusPoint location;
    Jacobian2 jac;
    std::complex<double> lambda1, lambda2;  // sorted by (re, im)
    FixedPointKind kind = FixedPointKind::NonHyperbolic;
    double residual = 0.0;  // |f(p) - p| on the torus
};

inline FixedPointRecord make_record(const MapSpec& s, TorusPoint p) {
    FixedPointRecord r;
    r.location = p;
    r.jac = jacobian(s, lift(p));
    auto [l1, l2] = r.jac.eigenvalues();
    r.lambda1 = l1;
    r.lambda2 = l2;
    r.kind = classify_eigenvalues(l1, l2);
    r.residual = torus_distance(apply_map(s, p), p);
    return r;
}

// Newton iteration for f(p) = p in the lift.
// Throws SingularJacobianError / NoConvergenceError.
inline FixedPointRecord newton_fixed_point(const MapSpec& s, TorusPoint seed,
                                           double tol = 1e-12, int max_iter = 50) {
    LiftPoint p = lift(seed);
    LiftPoint best = p;
    double best_r = std::numeric_limits<double>::infinity();
    for (int it = 0; it < max_iter; ++it) {
        LiftPoint q = apply_map_lift(s, p);
        Vec2 r{q.x - p.x, q.y - p.y};
        double rn = norm(r);
        if (rn < best_r) {
            best_r = rn;
            best = p;
        }
        // Once below tol keep stepping until the residual stops improving:
        // stopping at the first sub-tol iterate leaves ~1e-12 in the location,
        // which near-degenerate spectra amplify into ~1e-8 eigenvalue error.
        if (rn == 0.0 || (best_r < tol && rn > best_r)) break;
        Jacobian2 J = jacobian(s, p);
        // Solve (J - I) dp = -r.
        double m11 = J.j11 - 1.0, m12 = J.j12, m21 = J.j21, m22 = J.j22 - 1.0;
        double det = m11 * m22 - m12 * m21;
        if (std::abs(det) < 1e-14) throw SingularJacobianError{};
        double dx = (-r.x * m22 + r.y * m12) / det;
        double dy = (r.x * m21 - r.y * m11) / det;
        p.x += dx;
        p.y += dy;
    }
    if (!(best_r < tol)) throw NoConvergenceError("newton: no convergence within max_iter");
    FixedPointRecord rec = make_record(s, wrap(best));
    if (rec.residual > 1e-10)
        throw NoConvergenceError("newton: converged in lift but torus residual too large");
    return rec;
}

// Scan a uniform grid of seeds, run Newton from each, deduplicate on the
// torus (radius 1e-6), sort by (x, y). Seeds that fail to converge are
// skipped. Deterministic for fixed density regardless of thread count.
inline std::vector<FixedPointRecord> enumerate_fixed_points(const MapSpec& s,
                                                            int grid_density = 32) {
    const int n = grid_density;
    std::vector<std::optional<FixedPointRecord>> hits(static_cast<size_t>(n) * n);
    detail::parallel_for(0, static_cast<long>(n) * n, [&](long k) {
        int i = static_cast<int>(k % n), j = static_cast<int>(k / n);
        TorusPoint seed{(i + 0.5) * two_pi / n, (j + 0.5) * two_pi / n};
        try {
            hits[static_cast<size_t>(k)] = newton_fixed_point(s, seed);
        } catch (const std::exception&) {
            // nonconvergent or singular seed: skip
        }
    });
    std::vector<FixedPointRecord> out;
    for (const auto& h : hits) {
        if (!h) continue;
        bool dup = false;
        for (const auto& r : out)
            if (torus_distance(r.location, h->location) < 1e-6) { dup = true; break; }
        if (!dup) out.push_back(*h);
    }
    // Newton roots a hair under 2pi are the same point as 0; fold them back so
    // the reported representative (and hence the sort order) is canonical.
    for (auto& r : out) {
        TorusPoint p = r.location;
        bool snapped = false;
        if (two_pi - p.x <= 1e-9) { p.x = 0.0; snapped = true; }
        if (two_pi - p.y <= 1e-9) { p.y = 0.0; snapped = true; }
        if (snapped) r = make_record(s, p);
    }
    // Sort on coordinates quantized to 1e-9 so points that agree to rounding
    // error compare equal in x and fall through to y (raw doubles can differ
    // in the last ulp and scramble the intended order).
    auto key = [](const FixedPointRecord& r) {
        return std::pair{std::llround(r.location.x * 1e9), std::llround(r.location.y * 1e9)};
    };
    std::sort(out.begin(), out.end(),
              [&](const FixedPointRecord& a, const FixedPointRecord& b) { return key(a) < key(b); });
    return out;
}

inline std::vector<FixedPointRecord> sinks_of(const std::vector<FixedPointRecord>& census) {
    std::vector<FixedPointRecord> s;
    for (const auto& r : census)
        if (r.kind == FixedPointKind::Sink) s.push_back(r);
    return s;
}

// --- continuation --------------------------------------------------------

struct ContinuationPath {
    std::vector<double> t;  // delta scaling in [0, 1]
    std::vector<FixedPointRecord> records;

    const FixedPointRecord& back() const { return records.back(); }
};

// Follow a fixed point of `base` as the deltas scale linearly to those of
// `target`. Preconditions: base and target differ only in the delta fields.
// Throws ContinuationBrokenError on kind change, Newton failure or a jump
// larger than the step bound.
inline ContinuationPath continue_fixed_point(const MapSpec& base, const MapSpec& target,
                                             const FixedPointRecord& start, int steps = 10) {
    if (base.a != target.a || is_ring(base.family) != is_ring(target.family))
        throw std::invalid_argument("continue_fixed_point: base and target must differ only in deltas");
    const double step_bound = 0.5;  // max allowed torus motion per step
    ContinuationPath path;
    path.t.push_back(0.0);
    path.records.push_back(start);
    TorusPoint p = start.location;
    for (int k = 1; k <= steps; ++k) {
        double t = static_cast<double>(k) / steps;
        MapSpec st = target;
        st.family = is_ring(target.family) ? MapFamily::RingGPerturbed : MapFamily::LineFPerturbed;
        st.delta1 = t * target.delta1;
        st.delta2 = t * target.delta2;
        if (st.delta1 == 0.0 && st.delta2 == 0.0) st = base;
        FixedPointRecord rec;
        try {
            rec = newton_fixed_point(st, p);
        } catch (const std::exception& e) {
            throw ContinuationBrokenError(t, e.what());
        }
        if (rec.kind != start.kind)
            throw ContinuationBrokenError(t, "fixed point changed stability type");
        if (torus_distance(rec.location, p) > step_bound)
            throw ContinuationBrokenError(t, "fixed point jumped farther than the step bound");
        p = rec.location;
        path.t.push_back(t);
        path.records.push_back(rec);
    }
    return path;
}

}  // namespace torusync
