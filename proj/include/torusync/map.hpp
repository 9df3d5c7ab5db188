#pragma once

// The synchronisation maps on T^2.
//
// Ring coupling (all-to-all):
//   g1 = x + a*(2 sin x + sin y + sin(x-y))
//   g2 = y + a*(sin x + 2 sin y + sin(y-x))
// Line coupling (nearest neighbour):
//   f1 = x + a*(2 sin x + sin y)
//   f2 = y + a*(sin x + 2 sin y)
// Perturbed variants add (delta1*zeta1, delta2*zeta2).
//
// The grouped arrangement x + a*(...) is deliberate: on the invariant sets
// {x=0}, {y=0} and {y=x} it makes the floating-point image land exactly on
// the set again (the summands cancel or coincide bit-for-bit), which keeps
// boundary orbits from drifting off by rounding.

#include <complex>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "torusync/torus.hpp"

namespace torusync {

enum class MapFamily { RingG, LineF, RingGPerturbed, LineFPerturbed };

inline bool is_perturbed(MapFamily f) {
    return f == MapFamily::RingGPerturbed || f == MapFamily::LineFPerturbed;
}
inline bool is_ring(MapFamily f) {
    return f == MapFamily::RingG || f == MapFamily::RingGPerturbed;
}

enum class ZetaKind { ConstantOnes, Custom };

// A scalar field on the torus with optional analytic partials.
struct ZetaField {
    std::function<double(double, double)> f;
    std::function<double(double, double)> dfdx;  // may be null
    std::function<double(double, double)> dfdy;  // may be null
};

struct CustomZeta {
    ZetaField z1, z2;
    bool has_partials() const { return z1.dfdx && z1.dfdy && z2.dfdx && z2.dfdy; }
};

struct MapSpec {
    MapFamily family = MapFamily::RingG;
    double a = 0.1;
    double delta1 = 0.0;
    double delta2 = 0.0;
    ZetaKind zeta = ZetaKind::ConstantOnes;
    std::shared_ptr<const CustomZeta> custom;  // set iff zeta == Custom

    static MapSpec ring(double a) { return validated({MapFamily::RingG, a}); }
    static MapSpec line(double a) { return validated({MapFamily::LineF, a}); }
    static MapSpec ring_perturbed(double a, double d1, double d2) {
        return validated({MapFamily::RingGPerturbed, a, d1, d2});
    }
    static MapSpec line_perturbed(double a, double d1, double d2) {
        return validated({MapFamily::LineFPerturbed, a, d1, d2});
    }
    static MapSpec ring_perturbed_custom(double a, double d1, double d2,
                                         std::shared_ptr<const CustomZeta> z) {
        MapSpec s{MapFamily::RingGPerturbed, a, d1, d2, ZetaKind::Custom, std::move(z)};
        return validated(s);
    }

    static MapSpec validated(MapSpec s) {
        if (!(s.a > 0.0 && s.a < 1.0 / 3.0))
            throw std::invalid_argument("MapSpec: coupling strength a must lie in (0, 1/3)");
        if (!is_perturbed(s.family) && (s.delta1 != 0.0 || s.delta2 != 0.0))
            throw std::invalid_argument("MapSpec: unperturbed family requires delta1 = delta2 = 0");
        if (s.zeta == ZetaKind::Custom && !s.custom)
            throw std::invalid_argument("MapSpec: Custom zeta requires field definitions");
        return s;
    }
};

// Perturbation term (delta1*zeta1, delta2*zeta2) evaluated at the lift point.
inline Vec2 perturbation(const MapSpec& s, LiftPoint p) {
    if (!is_perturbed(s.family)) return {0.0, 0.0};
    if (s.zeta == ZetaKind::ConstantOnes) return {s.delta1, s.delta2};
    return {s.delta1 * s.custom->z1.f(p.x, p.y), s.delta2 * s.custom->z2.f(p.x, p.y)};
}

// One step of the lift of the map: R^2 -> R^2, no wrapping.
inline LiftPoint apply_map_lift(const MapSpec& s, LiftPoint p) {
    double sx = std::sin(p.x), sy = std::sin(p.y);
    LiftPoint q;
    if (is_ring(s.family)) {
        double sxy = std::sin(p.x - p.y), syx = std::sin(p.y - p.x);
        q.x = p.x + s.a * ((2.0 * sx + sy) + sxy);
        q.y = p.y + s.a * ((sx + 2.0 * sy) + syx);
    } else {
        q.x = p.x + s.a * (2.0 * sx + sy);
        q.y = p.y + s.a * (sx + 2.0 * sy);
    }
    Vec2 d = perturbation(s, p);
    q.x += d.x;
    q.y += d.y;
    return q;
}

// One step on the torus: evaluate in the lift, wrap once.
inline TorusPoint apply_map(const MapSpec& s, TorusPoint p) {
    return wrap(apply_map_lift(s, lift(p)));
}

// --- jacobian ------------------------------------------------------------

struct Jacobian2 {
    double j11 = 0, j12 = 0, j21 = 0, j22 = 0;

    double det() const { return j11 * j22 - j12 * j21; }
    double trace() const { return j11 + j22; }

    // Eigenvalues, sorted by (re, im) ascending.
    std::pair<std::complex<double>, std::complex<double>> eigenvalues() const {
        double tr = trace();
        // (j11-j22)^2 + 4 j12 j21 equals tr^2 - 4 det but avoids the
        // catastrophic cancellation that ruins near-degenerate spectra.
        double disc = (j11 - j22) * (j11 - j22) + 4.0 * j12 * j21;
        std::complex<double> l1, l2;
        if (disc >= 0.0) {
            double r = std::sqrt(disc);
            l1 = (tr - r) / 2.0;
            l2 = (tr + r) / 2.0;
        } else {
            double r = std::sqrt(-disc);
            l1 = {tr / 2.0, -r / 2.0};
            l2 = {tr / 2.0, r / 2.0};
        }
        if (l2.real() < l1.real() ||
            (l2.real() == l1.real() && l2.imag() < l1.imag()))
            std::swap(l1, l2);
        return {l1, l2};
    }
};

// Analytic jacobian of the map at a lift point.
// Throws UnsupportedZetaError for a Custom zeta without analytic partials.
inline Jacobian2 jacobian(const MapSpec& s, LiftPoint p) {
    double a = s.a;
    double cx = std::cos(p.x), cy = std::cos(p.y);
    Jacobian2 J;
    if (is_ring(s.family)) {
        double cxy = std::cos(p.x - p.y);  // == cos(y-x)
        J.j11 = 1.0 + 2.0 * a * cx + a * cxy;
        J.j12 = a * cy - a * cxy;
        J.j21 = a * cx - a * cxy;
        J.j22 = 1.0 + 2.0 * a * cy + a * cxy;
    } else {
        J.j11 = 1.0 + 2.0 * a * cx;
        J.j12 = a * cy;
        J.j21 = a * cx;
        J.j22 = 1.0 + 2.0 * a * cy;
    }
    if (is_perturbed(s.family) && s.zeta == ZetaKind::Custom) {
        if (!s.custom->has_partials()) throw UnsupportedZetaError{};
        J.j11 += s.delta1 * s.custom->z1.dfdx(p.x, p.y);
        J.j12 += s.delta1 * s.custom->z1.dfdy(p.x, p.y);
        J.j21 += s.delta2 * s.custom->z2.dfdx(p.x, p.y);
        J.j22 += s.delta2 * s.custom->z2.dfdy(p.x, p.y);
    }
    // ConstantOnes perturbation has zero derivative: jacobian equals the
    // unperturbed one.
    return J;
}

// Central finite-difference jacobian (validation oracle for the analytic one).
inline Jacobian2 jacobian_fd(const MapSpec& s, LiftPoint p, double h = 1e-5) {
    auto fx = [&](LiftPoint q) { return apply_map_lift(s, q); };
    LiftPoint px1 = fx({p.x - h, p.y}), px2 = fx({p.x + h, p.y});
    LiftPoint py1 = fx({p.x, p.y - h}), py2 = fx({p.x, p.y + h});
    return Jacobian2{(px2.x - px1.x) / (2 * h), (py2.x - py1.x) / (2 * h),
                     (px2.y - px1.y) / (2 * h), (py2.y - py1.y) / (2 * h)};
}

// Orbit of length n+1 starting at p (includes p itself).
inline std::vector<TorusPoint> iterate(const MapSpec& s, TorusPoint p, int n) {
    std::vector<TorusPoint> orbit;
    orbit.reserve(static_cast<size_t>(n) + 1);
    orbit.push_back(p);
    for (int k = 0; k < n; ++k) {
        p = apply_map(s, p);
        orbit.push_back(p);
    }
    return orbit;
}

}  // namespace torusync
