#pragma once

// Closed-form Lyapunov functions for the ring map and their discrete
// orbital derivatives.
//
//   V(x,y) = |y - 2x| + |2pi + x - 2y|      on the closed triangle S
//   U(x,y) = |x - 2y| + |2pi + y - 2x|      on the closed triangle R
//   L(x,y) : quadratic form glued along the diagonal, decreasing along
//            orbits away from the fixed points (conjectured complete).
//
// The four auxiliary functions psi_1..psi_4 satisfy, for the ring map G,
//   V(G(p)) = |psi_3(p)| + |psi_4(p)|,   V(p) = |psi_1(p)| + |psi_2(p)|,
// which turns the orbital derivative on each subregion of T1 into one of
// three linear combinations of the psi_j ("branch forms").

#include <cmath>
#include <optional>

#include "torusync/map.hpp"
#include "torusync/regions.hpp"
#include "torusync/torus.hpp"

namespace torusync {

// --- psi functions (lift coordinates) ------------------------------------

inline double psi1(LiftPoint p) { return two_pi + p.x - 2.0 * p.y; }
inline double psi2(LiftPoint p) { return p.y - 2.0 * p.x; }

inline double psi3(const MapSpec& s, LiftPoint p) {
    return 2.0 * p.x - p.y + 3.0 * s.a * std::sin(p.x) - 3.0 * s.a * std::sin(p.y - p.x);
}
inline double psi4(const MapSpec& s, LiftPoint p) {
    return two_pi + p.x - 2.0 * p.y - 3.0 * s.a * std::sin(p.y) - 3.0 * s.a * std::sin(p.y - p.x);
}

// --- Lyapunov functions ---------------------------------------------------

// V on the closure of S (upper-left triangle of D), lift coordinates.
inline double eval_V(LiftPoint p) {
    return std::abs(p.y - 2.0 * p.x) + std::abs(two_pi + p.x - 2.0 * p.y);
}

// U = V o Phi4 on the closure of R.
inline double eval_U(LiftPoint p) {
    return std::abs(p.x - 2.0 * p.y) + std::abs(two_pi + p.y - 2.0 * p.x);
}

// Candidate complete Lyapunov function: a positive-definite quadratic about
// the sink of each triangle, glued along the diagonal. Continuous on the
// torus (all seam jumps vanish identically).
inline double eval_L(TorusPoint p) {
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

// --- domain selection -----------------------------------------------------

// A torus point with a seam coordinate (0) has up to four D-representatives
// (coordinate 0 may be read as 2pi). Return one lying in the given closed
// region, preferring the plain representative; nullopt if none does.
inline std::optional<LiftPoint> d_representative_in(RegionId r, TorusPoint p) {
    const double xs[2] = {p.x, two_pi};
    const double ys[2] = {p.y, two_pi};
    int nx = p.x == 0.0 ? 2 : 1;
    int ny = p.y == 0.0 ? 2 : 1;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            LiftPoint c{xs[i], ys[j]};
            if (in_region(r, c)) return c;
        }
    return std::nullopt;
}

// --- orbital derivative ---------------------------------------------------

enum class LyapFunction { V, U };

// Discrete orbital derivative f(map(p)) - f(p), evaluated on a lift
// representative. The image is taken in the lift (the closed domain is
// forward invariant); if rounding pushes it outside, ImageLeftDomainError.
inline double orbital_derivative_lift(LyapFunction f, const MapSpec& s, LiftPoint rep) {
    RegionId dom = f == LyapFunction::V ? RegionId::S : RegionId::R;
    if (!in_region(dom, rep))
        throw ImageLeftDomainError("orbital derivative: point outside the function's domain");
    LiftPoint q = apply_map_lift(s, rep);
    if (!in_region(dom, q))
        throw ImageLeftDomainError("orbital derivative: image left the invariant domain");
    double fv = f == LyapFunction::V ? eval_V(rep) : eval_U(rep);
    double fq = f == LyapFunction::V ? eval_V(q) : eval_U(q);
    return fq - fv;
}

// Torus-point front end: picks the D-representative consistent with the
// function's invariant region.
inline double orbital_derivative(LyapFunction f, const MapSpec& s, TorusPoint p) {
    RegionId dom = f == LyapFunction::V ? RegionId::S : RegionId::R;
    auto rep = d_representative_in(dom, p);
    if (!rep)
        throw ImageLeftDomainError("orbital derivative: no D-representative in the function's domain");
    return orbital_derivative_lift(f, s, *rep);
}

// --- closed-form orbital derivative on T1 --------------------------------

// Branch forms of Vdot on the subregions of T1 (valid for the ring map):
//   T1_I  : -3a sin x + 3a sin y + 6a sin(y-x)
//   T1_II :  3a sin x + 3a sin y
//   T1_III:  3a sin x - 3a sin y - 6a sin(y-x)
inline double vdot_branch(RegionId sub, double a, LiftPoint p) {
    double sx = std::sin(p.x), sy = std::sin(p.y), syx = std::sin(p.y - p.x);
    switch (sub) {
        case RegionId::T1_I: return 3.0 * a * (-sx + sy + 2.0 * syx);
        case RegionId::T1_II: return 3.0 * a * (sx + sy);
        case RegionId::T1_III: return 3.0 * a * (sx - sy - 2.0 * syx);
        default:
            throw std::invalid_argument("vdot_branch: branch forms exist only on T1_I/T1_II/T1_III");
    }
}

// Closed-form Vdot via the psi decomposition:
//   Vdot = |psi_3| + |psi_4| - |psi_1| - |psi_2|.
// The identities g2 - 2 g1 = -psi_3 and 2pi + g1 - 2 g2 = psi_4 hold at
// every lift point, so this equals V(G(p)) - V(p) wherever V is meaningful.
inline double vdot_closed_form(const MapSpec& s, LiftPoint p) {
    if (!is_ring(s.family) || is_perturbed(s.family))
        throw std::invalid_argument("vdot_closed_form: defined for the unperturbed ring map");
    return std::abs(psi3(s, p)) + std::abs(psi4(s, p)) - std::abs(psi1(p)) - std::abs(psi2(p));
}

}  // namespace torusync
