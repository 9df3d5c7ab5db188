#pragma once

// The region decomposition of the fundamental domain used by the Lyapunov
// analysis of the ring map.
//
//   S  = upper triangle  {y > x},  R = lower triangle {y < x}
//   S splits along the antidiagonal into T2 (below) and T1 (above);
//   R splits into T3 / T4 by the same reflection.
//   T1 further splits by the lines y = 2x and y = pi + x/2 into
//   T1_I (left), T1_II (middle) and T1_III (right).
//
// Memberships are closed (boundary points belong to every adjacent region).

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "torusync/torus.hpp"

namespace torusync {

enum class RegionId { S, R, T1, T2, T3, T4, T1_I, T1_II, T1_III };

inline const char* to_string(RegionId r) {
    switch (r) {
        case RegionId::S: return "S";
        case RegionId::R: return "R";
        case RegionId::T1: return "T1";
        case RegionId::T2: return "T2";
        case RegionId::T3: return "T3";
        case RegionId::T4: return "T4";
        case RegionId::T1_I: return "T1_I";
        case RegionId::T1_II: return "T1_II";
        default: return "T1_III";
    }
}

// Closed membership of a lift point (expected in the closure of D).
inline bool in_region(RegionId r, LiftPoint p) {
    double x = p.x, y = p.y;
    bool inD = x >= 0.0 && x <= two_pi && y >= 0.0 && y <= two_pi;
    switch (r) {
        case RegionId::S: return inD && y >= x;
        case RegionId::R: return inD && y <= x;
        case RegionId::T1: return inD && y >= x && y >= two_pi - x;
        case RegionId::T2: return inD && y >= x && y <= two_pi - x;
        case RegionId::T3: return inD && y <= x && y <= two_pi - x;
        case RegionId::T4: return inD && y <= x && y >= two_pi - x;
        case RegionId::T1_I:
            return in_region(RegionId::T1, p) && y >= 2.0 * x;
        case RegionId::T1_II:
            return in_region(RegionId::T1, p) && y <= 2.0 * x && 2.0 * y >= two_pi + x;
        case RegionId::T1_III:
            return in_region(RegionId::T1, p) && 2.0 * y <= two_pi + x;
    }
    return false;
}

// All closed regions containing the D-representative of p.
inline std::vector<RegionId> region_of(TorusPoint p) {
    static constexpr std::array<RegionId, 9> all = {
        RegionId::S, RegionId::R, RegionId::T1, RegionId::T2, RegionId::T3,
        RegionId::T4, RegionId::T1_I, RegionId::T1_II, RegionId::T1_III};
    std::vector<RegionId> out;
    for (RegionId r : all)
        if (in_region(r, lift(p))) out.push_back(r);
    return out;
}

// --- polygon form for the certifier --------------------------------------

// Affine functional cx*x + cy*y + cpi*pi with small-integer coefficients.
// Keeping the constant as a pi-multiple lets region constraints and
// evaluation targets share one exact representation, so the certifier can
// clamp a target's range against a proportional constraint without rounding.
struct AffineForm {
    double cx = 0, cy = 0, cpi = 0;

    double eval(double x, double y) const { return cx * x + cy * y + cpi * pi; }

    // b = lambda * a with lambda > 0 (coefficients are small integers, so
    // the cross products are exact).
    friend bool proportional_pos(const AffineForm& a, const AffineForm& b) {
        if (a.cx * b.cy != a.cy * b.cx || a.cx * b.cpi != a.cpi * b.cx ||
            a.cy * b.cpi != a.cpi * b.cy)
            return false;
        double da = a.cx != 0 ? a.cx : (a.cy != 0 ? a.cy : a.cpi);
        double db = b.cx != 0 ? b.cx : (b.cy != 0 ? b.cy : b.cpi);
        return da * db > 0;
    }
};

// Convex polygon given as an intersection of halfplanes aff(p) <= 0,
// plus its vertex list (multiples of pi/3) for bounding-box and sampling use.
struct PolyRegion {
    std::string name;
    std::vector<AffineForm> le0;
    std::vector<Vec2> vertices;

    bool contains(double x, double y, double slack = 0.0) const {
        for (const auto& h : le0)
            if (h.eval(x, y) > slack) return false;
        return true;
    }
    // Strict interior membership with margin (used to certify witnesses).
    bool contains_strictly(double x, double y, double margin) const {
        for (const auto& h : le0)
            if (!(h.eval(x, y) <= -margin)) return false;
        return true;
    }
    Vec2 bbox_lo() const {
        Vec2 lo = vertices.front();
        for (auto v : vertices) { lo.x = std::min(lo.x, v.x); lo.y = std::min(lo.y, v.y); }
        return lo;
    }
    Vec2 bbox_hi() const {
        Vec2 hi = vertices.front();
        for (auto v : vertices) { hi.x = std::max(hi.x, v.x); hi.y = std::max(hi.y, v.y); }
        return hi;
    }
};

// Certifiable regions. The unions T1_I+T1_II and T1_II+T1_III are convex and
// appear as sign-lemma domains.
enum class CertRegion { T1_I, T1_II, T1_III, T1_I_II, T1_II_III, T1 };

inline const char* to_string(CertRegion r) {
    switch (r) {
        case CertRegion::T1_I: return "T1_I";
        case CertRegion::T1_II: return "T1_II";
        case CertRegion::T1_III: return "T1_III";
        case CertRegion::T1_I_II: return "T1_I+T1_II";
        case CertRegion::T1_II_III: return "T1_II+T1_III";
        default: return "T1";
    }
}

inline PolyRegion region_polygon(CertRegion r) {
    const double q = two_pi / 3.0;  // 2*pi/3
    const Vec2 A{0.0, two_pi}, B{pi, two_pi}, C{2.0 * pi, two_pi};
    const Vec2 M{q, 2.0 * q};       // (2pi/3, 4pi/3)
    const Vec2 P{pi, pi};
    // T1 halfplanes: x - y <= 0, 2pi - x - y <= 0, y - 2pi <= 0.
    const AffineForm hS{1, -1, 0}, hAD{-1, -1, 2}, hTop{0, 1, -2};
    const AffineForm hYge2X{2, -1, 0};   // 2x - y <= 0  (y >= 2x)
    const AffineForm hYle2X{-2, 1, 0};   // y <= 2x
    const AffineForm hPsi1{1, -2, 2};    // x - 2y + 2pi <= 0  (y >= pi + x/2)
    const AffineForm hPsi1n{-1, 2, -2};  // y <= pi + x/2
    switch (r) {
        case CertRegion::T1:
            return {"T1", {hS, hAD, hTop}, {A, P, C}};
        case CertRegion::T1_I:
            return {"T1_I", {hS, hAD, hTop, hYge2X}, {A, B, M}};
        case CertRegion::T1_II:
            return {"T1_II", {hS, hAD, hTop, hYle2X, hPsi1}, {M, B, C}};
        case CertRegion::T1_III:
            return {"T1_III", {hS, hAD, hTop, hPsi1n}, {M, C, P}};
        case CertRegion::T1_I_II:
            return {"T1_I+T1_II", {hS, hAD, hTop, hPsi1}, {A, C, M}};
        case CertRegion::T1_II_III:
            return {"T1_II+T1_III", {hS, hAD, hTop, hYle2X}, {M, B, C, P}};
    }
    return {};
}

}  // namespace torusync
