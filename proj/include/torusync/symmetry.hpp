#pragma once

// The Klein four-group of torus symmetries commuting with the ring and line
// maps:
//   Phi1 = id
//   Phi2 (x,y) -> (2pi - y, 2pi - x)   reflection across the antidiagonal
//   Phi3 (x,y) -> (2pi - x, 2pi - y)   rotation by pi about (pi, pi)
//   Phi4 (x,y) -> (y, x)               reflection across the diagonal
// Composition obeys the xor table of {0,1,2,3}; every element is an
// involution.

#include <cstdint>

#include "torusync/map.hpp"
#include "torusync/rng.hpp"
#include "torusync/torus.hpp"

namespace torusync {

enum class SymmetryId : int { Identity = 0, ReflAntiDiag = 1, RotPi = 2, ReflDiag = 3 };

inline const char* to_string(SymmetryId s) {
    switch (s) {
        case SymmetryId::Identity: return "Phi1";
        case SymmetryId::ReflAntiDiag: return "Phi2";
        case SymmetryId::RotPi: return "Phi3";
        default: return "Phi4";
    }
}

inline LiftPoint apply_symmetry_lift(SymmetryId s, LiftPoint p) {
    switch (s) {
        case SymmetryId::Identity: return p;
        case SymmetryId::ReflAntiDiag: return {two_pi - p.y, two_pi - p.x};
        case SymmetryId::RotPi: return {two_pi - p.x, two_pi - p.y};
        default: return {p.y, p.x};
    }
}

inline TorusPoint apply_symmetry(SymmetryId s, TorusPoint p) {
    return wrap(apply_symmetry_lift(s, lift(p)));
}

inline SymmetryId compose(SymmetryId a, SymmetryId b) {
    return static_cast<SymmetryId>(static_cast<int>(a) ^ static_cast<int>(b));
}

// Max torus distance between Phi(f(p)) and f(Phi(p)) over deterministic
// random samples. Zero (to rounding) exactly when Phi commutes with f.
inline double equivariance_residual(const MapSpec& s, SymmetryId sym, long samples = 1000,
                                    std::uint64_t seed = 1u) {
    SplitMix64 rng(seed);
    double worst = 0.0;
    for (long k = 0; k < samples; ++k) {
        TorusPoint p{rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi)};
        TorusPoint lhs = apply_symmetry(sym, apply_map(s, p));
        TorusPoint rhs = apply_map(s, apply_symmetry(sym, p));
        worst = std::max(worst, torus_distance(lhs, rhs));
    }
    return worst;
}

}  // namespace torusync
