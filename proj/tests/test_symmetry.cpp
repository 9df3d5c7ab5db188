#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "torusync/lyapunov.hpp"
#include "torusync/rng.hpp"
#include "torusync/symmetry.hpp"

using namespace torusync;

namespace {
constexpr SymmetryId all_syms[4] = {SymmetryId::Identity, SymmetryId::ReflAntiDiag,
                                    SymmetryId::RotPi, SymmetryId::ReflDiag};
}

TEST_CASE("every symmetry is an involution", "[symmetry]") {
    SplitMix64 rng(12);
    for (SymmetryId s : all_syms)
        for (int k = 0; k < 100; ++k) {
            TorusPoint p{rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi)};
            CHECK(torus_distance(apply_symmetry(s, apply_symmetry(s, p)), p) <= 1e-12);
        }
}

TEST_CASE("composition follows the xor table of the Klein four-group", "[symmetry]") {
    CHECK(compose(SymmetryId::ReflAntiDiag, SymmetryId::ReflDiag) == SymmetryId::RotPi);
    CHECK(compose(SymmetryId::ReflDiag, SymmetryId::ReflAntiDiag) == SymmetryId::RotPi);
    CHECK(compose(SymmetryId::RotPi, SymmetryId::ReflDiag) == SymmetryId::ReflAntiDiag);
    for (SymmetryId a : all_syms) {
        CHECK(compose(a, a) == SymmetryId::Identity);
        CHECK(compose(a, SymmetryId::Identity) == a);
    }
    // the table is realized pointwise, not just on labels
    SplitMix64 rng(13);
    for (SymmetryId a : all_syms)
        for (SymmetryId b : all_syms)
            for (int k = 0; k < 20; ++k) {
                TorusPoint p{rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi)};
                TorusPoint lhs = apply_symmetry(a, apply_symmetry(b, p));
                TorusPoint rhs = apply_symmetry(compose(a, b), p);
                CHECK(torus_distance(lhs, rhs) <= 1e-12);
            }
}

TEST_CASE("ring and line maps commute with the full group", "[symmetry]") {
    for (const MapSpec& s : {MapSpec::ring(0.1), MapSpec::ring(0.3), MapSpec::line(0.17)})
        for (SymmetryId sym : all_syms) {
            CAPTURE(static_cast<int>(sym));
            CHECK(equivariance_residual(s, sym, 1000, 17) <= 1e-12);
        }
}

TEST_CASE("asymmetric perturbations break exactly the expected symmetries", "[symmetry]") {
    // equal deltas keep the diagonal swap but break the reflections that
    // flip the perturbation direction
    MapSpec even = MapSpec::ring_perturbed(0.1, 0.01, 0.01);
    CHECK(equivariance_residual(even, SymmetryId::ReflDiag, 500, 19) <= 1e-12);
    CHECK(equivariance_residual(even, SymmetryId::ReflAntiDiag, 500, 19) > 1e-6);
    CHECK(equivariance_residual(even, SymmetryId::RotPi, 500, 19) > 1e-6);
    // unequal deltas also break the diagonal swap
    MapSpec uneven = MapSpec::ring_perturbed(0.1, 0.01, 0.02);
    CHECK(equivariance_residual(uneven, SymmetryId::ReflDiag, 500, 19) > 1e-6);
    CHECK(equivariance_residual(uneven, SymmetryId::Identity, 500, 19) == 0.0);
}

TEST_CASE("Lyapunov data transports along the symmetries", "[symmetry]") {
    MapSpec g = MapSpec::ring(0.1);
    SplitMix64 rng(23);
    double worst_v = 0.0, worst_u = 0.0, worst_vd = 0.0;
    int vd_pairs = 0;
    for (int k = 0; k < 20000; ++k) {
        TorusPoint p{rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi)};
        TorusPoint p2 = apply_symmetry(SymmetryId::ReflAntiDiag, p);
        TorusPoint p4 = apply_symmetry(SymmetryId::ReflDiag, p);
        worst_v = std::max(worst_v, std::abs(eval_V(lift(p)) - eval_V(lift(p2))));
        worst_u = std::max(worst_u, std::abs(eval_U(lift(p)) - eval_V(lift(p4))));
        try {
            double d0 = orbital_derivative(LyapFunction::V, g, p);
            double d2 = orbital_derivative(LyapFunction::V, g, p2);
            worst_vd = std::max(worst_vd, std::abs(d0 - d2));
            ++vd_pairs;
        } catch (const ImageLeftDomainError&) {
            // p in the open lower triangle has no V-domain representative
        }
    }
    CHECK(worst_v <= 1e-12);
    CHECK(worst_u <= 1e-12);
    CHECK(worst_vd <= 1e-12);
    CHECK(vd_pairs > 5000);
}

TEST_CASE("symmetry names", "[symmetry]") {
    CHECK(std::string(to_string(SymmetryId::Identity)) == "Phi1");
    CHECK(std::string(to_string(SymmetryId::ReflDiag)) == "Phi4");
}
