#include <catch2/catch_amalgamated.hpp>

#include "torusync/torus.hpp"

using namespace torusync;

TEST_CASE("wrap maps representatives into [0, 2pi)", "[torus]") {
    CHECK(wrap(0.0, 0.0) == TorusPoint{0.0, 0.0});
    CHECK(wrap(two_pi, two_pi) == TorusPoint{0.0, 0.0});
    TorusPoint p = wrap(-pi / 2.0, 5.0 * pi);
    CHECK(p.x == Catch::Approx(3.0 * pi / 2.0).margin(1e-15));
    CHECK(p.y == Catch::Approx(pi).margin(1e-15));
    for (double v : {0.0, 1e-9, 1.0, pi, two_pi - 1e-9}) {
        CHECK(wrap_coord(v) == Catch::Approx(v).margin(1e-15));
        CHECK(wrap_coord(v + two_pi) == Catch::Approx(v).margin(1e-12));
        CHECK(wrap_coord(v - two_pi) == Catch::Approx(v).margin(1e-12));
    }
}

TEST_CASE("wrap clamps near-2pi rounding residue to zero", "[torus]") {
    // A representative within 1e-15 of 2pi is the wrap seam itself.
    CHECK(wrap_coord(two_pi - 1e-16) == 0.0);
    CHECK(wrap_coord(std::nextafter(two_pi, 0.0)) == 0.0);
    CHECK(wrap_coord(two_pi - 1e-14) != 0.0);
}

TEST_CASE("wrap of lift is identity on the fundamental square", "[torus]") {
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            TorusPoint p{i * 0.9, j * 0.9};
            CHECK(wrap(lift(p)) == p);
        }
}

TEST_CASE("torus distance uses the shortest deck translate", "[torus]") {
    CHECK(torus_distance({0.1, 0.0}, {two_pi - 0.1, 0.0}) == Catch::Approx(0.2).margin(1e-12));
    CHECK(torus_distance({0.0, 0.3}, {0.0, 0.3}) == 0.0);
    CHECK(torus_distance({1.0, 1.0}, {1.0 + pi, 1.0}) == Catch::Approx(pi).margin(1e-12));
    // symmetry and triangle inequality on a small sample
    TorusPoint a{0.2, 6.1}, b{3.3, 0.4}, c{5.9, 2.2};
    CHECK(torus_distance(a, b) == Catch::Approx(torus_distance(b, a)));
    CHECK(torus_distance(a, c) <= torus_distance(a, b) + torus_distance(b, c) + 1e-12);
}

TEST_CASE("vector helpers", "[torus]") {
    Vec2 v{3.0, 4.0};
    CHECK(norm(v) == Catch::Approx(5.0));
    CHECK(dot(v, Vec2{1.0, 0.0}) == Catch::Approx(3.0));
    Vec2 w = v + 2.0 * Vec2{1.0, -1.0};
    CHECK(w.x == Catch::Approx(5.0));
    CHECK(w.y == Catch::Approx(2.0));
}
