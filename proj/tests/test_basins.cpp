#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

#include <torusync/torusync.hpp>

using namespace torusync;

namespace {

std::vector<TorusPoint> sink_locations(const MapSpec& s) {
    std::vector<TorusPoint> out;
    for (const auto& r : sinks_of(enumerate_fixed_points(s))) out.push_back(r.location);
    return out;
}

}  // namespace

TEST_CASE("classify_point lands in the expected basin", "[basins]") {
    MapSpec s = MapSpec::ring(0.1);
    auto sinks = sink_locations(s);
    REQUIRE(sinks.size() == 2);
    // Census order: sink 0 is (2pi/3, 4pi/3), sink 1 mirrors it.
    REQUIRE(torus_distance(sinks[0], {two_pi / 3.0, 2.0 * two_pi / 3.0}) <= 1e-9);
    REQUIRE(torus_distance(sinks[1], {2.0 * two_pi / 3.0, two_pi / 3.0}) <= 1e-9);

    // A sink itself classifies to its own index at iteration 0.
    CHECK(classify_point(s, sinks[0], sinks) == std::optional<int>{0});
    CHECK(classify_point(s, sinks[1], sinks) == std::optional<int>{1});

    CHECK(classify_point(s, {0.5 * pi, 1.5 * pi}, sinks) == std::optional<int>{0});
    CHECK(classify_point(s, {1.5 * pi, 0.5 * pi}, sinks) == std::optional<int>{1});

    // The diagonal feeds the saddle at (pi,pi); the budget runs out.
    CHECK(classify_point(s, {1.0, 1.0}, sinks, 1e-6, 2000) == std::nullopt);
}

TEST_CASE("basin_grid rejects resolutions under 16", "[basins]") {
    CHECK_THROWS_AS(basin_grid(MapSpec::ring(0.1), 8), std::invalid_argument);
    CHECK_THROWS_AS(basin_grid(MapSpec::ring(0.1), 0), std::invalid_argument);
}

TEST_CASE("ring basins split evenly at modest resolution", "[basins]") {
    BasinGrid g = basin_grid(MapSpec::ring(0.1), 64);
    REQUIRE(g.sinks.size() == 2);
    REQUIRE(g.cells() == 64 * 64);

    // Only the diagonal cells (centers exactly on y=x) fail to resolve.
    CHECK(g.unresolved_count == 64);
    // Swap symmetry forces an exact 50/50 split of the rest.
    CHECK(g.counts[0] == g.counts[1]);
    CHECK(g.fraction(0) + g.fraction(1) + g.unresolved_fraction() == 1.0);
    CHECK(g.fraction(0) >= 0.49);
    CHECK(g.fraction(0) <= 0.51);
}

TEST_CASE("line map basin covers the whole grid", "[basins]") {
    BasinGrid g = basin_grid(MapSpec::line(0.1), 64);
    REQUIRE(g.sinks.size() == 1);
    CHECK(torus_distance(g.sinks[0], {pi, pi}) <= 1e-9);
    CHECK(g.unresolved_count == 0);
    CHECK(g.fraction(0) == 1.0);
}

TEST_CASE("unresolved fraction shrinks under refinement", "[basins]") {
    MapSpec s = MapSpec::ring(0.1);
    double coarse = basin_grid(s, 256).unresolved_fraction();
    double fine = basin_grid(s, 2048).unresolved_fraction();
    CHECK(fine <= coarse);
    CHECK(coarse <= 0.01);
}

TEST_CASE("swap symmetry exchanges the two ring basins", "[basins]") {
    BasinGrid g = basin_grid(MapSpec::ring(0.1), 256);
    long resolved_pairs = 0, swapped = 0;
    for (int j = 0; j < g.resolution; ++j)
        for (int i = 0; i < g.resolution; ++i) {
            auto lab = g.label(i, j);
            auto mirror = g.label(j, i);
            if (lab == basin_unresolved || mirror == basin_unresolved) continue;
            resolved_pairs++;
            if (mirror == 1 - lab) swapped++;
        }
    REQUIRE(resolved_pairs > 0);
    CHECK(static_cast<double>(swapped) / static_cast<double>(resolved_pairs) >= 0.999);
}

TEST_CASE("orbit V-values never increase for resolved upper-triangle cells", "[basins]") {
    MapSpec s = MapSpec::ring(0.1);
    auto sinks = sink_locations(s);
    const int n = 128;
    const double h = two_pi / n;

    long orbits = 0, violations = 0, domain_exits = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) {  // strictly above the diagonal
            TorusPoint p{(i + 0.5) * h, (j + 0.5) * h};
            orbits++;
            double prev = eval_V({p.x, p.y});
            for (long k = 0; k < 100000; ++k) {
                if (torus_distance(p, sinks[0]) <= 1e-6) break;
                p = apply_map(s, p);
                if (p.y < p.x) {  // left the closed upper triangle
                    domain_exits++;
                    break;
                }
                double cur = eval_V({p.x, p.y});
                if (cur > prev) violations++;
                prev = cur;
            }
        }
    CHECK(orbits == n * (n - 1) / 2);
    CHECK(violations == 0);
    CHECK(domain_exits == 0);
}

TEST_CASE("grid labels do not depend on the worker count", "[basins]") {
    MapSpec s = MapSpec::ring(0.1);
    setenv("TORUSYNC_THREADS", "1", 1);
    BasinGrid serial = basin_grid(s, 64);
    setenv("TORUSYNC_THREADS", "4", 1);
    BasinGrid parallel = basin_grid(s, 64);
    unsetenv("TORUSYNC_THREADS");
    CHECK(serial == parallel);
}

TEST_CASE("measured contraction slope matches the sink spectrum", "[basins]") {
    MapSpec s = MapSpec::ring(0.1);
    auto census = enumerate_fixed_points(s);
    auto sinks = sinks_of(census);
    auto sink_points = sink_locations(s);
    REQUIRE(sinks.size() == 2);

    SplitMix64 rng(20240817u);
    int tested = 0;
    while (tested < 20) {
        TorusPoint p{rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi)};
        auto lab = classify_point(s, p, sink_points);
        if (!lab) continue;  // separatrix hit; try another start
        RateEstimate r = convergence_rate(s, p, sinks[static_cast<size_t>(*lab)]);
        CHECK(r.predicted == Catch::Approx(std::log(0.85)).margin(1e-12));
        CHECK(r.relative_error <= 0.05);
        CHECK(r.window_steps > 0);
        tested++;
    }
}

TEST_CASE("line map contraction matches its slowest eigenvalue", "[basins]") {
    MapSpec s = MapSpec::line(0.1);
    auto sinks = sinks_of(enumerate_fixed_points(s));
    REQUIRE(sinks.size() == 1);
    RateEstimate r = convergence_rate(s, {2.0, 1.0}, sinks[0]);
    CHECK(r.predicted == Catch::Approx(std::log(0.9)).margin(1e-12));
    CHECK(r.relative_error <= 0.05);
}

TEST_CASE("starting on the sink leaves the rate window empty", "[basins]") {
    MapSpec s = MapSpec::ring(0.1);
    auto sinks = sinks_of(enumerate_fixed_points(s));
    CHECK_THROWS_AS(convergence_rate(s, sinks[0].location, sinks[0]), RateWindowEmptyError);
}
