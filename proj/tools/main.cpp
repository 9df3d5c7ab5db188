// torusync command-line front end.
//
// Verbs: orbit, fixed-points, certify, basins, portrait, conjecture, sweep.
// Exit codes: 0 success / all proved, 1 claim failed / refuted, 2 bad config.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "torusync/torusync.hpp"

namespace {

using namespace torusync;

struct Opts {
    std::string map = "ring";
    double a = 0.1;
    double delta1 = 0.0;
    double delta2 = 0.0;
    std::string zeta = "ones";
    double a_hi = -1.0;  // certify only: upper end of the a interval
    double x = 1.0, y = 2.0;
    long steps = 200;
    int resolution = 256;
    double eps = 1e-6;
    long max_iter = 100000;
    double exclusion_radius = 0.05;
    int depth = 40;
    double min_width = 1e-4;
    bool negative_control = false;
    std::uint64_t seed = 0x7405f1e5u;
    std::string out;
    std::string list_file;
};

MapSpec build_spec(const Opts& o) {
    bool pert = o.delta1 != 0.0 || o.delta2 != 0.0;
    if (pert && o.zeta == "none")
        throw std::invalid_argument("nonzero delta requires an active zeta field (--zeta ones)");
    if (!pert) return o.map == "ring" ? MapSpec::ring(o.a) : MapSpec::line(o.a);
    return o.map == "ring" ? MapSpec::ring_perturbed(o.a, o.delta1, o.delta2)
                           : MapSpec::line_perturbed(o.a, o.delta1, o.delta2);
}

std::string sibling_with_extension(std::string path, const std::string& ext) {
    auto slash = path.find_last_of('/');
    auto dot = path.find_last_of('.');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        path.resize(dot);
    return path + ext;
}

std::vector<TorusPoint> sink_locations(const MapSpec& s) {
    // For a perturbed family, continue the unperturbed sinks instead of
    // trusting census ordering: labels then track the deformation.
    if (!is_perturbed(s.family)) {
        std::vector<TorusPoint> out;
        for (const auto& r : sinks_of(enumerate_fixed_points(s))) out.push_back(r.location);
        return out;
    }
    MapSpec base = s;
    base.family = s.family == MapFamily::RingGPerturbed ? MapFamily::RingG : MapFamily::LineF;
    base.delta1 = base.delta2 = 0.0;
    std::vector<TorusPoint> out;
    for (const auto& r : sinks_of(enumerate_fixed_points(base)))
        out.push_back(continue_fixed_point(base, s, r).back().location);
    return out;
}

int cmd_orbit(const Opts& o) {
    MapSpec s = build_spec(o);
    auto sinks = sink_locations(s);
    auto pts = iterate(s, wrap(o.x, o.y), o.steps);
    std::vector<OrbitRow> rows;
    rows.reserve(pts.size());
    for (size_t n = 0; n < pts.size(); ++n) {
        const TorusPoint& p = pts[n];
        double lyap = p.y >= p.x ? eval_V(lift(p)) : eval_U(lift(p));
        double dist = std::numeric_limits<double>::quiet_NaN();
        for (const auto& sk : sinks) {
            double d = torus_distance(p, sk);
            if (std::isnan(dist) || d < dist) dist = d;
        }
        rows.push_back({static_cast<long>(n), p, lyap, dist});
    }
    std::string out = o.out.empty() ? "orbit.csv" : o.out;
    auto os = open_out(out);
    write_orbit_csv(os, rows);
    std::printf("orbit: %zu rows -> %s (final sink distance %s)\n", rows.size(), out.c_str(),
                fmt_g17(rows.back().sink_dist).c_str());
    return 0;
}

int cmd_fixed_points(const Opts& o) {
    MapSpec s = build_spec(o);
    auto census = enumerate_fixed_points(s);
    if (o.out.empty()) {
        write_fixed_points_csv(std::cout, census);
    } else {
        auto os = open_out(o.out);
        write_fixed_points_csv(os, census);
        std::printf("fixed-points: %zu records -> %s\n", census.size(), o.out.c_str());
    }
    return 0;
}

int cmd_certify(const Opts& o) {
    SuiteConfig cfg;
    cfg.a = Interval{o.a, o.a_hi > 0.0 ? o.a_hi : o.a};
    cfg.exclusion_radius = o.exclusion_radius;
    cfg.min_width = o.min_width;
    cfg.max_depth = o.depth;
    cfg.negative_control = o.negative_control;
    cfg.seed = o.seed;
    SuiteReport rep = certify_suite(cfg);
    write_certificates(std::cout, rep);
    if (!o.out.empty()) {
        auto os = open_out(o.out);
        write_certificates(os, rep);
    }
    return rep.all_proved() ? 0 : 1;
}

int cmd_basins(const Opts& o) {
    MapSpec s = build_spec(o);
    auto grid = basin_grid(s, o.resolution, o.eps, o.max_iter, sink_locations(s));
    std::string out = o.out.empty() ? "basins.csv" : o.out;
    {
        auto os = open_out(out);
        write_basin_csv(os, grid);
    }
    std::string ppm = sibling_with_extension(out, ".ppm");
    {
        std::vector<TorusPoint> markers;
        for (const auto& r : enumerate_fixed_points(s)) markers.push_back(r.location);
        auto os = open_out(ppm);
        write_basin_ppm(os, grid, markers);
    }
    std::printf("basins: N=%d -> %s, %s\n", grid.resolution, out.c_str(), ppm.c_str());
    for (size_t k = 0; k < grid.sinks.size(); ++k)
        std::printf("  sink %zu (%s, %s): fraction %s\n", k, fmt_g17(grid.sinks[k].x).c_str(),
                    fmt_g17(grid.sinks[k].y).c_str(), fmt_g17(grid.fraction(static_cast<int>(k))).c_str());
    std::printf("  unresolved: %s\n", fmt_g17(grid.unresolved_fraction()).c_str());
    return 0;
}

int cmd_portrait(const Opts& o) {
    MapSpec s = build_spec(o);
    std::string out = o.out.empty() ? "portrait.csv" : o.out;
    auto os = open_out(out);
    write_portrait_csv(os, s, o.resolution);
    std::printf("portrait: %d x %d field -> %s\n", o.resolution, o.resolution, out.c_str());
    return 0;
}

int cmd_conjecture(const Opts& o) {
    MapSpec s = build_spec(o);
    auto rep = conjecture_scan(s, o.resolution, o.exclusion_radius);
    write_conjecture_report(std::cout, rep);
    if (!o.out.empty()) {
        auto os = open_out(o.out);
        write_conjecture_report(os, rep);
    }
    return rep.negative_outside() ? 0 : 1;
}

int cmd_sweep(const Opts& o) {
    std::ifstream in(o.list_file);
    if (!in) throw std::invalid_argument("sweep: cannot open list file " + o.list_file);
    std::ostringstream table;
    table << "a,delta1,delta2,fixed_points,sinks,fraction0,fraction1,unresolved\n";
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        Opts e = o;
        if (!(row >> e.a)) throw std::invalid_argument("sweep: bad list line: " + line);
        if (!(row >> e.delta1)) e.delta1 = 0.0;
        if (!(row >> e.delta2)) e.delta2 = 0.0;
        MapSpec s = build_spec(e);
        auto census = enumerate_fixed_points(s);
        auto grid = basin_grid(s, o.resolution, o.eps, o.max_iter, sink_locations(s));
        table << fmt_g17(e.a) << ',' << fmt_g17(e.delta1) << ',' << fmt_g17(e.delta2) << ','
              << census.size() << ',' << grid.sinks.size() << ','
              << fmt_g17(grid.sinks.empty() ? 0.0 : grid.fraction(0)) << ','
              << fmt_g17(grid.sinks.size() > 1 ? grid.fraction(1) : 0.0) << ','
              << fmt_g17(grid.unresolved_fraction()) << '\n';
    }
    std::fputs(table.str().c_str(), stdout);
    if (!o.out.empty()) {
        auto os = open_out(o.out);
        os << table.str();
    }
    return 0;
}

void add_family_flags(CLI::App* sub, Opts& o) {
    sub->add_option("--map", o.map, "map family")->check(CLI::IsMember({"ring", "line"}));
    sub->add_option("--a", o.a, "coupling strength, in (0, 1/3)");
    sub->add_option("--delta1", o.delta1, "perturbation amplitude (first clock)");
    sub->add_option("--delta2", o.delta2, "perturbation amplitude (second clock)");
    sub->add_option("--zeta", o.zeta, "perturbation field")->check(CLI::IsMember({"ones", "none"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"synchronisation maps of three coupled clocks on the torus"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "key=value config file with a [verb] section; flags take precedence");
    Opts o;

    auto* orbit = app.add_subcommand("orbit", "iterate one trajectory and tabulate it");
    add_family_flags(orbit, o);
    orbit->add_option("--x", o.x, "initial x (radians)");
    orbit->add_option("--y", o.y, "initial y (radians)");
    orbit->add_option("--steps", o.steps, "number of iterations");
    orbit->add_option("--out", o.out, "output table path");

    auto* fp = app.add_subcommand("fixed-points", "Newton census with classification");
    add_family_flags(fp, o);
    fp->add_option("--out", o.out, "output table path (default: stdout)");

    auto* cert = app.add_subcommand("certify",
                                    "interval branch-and-bound certificates for the ring coupling");
    cert->add_option("--a", o.a, "coupling strength (lower end of interval)");
    cert->add_option("--a-hi", o.a_hi, "upper end of the a interval (default: --a)");
    cert->add_option("--exclusion-radius", o.exclusion_radius, "radius of vertex/edge exclusions");
    cert->add_option("--depth", o.depth, "maximum bisection depth");
    cert->add_option("--min-width", o.min_width, "smallest box side before giving up");
    cert->add_flag("--negative-control", o.negative_control,
                   "append a deliberately false obligation (expected Refuted, exit 1)");
    cert->add_option("--seed", o.seed, "seed for the transported-region sampling check");
    cert->add_option("--out", o.out, "also write the report here");

    auto* bas = app.add_subcommand("basins", "basin-of-attraction grid + raster");
    add_family_flags(bas, o);
    bas->add_option("--resolution", o.resolution, "grid cells per side (>= 16)");
    bas->add_option("--eps", o.eps, "sink capture radius");
    bas->add_option("--max-iter", o.max_iter, "iteration budget per cell");
    bas->add_option("--out", o.out, "grid table path (raster gets .ppm)");

    auto* por = app.add_subcommand("portrait", "one-step displacement field for quiver plots");
    add_family_flags(por, o);
    por->add_option("--resolution", o.resolution, "grid cells per side");
    por->add_option("--out", o.out, "output table path");

    auto* con = app.add_subcommand("conjecture", "global Lyapunov candidate support scan");
    add_family_flags(con, o);
    con->add_option("--resolution", o.resolution, "grid cells per side");
    con->add_option("--exclusion-radius", o.exclusion_radius,
                    "radius of balls skipped around fixed points");
    con->add_option("--out", o.out, "also write the report here");

    auto* sw = app.add_subcommand("sweep", "census + basin summaries over (a, delta1, delta2) rows");
    add_family_flags(sw, o);
    sw->add_option("list", o.list_file, "file with one 'a [delta1 delta2]' row per line")
        ->required();
    sw->add_option("--resolution", o.resolution, "basin grid cells per side");
    sw->add_option("--eps", o.eps, "sink capture radius");
    sw->add_option("--max-iter", o.max_iter, "iteration budget per cell");
    sw->add_option("--out", o.out, "also write the summary table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (orbit->parsed()) return cmd_orbit(o);
        if (fp->parsed()) return cmd_fixed_points(o);
        if (cert->parsed()) return cmd_certify(o);
        if (bas->parsed()) return cmd_basins(o);
        if (por->parsed()) return cmd_portrait(o);
        if (con->parsed()) return cmd_conjecture(o);
        if (sw->parsed()) return cmd_sweep(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
