#pragma once

// Serialization: CSV tables (single header line), P3 PPM rasters, and the
// plain-text certificate / conjecture reports.

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusync/basins.hpp"
#include "torusync/certify.hpp"
#include "torusync/conjecture.hpp"
#include "torusync/fixed_points.hpp"
#include "torusync/torus.hpp"

namespace torusync {

// Shortest round-trip text form of a double.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    return os;
}

// --- fixed points ---------------------------------------------------------

inline void write_fixed_points_csv(std::ostream& os,
                                   const std::vector<FixedPointRecord>& census) {
    os << "x,y,lambda1_re,lambda1_im,lambda2_re,lambda2_im,kind,residual\n";
    for (const auto& r : census) {
        os << fmt_g17(r.location.x) << ',' << fmt_g17(r.location.y) << ','
           << fmt_g17(r.lambda1.real()) << ',' << fmt_g17(r.lambda1.imag()) << ','
           << fmt_g17(r.lambda2.real()) << ',' << fmt_g17(r.lambda2.imag()) << ','
           << to_string(r.kind) << ',' << fmt_g17(r.residual) << '\n';
    }
}

// --- orbit ----------------------------------------------------------------

struct OrbitRow {
    long n;
    TorusPoint p;
    double lyap;       // V on the closed upper triangle, else U
    double sink_dist;  // distance to the nearest sink (NaN if no sinks)
};

inline void write_orbit_csv(std::ostream& os, const std::vector<OrbitRow>& rows) {
    os << "n,x,y,lyapunov,sink_distance\n";
    for (const auto& r : rows)
        os << r.n << ',' << fmt_g17(r.p.x) << ',' << fmt_g17(r.p.y) << ','
           << fmt_g17(r.lyap) << ',' << fmt_g17(r.sink_dist) << '\n';
}

// --- phase portrait -------------------------------------------------------

inline void write_portrait_csv(std::ostream& os, const MapSpec& s, int resolution) {
    os << "x,y,dx,dy\n";
    const double h = two_pi / resolution;
    for (int j = 0; j < resolution; ++j)
        for (int i = 0; i < resolution; ++i) {
            LiftPoint p{(i + 0.5) * h, (j + 0.5) * h};
            LiftPoint q = apply_map_lift(s, p);
            os << fmt_g17(p.x) << ',' << fmt_g17(p.y) << ',' << fmt_g17(q.x - p.x) << ','
               << fmt_g17(q.y - p.y) << '\n';
        }
}

// --- certificates ---------------------------------------------------------

inline void write_certificates(std::ostream& os, const SuiteReport& rep) {
    os << "obligation,region,claim,status,boxes_proved,boxes_excluded,boxes_empty,"
          "boxes_undecided,max_depth,seconds,detail\n";
    for (const auto& c : rep.certificates) {
        os << c.id << ',' << (c.transport ? "T2" : to_string(c.region)) << ','
           << to_string(c.claim) << ',' << to_string(c.status) << ',' << c.boxes_proved
           << ',' << c.boxes_excluded << ',' << c.boxes_empty << ',' << c.undecided.size()
           << ',' << c.max_depth_reached << ',' << fmt_g17(c.seconds) << ',';
        if (c.witness)
            os << "witness (" << fmt_g17(c.witness->point.x) << ' '
               << fmt_g17(c.witness->point.y) << ") value_lo " << fmt_g17(c.witness->value.lo);
        else if (!c.note.empty())
            os << c.note;
        os << '\n';
    }
    os << "overall," << to_string(rep.overall) << ",,,,,,,," << fmt_g17(rep.seconds)
       << ",transport samples " << rep.transport.samples << " max_vdot "
       << fmt_g17(rep.transport.max_vdot) << " max_sym_residual "
       << fmt_g17(rep.transport.max_sym_residual) << '\n';
}

// --- basin grids ----------------------------------------------------------

inline void write_basin_csv(std::ostream& os, const BasinGrid& g) {
    os << "i,j,label\n";
    for (int j = 0; j < g.resolution; ++j)
        for (int i = 0; i < g.resolution; ++i)
            os << i << ',' << j << ',' << g.label(i, j) << '\n';
    os << "# resolution " << g.resolution << '\n';
    os << "# sinks";
    for (const auto& s : g.sinks) os << ' ' << fmt_g17(s.x) << ' ' << fmt_g17(s.y);
    os << '\n';
    os << "# counts";
    for (auto c : g.counts) os << ' ' << c;
    os << '\n';
    os << "# unresolved " << g.unresolved_count << '\n';
}

inline BasinGrid parse_basin_csv(std::istream& is) {
    BasinGrid g;
    std::string line;
    if (!std::getline(is, line) || line.rfind("i,j,label", 0) != 0)
        throw std::runtime_error("basin csv: missing header");
    struct Cell {
        int i, j;
        int label;
    };
    std::vector<Cell> cells;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ss(line.substr(1));
            std::string key;
            ss >> key;
            if (key == "resolution") {
                ss >> g.resolution;
            } else if (key == "sinks") {
                double x, y;
                while (ss >> x >> y) g.sinks.push_back(TorusPoint{x, y});
            } else if (key == "counts") {
                long c;
                while (ss >> c) g.counts.push_back(c);
            } else if (key == "unresolved") {
                ss >> g.unresolved_count;
            }
            continue;
        }
        Cell c{};
        if (std::sscanf(line.c_str(), "%d,%d,%d", &c.i, &c.j, &c.label) == 3)
            cells.push_back(c);
    }
    if (g.resolution == 0) throw std::runtime_error("basin csv: missing resolution record");
    g.labels.assign(static_cast<size_t>(g.cells()), basin_unresolved);
    for (const auto& c : cells)
        g.labels[static_cast<size_t>(c.j) * g.resolution + c.i] =
            static_cast<std::int16_t>(c.label);
    return g;
}

// P3 raster of the basin grid; y grows upward (last grid row printed first).
// Fixed points are overplotted as single yellow pixels.
inline void write_basin_ppm(std::ostream& os, const BasinGrid& g,
                            const std::vector<TorusPoint>& fixed_points = {}) {
    static const int palette[6][3] = {{214, 69, 65},  {65, 105, 225}, {60, 179, 113},
                                      {238, 156, 38}, {147, 112, 219}, {64, 224, 208}};
    const int N = g.resolution;
    std::vector<std::array<int, 2>> markers;
    const double h = two_pi / N;
    for (const auto& f : fixed_points) {
        int i = std::min(N - 1, static_cast<int>(f.x / h));
        int j = std::min(N - 1, static_cast<int>(f.y / h));
        markers.push_back({i, j});
    }
    os << "P3\n" << N << ' ' << N << "\n255\n";
    for (int j = N - 1; j >= 0; --j) {
        for (int i = 0; i < N; ++i) {
            int r, gg, b;
            bool marked = false;
            for (const auto& m : markers)
                if (m[0] == i && m[1] == j) { marked = true; break; }
            if (marked) {
                r = 255, gg = 255, b = 0;
            } else {
                int lab = g.label(i, j);
                if (lab == basin_unresolved) {
                    r = gg = b = 24;
                } else {
                    const int* p = palette[lab % 6];
                    r = p[0], gg = p[1], b = p[2];
                }
            }
            os << r << ' ' << gg << ' ' << b << (i + 1 == N ? '\n' : ' ');
        }
    }
}

// --- conjecture report ----------------------------------------------------

inline void write_conjecture_report(std::ostream& os, const ConjectureReport& r) {
    os << "resolution," << r.resolution << '\n'
       << "exclusion_radius," << fmt_g17(r.exclusion_radius) << '\n'
       << "cells_checked," << r.cells_checked << '\n'
       << "max_increment," << fmt_g17(r.max_increment) << '\n'
       << "argmax_x," << fmt_g17(r.argmax.x) << '\n'
       << "argmax_y," << fmt_g17(r.argmax.y) << '\n'
       << "seam_jump_x," << fmt_g17(r.seam_x_max) << '\n'
       << "seam_jump_y," << fmt_g17(r.seam_y_max) << '\n'
       << "seam_jump_diagonal," << fmt_g17(r.seam_diag_max) << '\n'
       << "negative_outside_exclusions," << (r.negative_outside() ? "yes" : "no") << '\n';
}

}  // namespace torusync
