#pragma once

// The 18 invariant line segments of the ring map: heteroclinic connections
// between fixed points along the lines x=0, y=0, y=x, y=2x, x=2y and
// y=2pi-x (the latter three wrap around the torus, so their lift pieces use
// deck-translated lines).
//
// Each segment stores lift endpoints lying exactly on its line. Invariance
// of the underlying line is an algebraic fact checked numerically when the
// registry is built; any failing candidate would abort construction.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusync/map.hpp"
#include "torusync/torus.hpp"

namespace torusync {

// Canonical names for the six fixed points of the ring map.
enum class FixedPointId { Source00, SaddleX, SaddleY, SaddleDiag, SinkUpper, SinkLower };

inline const char* to_string(FixedPointId f) {
    switch (f) {
        case FixedPointId::Source00: return "source(0,0)";
        case FixedPointId::SaddleX: return "saddle(pi,0)";
        case FixedPointId::SaddleY: return "saddle(0,pi)";
        case FixedPointId::SaddleDiag: return "saddle(pi,pi)";
        case FixedPointId::SinkUpper: return "sink(2pi/3,4pi/3)";
        default: return "sink(4pi/3,2pi/3)";
    }
}

inline TorusPoint fixed_point_location(FixedPointId f) {
    switch (f) {
        case FixedPointId::Source00: return {0.0, 0.0};
        case FixedPointId::SaddleX: return {pi, 0.0};
        case FixedPointId::SaddleY: return {0.0, pi};
        case FixedPointId::SaddleDiag: return {pi, pi};
        case FixedPointId::SinkUpper: return {two_pi / 3.0, 2.0 * two_pi / 3.0};
        default: return {2.0 * two_pi / 3.0, two_pi / 3.0};
    }
}

struct InvariantSegment {
    std::string name;
    LiftPoint p0, p1;          // lift endpoints, exactly on the invariant line
    FixedPointId from, to;     // fixed points connected
};

// Distance from a lift point to the torus curve through p0,p1: minimum over
// deck translates of the point-to-line distance.
inline double line_distance_torus(const InvariantSegment& seg, LiftPoint q) {
    double nx = seg.p1.y - seg.p0.y, ny = -(seg.p1.x - seg.p0.x);
    double nn = std::hypot(nx, ny);
    double c = nx * seg.p0.x + ny * seg.p0.y;
    double best = std::numeric_limits<double>::infinity();
    for (int kx = -3; kx <= 3; ++kx)
        for (int ky = -3; ky <= 3; ++ky) {
            double v = nx * (q.x + kx * two_pi) + ny * (q.y + ky * two_pi) - c;
            best = std::min(best, std::abs(v) / nn);
        }
    return best;
}

// Max over interior samples of the distance from the image of a segment
// point back to the segment's line (as a torus curve).
inline double segment_invariance_residual(const MapSpec& s, const InvariantSegment& seg,
                                          int samples = 64) {
    double worst = 0.0;
    for (int k = 1; k < samples; ++k) {
        double t = static_cast<double>(k) / samples;
        LiftPoint p{seg.p0.x + t * (seg.p1.x - seg.p0.x),
                    seg.p0.y + t * (seg.p1.y - seg.p0.y)};
        LiftPoint q = apply_map_lift(s, p);
        worst = std::max(worst, line_distance_torus(seg, q));
    }
    return worst;
}

// The full registry. Validated on first use against the line-invariance
// residual for a couple of coupling values.
inline const std::vector<InvariantSegment>& segment_registry() {
    using F = FixedPointId;
    static const std::vector<InvariantSegment> segs = [] {
        const double q = two_pi / 3.0;  // 2pi/3
        std::vector<InvariantSegment> v = {
            // vertical axis x = 0
            {"x=0: source->saddle(0,pi)", {0, 0}, {0, pi}, F::Source00, F::SaddleY},
            {"x=0: saddle(0,pi)->source", {0, pi}, {0, two_pi}, F::SaddleY, F::Source00},
            // horizontal axis y = 0
            {"y=0: source->saddle(pi,0)", {0, 0}, {pi, 0}, F::Source00, F::SaddleX},
            {"y=0: saddle(pi,0)->source", {pi, 0}, {two_pi, 0}, F::SaddleX, F::Source00},
            // main diagonal y = x
            {"y=x: source->saddle(pi,pi)", {0, 0}, {pi, pi}, F::Source00, F::SaddleDiag},
            {"y=x: saddle(pi,pi)->source", {pi, pi}, {two_pi, two_pi}, F::SaddleDiag, F::Source00},
            // closed curve y = 2x (wraps once): four pieces
            {"y=2x: source->sink_u", {0, 0}, {q, 2 * q}, F::Source00, F::SinkUpper},
            {"y=2x: sink_u->saddle(pi,0)", {q, 2 * q}, {pi, two_pi}, F::SinkUpper, F::SaddleX},
            {"y=2x-2pi: saddle(pi,0)->sink_l", {pi, 0}, {2 * q, q}, F::SaddleX, F::SinkLower},
            {"y=2x-2pi: sink_l->source", {2 * q, q}, {two_pi, two_pi}, F::SinkLower, F::Source00},
            // closed curve x = 2y: four pieces
            {"x=2y: source->sink_l", {0, 0}, {2 * q, q}, F::Source00, F::SinkLower},
            {"x=2y: sink_l->saddle(0,pi)", {2 * q, q}, {two_pi, pi}, F::SinkLower, F::SaddleY},
            {"x=2y-2pi: saddle(0,pi)->sink_u", {0, pi}, {q, 2 * q}, F::SaddleY, F::SinkUpper},
            {"x=2y-2pi: sink_u->source", {q, 2 * q}, {two_pi, two_pi}, F::SinkUpper, F::Source00},
            // closed antidiagonal y = 2pi - x: four pieces
            {"y=2pi-x: source->sink_u", {0, two_pi}, {q, 2 * q}, F::Source00, F::SinkUpper},
            {"y=2pi-x: sink_u->saddle(pi,pi)", {q, 2 * q}, {pi, pi}, F::SinkUpper, F::SaddleDiag},
            {"y=2pi-x: saddle(pi,pi)->sink_l", {pi, pi}, {2 * q, q}, F::SaddleDiag, F::SinkLower},
            {"y=2pi-x: sink_l->source", {2 * q, q}, {two_pi, 0}, F::SinkLower, F::Source00},
        };
        for (double a : {0.05, 0.3}) {
            MapSpec s = MapSpec::ring(a);
            for (const auto& seg : v)
                if (segment_invariance_residual(s, seg, 64) > 1e-11)
                    throw std::logic_error("segment registry: candidate line is not invariant: " +
                                           seg.name);
        }
        return v;
    }();
    return segs;
}

}  // namespace torusync
