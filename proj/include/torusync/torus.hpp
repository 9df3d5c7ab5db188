#pragma once

// Core types and arithmetic for the flat 2-torus R^2 / (2*pi*Z)^2.
//
// Points live in the fundamental domain D = [0, 2*pi)^2; all map evaluation
// happens in the lift (plain R^2) and is wrapped back once per step.

#include <cmath>
#include <stdexcept>
#include <string>

namespace torusync {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

// Wrap tolerance: results within this distance of 2*pi are clamped to 0 so
// that seam fixed points dedup to a single representative.
inline constexpr double wrap_clamp_tol = 1e-15;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// A point of the lift R^2 (no wrap constraint).
using LiftPoint = Vec2;

// Wrap a lift coordinate into [0, 2*pi). Values that land within
// wrap_clamp_tol of 2*pi are identified with 0.
inline double wrap_coord(double t) {
    double w = std::fmod(t, two_pi);
    if (w < 0.0) w += two_pi;
    if (w >= two_pi || two_pi - w <= wrap_clamp_tol) w = 0.0;
    return w;
}

// A point of the torus: both coordinates in [0, 2*pi).
struct TorusPoint {
    double x = 0.0;
    double y = 0.0;

    TorusPoint() = default;
    TorusPoint(double x_, double y_) : x(x_), y(y_) {}

    Vec2 vec() const { return {x, y}; }
    friend bool operator==(TorusPoint a, TorusPoint b) { return a.x == b.x && a.y == b.y; }
};

inline TorusPoint wrap(LiftPoint p) { return TorusPoint{wrap_coord(p.x), wrap_coord(p.y)}; }
inline TorusPoint wrap(double x, double y) { return wrap(LiftPoint{x, y}); }

inline LiftPoint lift(TorusPoint p) { return {p.x, p.y}; }

// Geodesic distance on the flat torus; equals the minimum over deck
// translates of the Euclidean distance.
inline double torus_distance(TorusPoint a, TorusPoint b) {
    double dx = std::remainder(a.x - b.x, two_pi);
    double dy = std::remainder(a.y - b.y, two_pi);
    return std::hypot(dx, dy);
}

// --- error types ---------------------------------------------------------

struct SingularJacobianError : std::runtime_error {
    SingularJacobianError() : std::runtime_error("Newton step: jacobian of f - id is singular") {}
};

struct NoConvergenceError : std::runtime_error {
    explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct ContinuationBrokenError : std::runtime_error {
    double t;  // scaling parameter where the path broke
    explicit ContinuationBrokenError(double t_, const std::string& why)
        : std::runtime_error("continuation broken at t=" + std::to_string(t_) + ": " + why), t(t_) {}
};

struct ImageLeftDomainError : std::runtime_error {
    explicit ImageLeftDomainError(const std::string& what) : std::runtime_error(what) {}
};

struct RateWindowEmptyError : std::runtime_error {
    RateWindowEmptyError() : std::runtime_error("convergence rate: no iterates in the measurement window") {}
};

struct UnsupportedZetaError : std::invalid_argument {
    UnsupportedZetaError() : std::invalid_argument("custom zeta without analytic partials: jacobian unavailable") {}
};

}  // namespace torusync
