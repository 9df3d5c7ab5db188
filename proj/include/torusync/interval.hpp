#pragma once

// Self-contained interval arithmetic with outward rounding.
//
// Endpoints are doubles. Sums and products use exact error terms (TwoSum /
// fma residual) to decide whether an endpoint needs an outward nudge, so
// exact operations - in particular products with a zero endpoint - stay
// exact. That matters: the sign certificates below prove "<= 0" by producing
// enclosures whose upper endpoint is exactly 0.
//
// Transcendental endpoints (sin) are widened by a fixed ulp margin around
// the libm value; libm on this target is well under 1 ulp off, the margin
// uses 4.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace torusync {

namespace detail {

inline double next_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double next_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

// Round-to-nearest sum with directed correction: result <= a + b exactly.
inline double sum_down(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);  // exact: a + b = s + err
    return err < 0.0 ? next_down(s) : s;
}
inline double sum_up(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return err > 0.0 ? next_up(s) : s;
}

// Directed products via the fma residual: a*b = p + fma(a,b,-p) exactly.
inline double prod_down(double a, double b) {
    double p = a * b;
    double r = std::fma(a, b, -p);
    return r < 0.0 ? next_down(p) : p;
}
inline double prod_up(double a, double b) {
    double p = a * b;
    double r = std::fma(a, b, -p);
    return r > 0.0 ? next_up(p) : p;
}

inline double widen_ulps(double x, int n, bool up) {
    for (int i = 0; i < n; ++i) x = up ? next_up(x) : next_down(x);
    return x;
}

}  // namespace detail

struct Interval {
    double lo = 0.0, hi = 0.0;

    Interval() = default;
    explicit Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h) : lo(l), hi(h) { assert(lo <= hi); }

    static Interval hull(double a, double b) { return {std::min(a, b), std::max(a, b)}; }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool is_point() const { return lo == hi; }
};

// pi and 2*pi enclosures (the double closest to pi lies below the true value).
inline Interval pi_iv() { return {detail::next_down(M_PI), detail::next_up(M_PI)}; }
inline Interval two_pi_iv() {
    return {detail::next_down(2.0 * M_PI), detail::next_up(2.0 * M_PI)};
}

inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator+(Interval a, Interval b) {
    return {detail::sum_down(a.lo, b.lo), detail::sum_up(a.hi, b.hi)};
}
inline Interval operator-(Interval a, Interval b) { return a + (-b); }

inline Interval operator*(Interval a, Interval b) {
    using namespace detail;
    double cands_lo[4] = {prod_down(a.lo, b.lo), prod_down(a.lo, b.hi),
                          prod_down(a.hi, b.lo), prod_down(a.hi, b.hi)};
    double cands_hi[4] = {prod_up(a.lo, b.lo), prod_up(a.lo, b.hi),
                          prod_up(a.hi, b.lo), prod_up(a.hi, b.hi)};
    return {*std::min_element(cands_lo, cands_lo + 4),
            *std::max_element(cands_hi, cands_hi + 4)};
}

inline Interval operator*(double s, Interval a) { return Interval(s) * a; }

inline Interval abs(Interval a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return -a;
    return {0.0, std::max(-a.lo, a.hi)};
}

inline Interval intersect(Interval a, Interval b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};  // caller ensures nonempty
}

inline bool disjoint(Interval a, Interval b) { return a.hi < b.lo || b.hi < a.lo; }

// --- sine ----------------------------------------------------------------

namespace detail {

inline constexpr int libm_slop_ulps = 4;

// Does [lo, hi] contain a point c0 + 2*pi*k? Conservative: slack only ever
// answers "yes" more often, which merely widens the enclosure.
inline bool contains_shifted(double lo, double hi, double c0) {
    constexpr double slack = 1e-9;
    double k = std::ceil((lo - slack - c0) / (2.0 * M_PI));
    double cand = c0 + 2.0 * M_PI * k;
    return cand <= hi + slack;
}

}  // namespace detail

// Enclosure of sin over an interval.
inline Interval sin(Interval a) {
    using namespace detail;
    if (a.width() >= 2.0 * M_PI) return {-1.0, 1.0};
    double slo = std::sin(a.lo), shi = std::sin(a.hi);
    double lo = widen_ulps(std::min(slo, shi), libm_slop_ulps, false);
    double hi = widen_ulps(std::max(slo, shi), libm_slop_ulps, true);
    if (contains_shifted(a.lo, a.hi, M_PI / 2.0)) hi = 1.0;
    if (contains_shifted(a.lo, a.hi, -M_PI / 2.0)) lo = -1.0;
    return {std::max(lo, -1.0), std::min(hi, 1.0)};
}

// Enclosure of cos via the shift identity; the pi/2 interval is widened, so
// this stays an enclosure.
inline Interval cos(Interval a) { return sin(a + 0.5 * pi_iv()); }

// Enclosure of sinc(t) = sin(t)/t (with sinc(0) = 1).
// sinc is even and strictly decreasing on [0, pi]; beyond pi the global
// range hull [-0.2173..., 1] is used.
inline Interval sinc(Interval a) {
    using namespace detail;
    const double global_lo = -0.21724;  // < min over R (attained near 4.4934)
    Interval t = abs(a);
    if (t.hi > M_PI) return {global_lo, 1.0};
    double lo = t.hi == 0.0 ? 1.0 : std::sin(t.hi) / t.hi;
    double hi = t.lo == 0.0 ? 1.0 : std::sin(t.lo) / t.lo;
    lo = widen_ulps(lo, libm_slop_ulps + 2, false);
    hi = widen_ulps(hi, libm_slop_ulps + 2, true);
    return {std::max(lo, global_lo), std::min(hi, 1.0)};
}

}  // namespace torusync
