#pragma once

// Rigorous sign certification by interval branch-and-bound.
//
// A BoxQuery claims a sign for one closed-form target (psi_1..psi_4 or a
// Vdot branch form) over a convex subregion of T1, for every coupling value
// in an interval window, outside optional exclusion zones (balls/tubes
// around the known equality sets). certify() bisects the region's bounding
// box until every leaf is (a) certifiably outside the region, (b) certifiably
// inside an exclusion zone, or (c) carries an interval enclosure with the
// claimed sign. A certified counterexample point refutes instead.
//
// Two ingredients keep the NonPositive/NonNegative lemmas provable even
// though their targets vanish on region edges:
//   - psi_3 and psi_4 are evaluated in factored form
//       psi_3 = u * (1 + 3a cos(y/2) sinc(u/2)),  u = 2x - y
//       psi_4 = v * (1 - 3a cos(x/2) sinc(v/2)),  v = 2pi + x - 2y
//     whose second factor is strictly positive for 3a < 1;
//   - the affine part (u, v, psi_1, psi_2) is clamped against any region
//     constraint that is an exact positive multiple of it, which pins the
//     relevant endpoint to exactly 0.
// The Vdot branch forms factor as 3a * W(x,y), so the coupling window
// enters the enclosure exactly once and subdivision converges uniformly
// over the window.
//
// Determinism: the subdivision tree depends only on the query, never on
// scheduling. Work is fanned out over a fixed-size frontier, each subtree
// runs sequentially, and results merge in frontier order, so statuses and
// box counts are identical for any worker count.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torusync/interval.hpp"
#include "torusync/lyapunov.hpp"
#include "torusync/map.hpp"
#include "torusync/parallel.hpp"
#include "torusync/regions.hpp"
#include "torusync/rng.hpp"
#include "torusync/symmetry.hpp"
#include "torusync/torus.hpp"

namespace torusync {

enum class CertTarget { Psi1, Psi2, Psi3, Psi4, VdotT1I, VdotT1II, VdotT1III };

inline const char* to_string(CertTarget t) {
    switch (t) {
        case CertTarget::Psi1: return "psi1";
        case CertTarget::Psi2: return "psi2";
        case CertTarget::Psi3: return "psi3";
        case CertTarget::Psi4: return "psi4";
        case CertTarget::VdotT1I: return "vdot_T1_I";
        case CertTarget::VdotT1II: return "vdot_T1_II";
        default: return "vdot_T1_III";
    }
}

enum class SignClaim { NonPositive, NonNegative, StrictlyNegative };

inline const char* to_string(SignClaim c) {
    switch (c) {
        case SignClaim::NonPositive: return "<=0";
        case SignClaim::NonNegative: return ">=0";
        default: return "<0";
    }
}

struct Ball {
    Vec2 center;
    double radius;
};
struct Tube {
    Vec2 p0, p1;
    double radius;
};

struct Exclusions {
    std::vector<Ball> balls;
    std::vector<Tube> tubes;
    bool empty() const { return balls.empty() && tubes.empty(); }
};

struct Box {
    Interval x, y;
    double longer_side() const { return std::max(x.width(), y.width()); }
};

struct BoxQuery {
    std::string id;
    CertTarget target = CertTarget::Psi1;
    SignClaim claim = SignClaim::NonPositive;
    CertRegion region = CertRegion::T1;
    Interval a{0.1, 0.1};
    Exclusions exclusions;
    double min_width = 1e-4;
    int max_depth = 40;
};

enum class CertStatus { Proved, Refuted, Undecided };

inline const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Proved: return "proved";
        case CertStatus::Refuted: return "refuted";
        default: return "undecided";
    }
}

struct Witness {
    Vec2 point;
    Interval value;  // certified enclosure of the target at the point
};

struct Certificate {
    std::string id;
    CertTarget target = CertTarget::Psi1;
    SignClaim claim = SignClaim::NonPositive;
    CertRegion region = CertRegion::T1;
    bool transport = false;  // synthesized symmetry-transport record
    CertStatus status = CertStatus::Undecided;
    long boxes_proved = 0;
    long boxes_excluded = 0;
    long boxes_empty = 0;
    std::vector<Box> undecided;
    std::optional<Witness> witness;
    int max_depth_reached = 0;
    double seconds = 0.0;
    std::string note;

    long boxes_total() const {
        return boxes_proved + boxes_excluded + boxes_empty +
               static_cast<long>(undecided.size()) + (witness ? 1 : 0);
    }
};

// --- target evaluation ---------------------------------------------------

namespace detail_cert {

inline AffineForm psi1_form() { return {1, -2, 2}; }
inline AffineForm psi2_form() { return {-2, 1, 0}; }
inline AffineForm u_form() { return {2, -1, 0}; }  // u = 2x - y

inline AffineForm negated(const AffineForm& f) { return {-f.cx, -f.cy, -f.cpi}; }

inline Interval affine_box_range(const AffineForm& f, const Box& b) {
    return Interval(f.cx) * b.x + Interval(f.cy) * b.y + Interval(f.cpi) * pi_iv();
}

// Range of f over box∩region: the raw box range clamped against any region
// constraint that is an exact multiple of f. nullopt = intersection is
// certifiably empty.
inline std::optional<Interval> affine_range(const AffineForm& f, const Box& b,
                                            const PolyRegion& reg) {
    Interval v = affine_box_range(f, b);
    for (const auto& h : reg.le0) {
        if (proportional_pos(h, f)) {  // h <= 0 and h = lambda f, lambda>0 => f <= 0
            if (v.lo > 0.0) return std::nullopt;
            v.hi = std::min(v.hi, 0.0);
        } else if (proportional_pos(h, negated(f))) {  // => f >= 0
            if (v.hi < 0.0) return std::nullopt;
            v.lo = std::max(v.lo, 0.0);
        }
    }
    return v;
}

inline bool box_outside_region(const PolyRegion& reg, const Box& b) {
    for (const auto& h : reg.le0)
        if (affine_box_range(h, b).lo > 0.0) return true;
    return false;
}

}  // namespace detail_cert

// Interval enclosure of the target over box∩region for every a in the
// window. nullopt = box∩region certifiably empty.
inline std::optional<Interval> interval_eval(CertTarget t, const Box& b, Interval a,
                                             const PolyRegion& reg) {
    using namespace detail_cert;
    const Interval one(1.0);
    switch (t) {
        case CertTarget::Psi1:
            return affine_range(psi1_form(), b, reg);
        case CertTarget::Psi2:
            return affine_range(psi2_form(), b, reg);
        case CertTarget::Psi3: {
            auto u = affine_range(u_form(), b, reg);
            if (!u) return std::nullopt;
            Interval factor = one + (3.0 * a) * cos(0.5 * b.y) * sinc(0.5 * *u);
            return *u * factor;
        }
        case CertTarget::Psi4: {
            auto v = affine_range(psi1_form(), b, reg);  // v ≡ psi1 affine part
            if (!v) return std::nullopt;
            Interval factor = one - (3.0 * a) * cos(0.5 * b.x) * sinc(0.5 * *v);
            return *v * factor;
        }
        case CertTarget::VdotT1I: {
            Interval w = -sin(b.x) + sin(b.y) + 2.0 * sin(b.y - b.x);
            return (3.0 * a) * w;
        }
        case CertTarget::VdotT1II: {
            Interval w = sin(b.x) + sin(b.y);
            return (3.0 * a) * w;
        }
        case CertTarget::VdotT1III: {
            Interval w = sin(b.x) - sin(b.y) - 2.0 * sin(b.y - b.x);
            return (3.0 * a) * w;
        }
    }
    return std::nullopt;
}

// Plain-box overload (no region constraints).
inline Interval interval_eval(CertTarget t, const Box& b, Interval a) {
    PolyRegion none;
    return *interval_eval(t, b, a, none);
}

// Pointwise double evaluation (independent reference path used by the
// soundness samples; goes through the lyapunov-module closed forms).
inline double target_value(CertTarget t, double x, double y, double a) {
    MapSpec s = MapSpec::ring(a);
    LiftPoint p{x, y};
    switch (t) {
        case CertTarget::Psi1: return psi1(p);
        case CertTarget::Psi2: return psi2(p);
        case CertTarget::Psi3: return psi3(s, p);
        case CertTarget::Psi4: return psi4(s, p);
        case CertTarget::VdotT1I: return vdot_branch(RegionId::T1_I, a, p);
        case CertTarget::VdotT1II: return vdot_branch(RegionId::T1_II, a, p);
        default: return vdot_branch(RegionId::T1_III, a, p);
    }
}

// --- exclusion-zone geometry ---------------------------------------------

namespace detail_cert {

inline Interval operator_div(Interval a, Interval b) {  // requires b.lo > 0
    double c0 = a.lo / b.lo, c1 = a.lo / b.hi, c2 = a.hi / b.lo, c3 = a.hi / b.hi;
    double lo = std::min(std::min(c0, c1), std::min(c2, c3));
    double hi = std::max(std::max(c0, c1), std::max(c2, c3));
    return {detail::next_down(lo), detail::next_up(hi)};
}

inline bool point_in_ball_certain(double px, double py, const Ball& z) {
    Interval dx = Interval(px) - Interval(z.center.x);
    Interval dy = Interval(py) - Interval(z.center.y);
    Interval d2 = dx * dx + dy * dy;
    return d2.hi <= detail::prod_down(z.radius, z.radius);
}

inline bool point_in_tube_certain(double px, double py, const Tube& z) {
    Interval ax(z.p0.x), ay(z.p0.y);
    Interval dx = Interval(z.p1.x) - ax, dy = Interval(z.p1.y) - ay;
    Interval wx = Interval(px) - ax, wy = Interval(py) - ay;
    Interval len2 = dx * dx + dy * dy;
    Interval t = operator_div(wx * dx + wy * dy, len2);
    t.lo = std::min(std::max(t.lo, 0.0), 1.0);
    t.hi = std::min(std::max(t.hi, 0.0), 1.0);
    Interval ex = wx - t * dx, ey = wy - t * dy;
    Interval d2 = ex * ex + ey * ey;
    return d2.hi <= detail::prod_down(z.radius, z.radius);
}

// Plain double distances (used with an outward margin for witness checks).
inline double dist_to_ball_center(double px, double py, const Ball& z) {
    return std::hypot(px - z.center.x, py - z.center.y);
}
inline double dist_to_tube_axis(double px, double py, const Tube& z) {
    double dx = z.p1.x - z.p0.x, dy = z.p1.y - z.p0.y;
    double len2 = dx * dx + dy * dy;
    double t = ((px - z.p0.x) * dx + (py - z.p0.y) * dy) / len2;
    t = std::min(std::max(t, 0.0), 1.0);
    return std::hypot(px - (z.p0.x + t * dx), py - (z.p0.y + t * dy));
}

inline bool box_inside_exclusions(const Box& b, const Exclusions& ex) {
    const double corners[4][2] = {{b.x.lo, b.y.lo}, {b.x.lo, b.y.hi},
                                  {b.x.hi, b.y.lo}, {b.x.hi, b.y.hi}};
    for (const auto& z : ex.balls) {
        if (b.longer_side() > 2.0 * z.radius) continue;  // cannot fit
        bool all = true;
        for (auto& c : corners)
            if (!point_in_ball_certain(c[0], c[1], z)) { all = false; break; }
        if (all) return true;
    }
    for (const auto& z : ex.tubes) {
        bool all = true;
        for (auto& c : corners)
            if (!point_in_tube_certain(c[0], c[1], z)) { all = false; break; }
        if (all) return true;
    }
    return false;
}

// Strictly outside every zone by a safety margin (witness eligibility).
inline bool point_clear_of_exclusions(double px, double py, const Exclusions& ex,
                                      double margin = 1e-9) {
    for (const auto& z : ex.balls)
        if (dist_to_ball_center(px, py, z) < z.radius + margin) return false;
    for (const auto& z : ex.tubes)
        if (dist_to_tube_axis(px, py, z) < z.radius + margin) return false;
    return true;
}

inline bool claim_holds(SignClaim c, Interval enc) {
    switch (c) {
        case SignClaim::NonPositive: return enc.hi <= 0.0;
        case SignClaim::NonNegative: return enc.lo >= 0.0;
        default: return enc.hi < 0.0;
    }
}

// Certified violation at a point: the enclosure must be on the wrong side
// for every a in the window.
inline bool claim_violated(SignClaim c, Interval enc) {
    switch (c) {
        case SignClaim::NonPositive: return enc.lo > 0.0;
        case SignClaim::NonNegative: return enc.hi < 0.0;
        default: return enc.lo >= 0.0;
    }
}

struct SubResult {
    long proved = 0, excluded = 0, empty = 0;
    int max_depth = 0;
    std::vector<Box> undecided;
    std::optional<Witness> witness;

    void merge(const SubResult& o) {
        proved += o.proved;
        excluded += o.excluded;
        empty += o.empty;
        max_depth = std::max(max_depth, o.max_depth);
        undecided.insert(undecided.end(), o.undecided.begin(), o.undecided.end());
        if (!witness && o.witness) witness = o.witness;
    }
};

enum class LeafKind { Empty, Excluded, Proved, Refuted, Undecided, Split };

struct LeafOutcome {
    LeafKind kind;
    Interval enclosure{0.0, 0.0};
    std::optional<Witness> witness;
};

inline LeafOutcome classify_box(const BoxQuery& q, const PolyRegion& reg, const Box& b,
                                int depth, const std::optional<Interval>& parent_enc) {
    if (box_outside_region(reg, b)) return {LeafKind::Empty};
    if (box_inside_exclusions(b, q.exclusions)) return {LeafKind::Excluded};

    auto enc_opt = interval_eval(q.target, b, q.a, reg);
    if (!enc_opt) return {LeafKind::Empty};
    Interval enc = *enc_opt;
    if (parent_enc) {
        // A child's true range is contained in the parent's enclosure;
        // intersecting keeps refinement monotone. An empty intersection
        // certifies the child misses the region.
        Interval tight = intersect(enc, *parent_enc);
        if (tight.lo > tight.hi) return {LeafKind::Empty};
        enc = tight;
    }
    if (claim_holds(q.claim, enc)) return {LeafKind::Proved, enc};

    double cx = b.x.mid(), cy = b.y.mid();
    if (reg.contains_strictly(cx, cy, 1e-9) &&
        point_clear_of_exclusions(cx, cy, q.exclusions)) {
        Box pt{Interval(cx), Interval(cy)};
        auto pv = interval_eval(q.target, pt, q.a, reg);
        if (pv && claim_violated(q.claim, *pv))
            return {LeafKind::Refuted, enc, Witness{{cx, cy}, *pv}};
    }
    if (depth >= q.max_depth || b.longer_side() <= q.min_width)
        return {LeafKind::Undecided, enc};
    return {LeafKind::Split, enc};
}

inline std::pair<Box, Box> bisect(const Box& b) {
    if (b.x.width() >= b.y.width()) {
        double m = b.x.mid();
        return {Box{{b.x.lo, m}, b.y}, Box{{m, b.x.hi}, b.y}};
    }
    double m = b.y.mid();
    return {Box{b.x, {b.y.lo, m}}, Box{b.x, {m, b.y.hi}}};
}

// Sequential depth-first processing of one subtree; stops at the subtree's
// first refutation.
inline void run_subtree(const BoxQuery& q, const PolyRegion& reg, const Box& b, int depth,
                        std::optional<Interval> parent_enc, SubResult& out) {
    if (out.witness) return;
    LeafOutcome leaf = classify_box(q, reg, b, depth, parent_enc);
    out.max_depth = std::max(out.max_depth, depth);
    switch (leaf.kind) {
        case LeafKind::Empty: out.empty++; return;
        case LeafKind::Excluded: out.excluded++; return;
        case LeafKind::Proved: out.proved++; return;
        case LeafKind::Refuted: out.witness = leaf.witness; return;
        case LeafKind::Undecided: out.undecided.push_back(b); return;
        case LeafKind::Split: {
            auto [b1, b2] = bisect(b);
            run_subtree(q, reg, b1, depth + 1, leaf.enclosure, out);
            run_subtree(q, reg, b2, depth + 1, leaf.enclosure, out);
            return;
        }
    }
}

}  // namespace detail_cert

// Root bounding box of a region, 1 ulp wider than the vertex hull so the
// true region (with exact pi) is covered.
inline Box root_box(const PolyRegion& reg) {
    Vec2 lo = reg.bbox_lo(), hi = reg.bbox_hi();
    return Box{{detail::next_down(lo.x), detail::next_up(hi.x)},
               {detail::next_down(lo.y), detail::next_up(hi.y)}};
}

inline Certificate certify(const BoxQuery& q) {
    using namespace detail_cert;
    auto t0 = std::chrono::steady_clock::now();
    Certificate cert;
    cert.id = q.id;
    cert.target = q.target;
    cert.claim = q.claim;
    cert.region = q.region;

    PolyRegion reg = region_polygon(q.region);
    struct Node {
        Box box;
        int depth;
        std::optional<Interval> parent;
    };
    std::vector<Node> frontier{{root_box(reg), 0, std::nullopt}};
    SubResult pre;

    // Breadth-first expansion to a fixed-size frontier. The frontier size is
    // a constant, so the tree shape is independent of the worker count.
    constexpr size_t kFrontierTarget = 64;
    size_t head = 0;
    std::vector<Node> tasks;
    while (head < frontier.size()) {
        if (frontier.size() - head + tasks.size() >= kFrontierTarget) {
            tasks.insert(tasks.end(), frontier.begin() + static_cast<long>(head), frontier.end());
            break;
        }
        Node n = frontier[head++];
        LeafOutcome leaf = classify_box(q, reg, n.box, n.depth, n.parent);
        pre.max_depth = std::max(pre.max_depth, n.depth);
        switch (leaf.kind) {
            case LeafKind::Empty: pre.empty++; break;
            case LeafKind::Excluded: pre.excluded++; break;
            case LeafKind::Proved: pre.proved++; break;
            case LeafKind::Refuted:
                if (!pre.witness) pre.witness = leaf.witness;
                break;
            case LeafKind::Undecided: pre.undecided.push_back(n.box); break;
            case LeafKind::Split: {
                auto [b1, b2] = bisect(n.box);
                frontier.push_back({b1, n.depth + 1, leaf.enclosure});
                frontier.push_back({b2, n.depth + 1, leaf.enclosure});
                break;
            }
        }
    }

    std::vector<SubResult> results(tasks.size());
    detail::parallel_for(0, static_cast<long>(tasks.size()), [&](long i) {
        const Node& n = tasks[static_cast<size_t>(i)];
        run_subtree(q, reg, n.box, n.depth, n.parent, results[static_cast<size_t>(i)]);
    });

    SubResult total = pre;
    for (const auto& r : results) total.merge(r);

    cert.boxes_proved = total.proved;
    cert.boxes_excluded = total.excluded;
    cert.boxes_empty = total.empty;
    cert.undecided = std::move(total.undecided);
    cert.witness = total.witness;
    cert.max_depth_reached = total.max_depth;
    cert.status = cert.witness ? CertStatus::Refuted
                  : cert.undecided.empty() ? CertStatus::Proved
                                           : CertStatus::Undecided;
    cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

// --- the full suite -------------------------------------------------------

struct SuiteConfig {
    Interval a{0.1, 0.1};
    double exclusion_radius = 0.05;
    double min_width = 1e-4;
    int max_depth = 40;
    bool negative_control = false;
    std::uint64_t seed = 0x7405f1e5u;
    int transport_samples = 10000;
};

struct TransportCheck {
    long samples = 0;
    double max_vdot = 0.0;        // max composed Vdot over the samples
    double max_sym_residual = 0.0;  // max |Vdot(p) - Vdot(Phi2 p)|
    bool passed = false;
};

struct SuiteReport {
    std::vector<Certificate> certificates;
    TransportCheck transport;
    CertStatus overall = CertStatus::Undecided;
    double seconds = 0.0;

    bool all_proved() const { return overall == CertStatus::Proved; }
};

inline std::vector<BoxQuery> suite_obligations(const SuiteConfig& c) {
    const double r = c.exclusion_radius;
    const Vec2 A{0.0, two_pi}, B{pi, two_pi}, C{two_pi, two_pi};
    const Vec2 M{two_pi / 3.0, 2.0 * two_pi / 3.0}, P{pi, pi};
    auto mk = [&](std::string id, CertTarget t, SignClaim cl, CertRegion rg,
                  Exclusions ex = {}) {
        BoxQuery q;
        q.id = std::move(id);
        q.target = t;
        q.claim = cl;
        q.region = rg;
        q.a = c.a;
        q.exclusions = std::move(ex);
        q.min_width = c.min_width;
        q.max_depth = c.max_depth;
        return q;
    };
    std::vector<BoxQuery> out = {
        mk("lemma1_psi1_le0_on_T1_I+II", CertTarget::Psi1, SignClaim::NonPositive,
           CertRegion::T1_I_II),
        mk("lemma1_psi1_ge0_on_T1_III", CertTarget::Psi1, SignClaim::NonNegative,
           CertRegion::T1_III),
        mk("lemma2_psi2_ge0_on_T1_I", CertTarget::Psi2, SignClaim::NonNegative,
           CertRegion::T1_I),
        mk("lemma2_psi2_le0_on_T1_II+III", CertTarget::Psi2, SignClaim::NonPositive,
           CertRegion::T1_II_III),
        mk("lemma3_psi3_le0_on_T1_I", CertTarget::Psi3, SignClaim::NonPositive,
           CertRegion::T1_I),
        mk("lemma3_psi3_ge0_on_T1_II+III", CertTarget::Psi3, SignClaim::NonNegative,
           CertRegion::T1_II_III),
        mk("lemma4_psi4_le0_on_T1_I+II", CertTarget::Psi4, SignClaim::NonPositive,
           CertRegion::T1_I_II),
        mk("lemma4_psi4_ge0_on_T1_III", CertTarget::Psi4, SignClaim::NonNegative,
           CertRegion::T1_III),
        mk("vdot_neg_on_T1_I", CertTarget::VdotT1I, SignClaim::StrictlyNegative,
           CertRegion::T1_I, Exclusions{{{A, r}, {B, r}, {M, r}}, {}}),
        mk("vdot_neg_on_T1_II", CertTarget::VdotT1II, SignClaim::StrictlyNegative,
           CertRegion::T1_II, Exclusions{{{B, r}, {M, r}, {C, r}}, {}}),
        mk("vdot_neg_on_T1_III", CertTarget::VdotT1III, SignClaim::StrictlyNegative,
           CertRegion::T1_III, Exclusions{{{M, r}}, {Tube{P, C, r}}}),
    };
    if (c.negative_control)
        out.push_back(mk("negative_control_psi3_le0_on_T1_II", CertTarget::Psi3,
                         SignClaim::NonPositive, CertRegion::T1_II));
    return out;
}

// Sampled cross-check transporting the T1 negativity to T2 through Phi2:
// Vdot is Phi2-invariant, so strict negativity on T1 minus the zones is
// strict negativity on T2 minus the mirrored zones. The samples verify both
// the invariance identity and the sign with the composed orbital derivative.
inline TransportCheck transport_check(const SuiteConfig& c) {
    TransportCheck tc;
    const double r = c.exclusion_radius;
    Exclusions mirrored;
    mirrored.balls = {{{0.0, two_pi}, r}, {{0.0, pi}, r}, {{0.0, 0.0}, r},
                      {{two_pi / 3.0, 2.0 * two_pi / 3.0}, r}, {{pi, pi}, r}};
    mirrored.tubes = {Tube{{0.0, 0.0}, {pi, pi}, r}};

    const Vec2 t2a{0.0, 0.0}, t2b{0.0, two_pi}, t2c{pi, pi};
    std::vector<double> a_samples{c.a.lo};
    if (c.a.hi != c.a.lo) {
        a_samples.push_back(c.a.mid());
        a_samples.push_back(c.a.hi);
    }
    SplitMix64 rng(c.seed);
    tc.max_vdot = -std::numeric_limits<double>::infinity();
    bool sign_ok = true;
    long per_a = std::max<long>(1, c.transport_samples / static_cast<long>(a_samples.size()));
    for (double a : a_samples) {
        MapSpec s = MapSpec::ring(a);
        for (long k = 0; k < per_a; ++k) {
            double r1 = std::sqrt(rng.uniform01()), r2 = rng.uniform01();
            LiftPoint p{(1 - r1) * t2a.x + r1 * ((1 - r2) * t2b.x + r2 * t2c.x),
                        (1 - r1) * t2a.y + r1 * ((1 - r2) * t2b.y + r2 * t2c.y)};
            if (!detail_cert::point_clear_of_exclusions(p.x, p.y, mirrored)) continue;
            if (!in_region(RegionId::T2, p)) continue;
            double vd = orbital_derivative_lift(LyapFunction::V, s, p);
            LiftPoint q = apply_symmetry_lift(SymmetryId::ReflAntiDiag, p);
            double vd_mirror = orbital_derivative_lift(LyapFunction::V, s, q);
            tc.samples++;
            tc.max_vdot = std::max(tc.max_vdot, vd);
            tc.max_sym_residual = std::max(tc.max_sym_residual, std::abs(vd - vd_mirror));
            if (vd >= 0.0) sign_ok = false;
        }
    }
    tc.passed = sign_ok && tc.max_sym_residual <= 1e-12 && tc.samples > 0;
    return tc;
}

inline SuiteReport certify_suite(const SuiteConfig& c) {
    if (!(c.a.lo > 0.0 && c.a.hi < 1.0 / 3.0 && c.a.lo <= c.a.hi))
        throw std::invalid_argument("certify_suite: coupling window must be interior to (0, 1/3)");
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    auto obligations = suite_obligations(c);

    // psi sign lemmas come first: the Vdot branch forms are only valid where
    // the lemmas pin the signs of the psi_j.
    size_t n_psi = 8;
    rep.certificates.resize(obligations.size());
    for (size_t i = 0; i < n_psi; ++i) rep.certificates[i] = certify(obligations[i]);
    bool psi_ok = true;
    for (size_t i = 0; i < n_psi; ++i)
        psi_ok = psi_ok && rep.certificates[i].status == CertStatus::Proved;

    for (size_t i = n_psi; i < obligations.size(); ++i) {
        bool is_control = obligations[i].id.rfind("negative_control", 0) == 0;
        if (!psi_ok && !is_control) {
            Certificate& cert = rep.certificates[i];
            cert.id = obligations[i].id;
            cert.target = obligations[i].target;
            cert.claim = obligations[i].claim;
            cert.region = obligations[i].region;
            cert.status = CertStatus::Undecided;
            cert.note = "skipped: psi sign lemmas unproved, branch forms unvalidated";
            continue;
        }
        rep.certificates[i] = certify(obligations[i]);
    }

    bool vdot_ok = true;
    for (size_t i = n_psi; i < rep.certificates.size(); ++i) {
        if (obligations[i].id.rfind("negative_control", 0) == 0) continue;
        vdot_ok = vdot_ok && rep.certificates[i].status == CertStatus::Proved;
    }

    rep.transport = transport_check(c);
    Certificate trans;
    trans.id = "vdot_neg_on_T2_via_phi2";
    trans.transport = true;
    trans.claim = SignClaim::StrictlyNegative;
    trans.status = (psi_ok && vdot_ok && rep.transport.passed) ? CertStatus::Proved
                                                               : CertStatus::Undecided;
    trans.note = "transported from T1 by the Phi2 reflection; sampled cross-check";
    rep.certificates.push_back(trans);

    rep.overall = CertStatus::Proved;
    for (const auto& cert : rep.certificates) {
        if (cert.status == CertStatus::Refuted) {
            rep.overall = CertStatus::Refuted;
            break;
        }
        if (cert.status != CertStatus::Proved) rep.overall = CertStatus::Undecided;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace torusync
