#include "hrl/euclid.hpp"

#include <algorithm>
#include <cmath>

#include "hrl/errors.hpp"
#include "hrl/partition.hpp"
#include "hrl/sampling.hpp"

namespace hrl::euclid {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Slack for the closed-cone tests used by the overlap bound: the bound takes
// a supremum over closed wedges, so boundary vertices must not be lost to a
// final rounding step.
constexpr double kConeSlack = 1e-12;
constexpr double kParallelTol = 1e-12;
constexpr double kEndpointSwapTol = 1e-9;

// Circular membership of theta in the arc from `from` to `to`, with explicit
// ownership of either bounding ray -- the same canonical comparison the
// hyperbolic sector cells use, so ray points land in exactly one wedge.
bool cone_contains(double theta, double from, double to, bool own_from, bool own_to) {
    double th = wrap_angle(theta);
    double f = wrap_angle(from);
    double t = wrap_angle(to);
    if (th == f) return own_from;
    if (th == t) return own_to;
    if (f < t) return th > f && th < t;
    return th > f || th < t;
}

// Membership of p in the closed cone at `apex` spanning [from, from + span].
bool in_closed_cone(const EPoint& p, const EPoint& apex, double from, double span) {
    double vx = p.x - apex.x;
    double vy = p.y - apex.y;
    if (vx == 0.0 && vy == 0.0) return true;
    double rel = wrap_angle(std::atan2(vy, vx) - from);
    return rel <= span + kConeSlack || rel >= 2 * kPi - kConeSlack;
}

double wedge_span(const EWedgePartition& part, int k) {
    double span = wrap_angle(part.rays[(k + 1) % 3] - part.rays[k]);
    if (span == 0.0) throw Error("wedge partition has coincident rays");
    return span;
}

double angle_gap(double a, double b) {
    double d = wrap_angle(a - b);
    return std::min(d, 2 * kPi - d);
}

}  // namespace

EPoint::EPoint(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x_) || !std::isfinite(y_))
        throw Error("Euclidean point coordinates must be finite");
}

EPoint e_point_symmetry(const EPoint& c, const EPoint& x) {
    return {2.0 * c.x - x.x, 2.0 * c.y - x.y};
}

bool e_wedge_contains(const EWedgePartition& part, int k, const EPoint& p) {
    if (k < 0 || k > 2) throw OutOfRange("wedge index must lie in [0, 3)");
    double vx = p.x - part.apex.x;
    double vy = p.y - part.apex.y;
    if (vx == 0.0 && vy == 0.0) return k == part.apex_cell;
    int next = (k + 1) % 3;
    return cone_contains(std::atan2(vy, vx), part.rays[k], part.rays[next],
                         part.owns_start_ray[k], !part.owns_start_ray[next]);
}

int e_classify(const EWedgePartition& part, const EPoint& p) {
    int found = -1;
    for (int k = 0; k < 3; ++k) {
        if (!e_wedge_contains(part, k, p)) continue;
        if (found >= 0) throw Error("point belongs to more than one wedge");
        found = k;
    }
    if (found < 0) throw Error("no wedge contains the point");
    return found;
}

EWedgePartition e_sector_partition() {
    EWedgePartition part;
    for (int k = 0; k < 3; ++k) part.rays[k] = wrap_angle(kPi / 2 + 2 * kPi * k / 3);
    return part;
}

double symmetric_overlap_bound(const EWedgePartition& part, const EPoint& c) {
    EPoint refl_apex{2.0 * c.x - part.apex.x, 2.0 * c.y - part.apex.y};
    double best = 0.0;
    auto consider = [&best](double px, double py) { best = std::max(best, std::hypot(px, py)); };

    for (int k = 0; k < 3; ++k) {
        double from = part.rays[k];
        double span = wedge_span(part, k);
        if (span >= kPi - 1e-9)
            throw Error("wedge spans at least a half-plane; the symmetric overlap may be unbounded");

        // The overlap of the closed wedge and its reflection is a convex
        // polygon; its vertices are the two apexes (where contained) and the
        // crossings of a wedge ray with a reflected-wedge ray.
        if (in_closed_cone(part.apex, refl_apex, from + kPi, span))
            consider(part.apex.x, part.apex.y);
        if (in_closed_cone(refl_apex, part.apex, from, span))
            consider(refl_apex.x, refl_apex.y);

        double wx = refl_apex.x - part.apex.x;
        double wy = refl_apex.y - part.apex.y;
        double angles[2] = {from, from + span};
        for (double ai : angles) {
            for (double aj : angles) {
                // Crossing of apex + t*u(ai) with refl_apex - s*u(aj): the
                // reflected wedge's rays run opposite to the original's.
                double uix = std::cos(ai), uiy = std::sin(ai);
                double ujx = std::cos(aj), ujy = std::sin(aj);
                double det = uix * ujy - uiy * ujx;
                if (std::abs(det) < kParallelTol) continue;
                double t = (wx * ujy - wy * ujx) / det;
                double s = (uix * wy - uiy * wx) / det;
                if (t < -kConeSlack || s < -kConeSlack) continue;
                t = std::max(t, 0.0);
                consider(part.apex.x + t * uix, part.apex.y + t * uiy);
            }
        }
    }
    return best;
}

EProbeReport e_bounded_symmetry_probe(const EWedgePartition& part, const EPoint& c,
                                      double radius, long samples, std::uint64_t seed) {
    EProbeReport rep;
    rep.radius = radius;
    rep.bound = symmetric_overlap_bound(part, c);
    if (!(radius > rep.bound))
        throw RadiusBelowBound("probe radius must exceed the symmetric-overlap bound");

    double cap = radius + 10.0 * (1.0 + std::hypot(c.x, c.y));
    double lo2 = radius * radius;
    double hi2 = cap * cap;
    Rng rng(seed);
    for (long i = 0; i < samples; ++i) {
        double rho = std::sqrt(lo2 + rng.unit() * (hi2 - lo2));
        double phi = rng.angle();
        EPoint x{rho * std::cos(phi), rho * std::sin(phi)};
        EPoint image = e_point_symmetry(c, x);
        if (std::hypot(x.x, x.y) <= radius) continue;
        if (std::hypot(image.x, image.y) <= radius) continue;
        ++rep.checked;
        int cell = e_classify(part, x);
        if (cell == e_classify(part, image)) rep.hits.push_back({x, image, cell});
    }
    return rep;
}

Geodesic h_sector_geodesic_witness(int m, int cell) {
    if (m < 2 || m > 64) throw OutOfRange("sector count must lie in [2, 64]");
    if (cell < 0 || cell >= m) throw OutOfRange("cell index must lie in [0, m)");

    Partition part = sector_partition(m, kPi / 2);
    double span = 2 * kPi / m;
    double from = kPi / 2 + span * cell;
    Geodesic g{IdealPoint(from + span / 4), IdealPoint(from + 3 * span / 4)};

    for (int i = 0; i <= 1000; ++i) {
        double tau = -20.0 + 40.0 * i / 1000.0;
        if (classify_point(part, point_on_geodesic(g, tau)) != cell)
            throw Error("geodesic sample escaped its wedge");
    }
    // The swap residual grows like e^(2d) * eps_machine with d the symmetry
    // point's distance from the origin (coordinate rounding amplified by the
    // boundary map's conformal stretch), so keeping d below 6.9 holds the
    // 1e-9 check with an order of magnitude to spare. Narrow wedges hug the
    // boundary and use up part of that depth budget before tau moves at all.
    double depth0 = distance(HPoint{}, point_on_geodesic(g, 0.0));
    double tau_max = std::max(1.0, 6.9 - depth0);
    for (int j = 0; j < 10; ++j) {
        HPoint p = point_on_geodesic(g, -tau_max + 2.0 * tau_max * j / 9.0);
        Isometry f = point_symmetry(p);
        if (angle_gap(apply_boundary(f, g.u).theta, g.v.theta) > kEndpointSwapTol ||
            angle_gap(apply_boundary(f, g.v).theta, g.u.theta) > kEndpointSwapTol)
            throw Error("point symmetry failed to swap the geodesic's ideal endpoints");
    }
    return g;
}

}  // namespace hrl::euclid
