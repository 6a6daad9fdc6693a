#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hrl/hkernel.hpp"

namespace hrl::euclid {

// A point of the Euclidean plane; coordinates must be finite.
struct EPoint {
    double x = 0.0;
    double y = 0.0;

    EPoint() = default;
    EPoint(double x_, double y_);

    friend bool operator==(const EPoint&, const EPoint&) = default;
};

// Three wedges around a common apex. Wedge k spans counterclockwise from
// rays[k] to rays[(k + 1) % 3]; it owns its start ray when owns_start_ray[k]
// (otherwise the ray belongs to the preceding wedge), and the apex itself
// goes to apex_cell.
struct EWedgePartition {
    EPoint apex;
    std::array<double, 3> rays{};
    std::array<bool, 3> owns_start_ray{true, true, true};
    int apex_cell = 0;
};

// Central symmetry about c: x -> 2c - x.
EPoint e_point_symmetry(const EPoint& c, const EPoint& x);

// Membership in wedge k (0 <= k < 3), honoring the ray ownership flags.
bool e_wedge_contains(const EWedgePartition& part, int k, const EPoint& p);

// Index of the unique wedge containing p.
int e_classify(const EWedgePartition& part, const EPoint& p);

// Three 120-degree wedges at the origin with rays at pi/2 + 2*pi*k/3, each
// wedge owning its counterclockwise-start ray and the apex going to cell 0 --
// the same ownership convention as the hyperbolic sector partition.
EWedgePartition e_sector_partition();

// Least radius about the origin enclosing every monochromatic symmetric pair
// (x, 2c - x): a wedge and its point reflection about c meet in a bounded
// convex polygon (their recession cones are opposite, and a wedge narrower
// than a half-plane contains no line), so the overlap's farthest vertex from
// the origin bounds the locus. Returns 0 when every overlap is empty or a
// single point.
double symmetric_overlap_bound(const EWedgePartition& part, const EPoint& c);

struct EProbeHit {
    EPoint x;
    EPoint image;  // 2c - x
    int cell = -1;
};

struct EProbeReport {
    double radius = 0.0;
    double bound = 0.0;  // symmetric_overlap_bound(part, c)
    long checked = 0;    // sampled pairs with both points outside radius
    std::vector<EProbeHit> hits;
};

// Samples the annulus radius < |x| <= radius + 10 * (1 + |c|) and records
// every pair (x, 2c - x) whose points both lie outside radius yet fall in the
// same wedge. Requires radius > symmetric_overlap_bound(part, c); throws
// RadiusBelowBound otherwise.
EProbeReport e_bounded_symmetry_probe(const EWedgePartition& part, const EPoint& c,
                                      double radius, long samples, std::uint64_t seed);

// A full geodesic contained in cell `cell` of the m-wedge hyperbolic sector
// partition anchored at pi/2 (the same frame as e_sector_partition when
// m = 3): its ideal endpoints sit a quarter of the boundary arc in from
// either bounding ray. Verifies containment on 10^3 curve samples and, at 10
// curve points c, that the point symmetry about c swaps the ideal endpoints
// to within 1e-9; accepts 2 <= m <= 64.
Geodesic h_sector_geodesic_witness(int m, int cell);

}  // namespace hrl::euclid
