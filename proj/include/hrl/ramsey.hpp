#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hrl/hkernel.hpp"
#include "hrl/lemma.hpp"
#include "hrl/partition.hpp"

namespace hrl::ramsey {

// Three centers of point symmetries whose composition f_c2 . f_c1 . f_c0 is a
// rotation by 2*pi/3 about o. Built from an equilateral-triangle solution and
// recentered so that o is the origin, which keeps the margin arithmetic of the
// witness search exact.
struct CenterTriple {
    HPoint c0, c1, c2;
    HPoint o;
    lemma::TriangleSolution source;
};

CenterTriple center_triple_from(const lemma::TriangleSolution& sol);
CenterTriple canonical_center_triple();

// Largest displacement of o under the inverses of the nine partial
// compositions of the cycle; bounds how far any iterate can fall back toward o.
double margin_constant(const CenterTriple& triple);

// The ten-point orbit x_0 .. x_9 with x_{i+1} = f_{c_{i mod 3}}(x_i).
// The composition of all nine symmetries is the identity, so x_9 returns to
// x_0 up to floating-point noise.
struct CycleTrace {
    std::array<HPoint, 10> points;

    double closure_euclidean() const;
    double closure_hyperbolic() const;
};

CycleTrace nine_cycle(const CenterTriple& triple, const HPoint& x0);

enum class Regime { cycle2, pigeonhole_m };

// A same-cell pair symmetric about a known center, with both points outside
// the excluded disk D_R = {|z| <= 1 - 1/R}.
struct WitnessPair {
    HPoint p, q;
    HPoint center;
    int cell = -1;
    double bound_R = 0.0;
    Regime regime = Regime::cycle2;
};

// Two-cell witness: places x_0 at hyperbolic radius rho(R) + margin + 1 from o
// in a seeded direction, colors the ten cycle points, and returns the first
// monochromatic consecutive pair together with the symmetry center between
// them. The margin keeps every iterate outside D_R (verified, not assumed).
WitnessPair find_witness_2(const Partition& part, const CenterTriple& triple, double R,
                           std::uint64_t seed = 0);

// The boundary configuration driving the m-cell witness: the (m+1)-th roots of
// unity and the pairwise Euclidean arc midpoints of the geodesics joining them
// (deduplicated within 1e-9).
struct CentralCandidateSet {
    int m = 0;
    std::vector<IdealPoint> ideal_points;
    std::vector<HPoint> centers;
};

CentralCandidateSet central_candidate_set(int m);

// m-cell witness at radius r: colors the m+1 points r * ideal_points; two of
// them share a cell by pigeonhole; returns that pair with its hyperbolic
// midpoint as the center.
WitnessPair find_witness_m(const Partition& part, double r, double R);

struct MidpointSample {
    double r = 0.0;
    HPoint midpoint;
    double deviation = 0.0;
};

// Tracks hyperbolic_midpoint(r*x, r*y) against the Euclidean arc midpoint of
// the geodesic with ideal endpoints x, y as r runs through the schedule.
std::vector<MidpointSample> midpoint_convergence(const IdealPoint& x, const IdealPoint& y,
                                                 const std::vector<double>& r_schedule);

struct HuntRecord {
    WitnessPair pair;
    std::optional<double> r;  // set in regime pigeonhole_m
    int cluster = -1;
};

struct ClusterSummary {
    HPoint representative;
    int count = 0;
    double max_R = 0.0;
    int source_index = -1;      // nearest source center (triple vertex or candidate)
    double source_distance = 0.0;
};

struct HuntReport {
    std::vector<HuntRecord> records;
    std::vector<ClusterSummary> clusters;
};

using CenterSource = std::variant<CenterTriple, CentralCandidateSet>;

// Runs the matching witness finder across the schedules (every R for the
// two-cell regime; every admissible (R, r) pair for the m-cell regime),
// clusters the witness centers by first-fit epsilon-balls (epsilon = 0.05
// Euclidean), and assigns each cluster to its nearest source center.
HuntReport hunt(const Partition& part, const CenterSource& source,
                const std::vector<double>& R_schedule, const std::vector<double>& r_schedule,
                std::uint64_t seed);

struct ProbeHit {
    HPoint x;
    HPoint image;
    int cell = -1;
    int center_index = -1;
};

// Samples the annulus between D_R and the sampling cap and reports every
// sample that lands in the same cell as its point-symmetric image about one of
// the centers. An empty hit list means no bounded-symmetry violation was seen.
struct ProbeReport {
    double R = 0.0;
    long checked = 0;
    std::vector<HPoint> centers;
    std::vector<ProbeHit> hits;
};

ProbeReport boundedness_probe(const Partition& part, const std::vector<HPoint>& centers,
                              double R, long samples, std::uint64_t seed);

// Canonical schedules: R doubling over {2, 4, ..., 64}; r = 1 - 10^-k, k = 1..8.
std::vector<double> canonical_R_schedule();
std::vector<double> canonical_r_schedule();

// Line-delimited JSON, one record per line, deterministic bytes.
std::string to_ndjson(const HuntReport& report);
std::string to_ndjson(const ProbeReport& report);

}  // namespace hrl::ramsey
