#include "hrl/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "hrl/sampling.hpp"

namespace hrl::ramsey {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTargetAngle = 2.0 * kPi / 3.0;
constexpr double kTripleTol = 1e-7;
constexpr double kDedupTol = 1e-9;
constexpr double kClusterEps = 0.05;
constexpr double kSampleRadiusCap = 20.0;

HPoint offset_from(const HPoint& c, double dist, double direction) {
    HPoint local = from_complex(std::polar(std::tanh(dist / 2.0), direction));
    return apply(inverse(translation_to_origin(c)), local);
}

double edist(const HPoint& p, const HPoint& q) { return std::abs(p.z() - q.z()); }

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string pair_text(const HPoint& p) { return "[" + fmt(p.x) + "," + fmt(p.y) + "]"; }

const char* regime_name(Regime r) {
    return r == Regime::cycle2 ? "cycle2" : "pigeonhole_m";
}

std::string record_line(const char* regime, double R, const std::optional<double>& r, int cell,
                        const HPoint& p, const HPoint& q, const HPoint& center, int cluster) {
    std::string line = "{\"regime\":\"";
    line += regime;
    line += "\",\"R\":" + fmt(R);
    line += ",\"r\":" + (r ? fmt(*r) : std::string("null"));
    line += ",\"cell\":" + std::to_string(cell);
    line += ",\"p\":" + pair_text(p);
    line += ",\"q\":" + pair_text(q);
    line += ",\"center\":" + pair_text(center);
    line += ",\"cluster\":" + std::to_string(cluster);
    line += "}\n";
    return line;
}

std::vector<HPoint> source_centers(const CenterSource& source) {
    if (const auto* triple = std::get_if<CenterTriple>(&source)) {
        return {triple->c0, triple->c1, triple->c2};
    }
    return std::get<CentralCandidateSet>(source).centers;
}

}  // namespace

CenterTriple center_triple_from(const lemma::TriangleSolution& sol) {
    Isometry h = translation_to_origin(sol.O);
    // h sends O to the origin by definition; writing the origin directly keeps
    // o free of the ~1e-16 normalization residue of evaluating h at O.
    CenterTriple triple{apply(h, sol.A), apply(h, sol.B), apply(h, sol.C), HPoint{}, sol};

    Isometry comp = compose(point_symmetry(triple.c2),
                            compose(point_symmetry(triple.c1), point_symmetry(triple.c0)));
    IsometryClass cls = classify(comp);
    if (cls.kind != IsometryKind::elliptic || !cls.angle || !cls.fixed_point ||
        std::abs(*cls.angle - kTargetAngle) > kTripleTol ||
        distance(*cls.fixed_point, triple.o) > kTripleTol) {
        throw Error("center triple does not compose to a third-turn rotation about o");
    }
    return triple;
}

CenterTriple canonical_center_triple() { return center_triple_from(lemma::solve_lemma()); }

double margin_constant(const CenterTriple& triple) {
    const std::array<Isometry, 3> f{point_symmetry(triple.c0), point_symmetry(triple.c1),
                                    point_symmetry(triple.c2)};
    Isometry g = Isometry::identity();
    double worst = 0.0;
    for (int j = 0; j < 9; ++j) {
        g = compose(f[j % 3], g);
        worst = std::max(worst, distance(triple.o, apply(inverse(g), triple.o)));
    }
    return worst;
}

double CycleTrace::closure_euclidean() const { return edist(points[9], points[0]); }

double CycleTrace::closure_hyperbolic() const { return distance(points[9], points[0]); }

CycleTrace nine_cycle(const CenterTriple& triple, const HPoint& x0) {
    const std::array<Isometry, 3> f{point_symmetry(triple.c0), point_symmetry(triple.c1),
                                    point_symmetry(triple.c2)};
    CycleTrace trace;
    trace.points[0] = x0;
    for (int i = 0; i < 9; ++i) trace.points[i + 1] = apply(f[i % 3], trace.points[i]);
    return trace;
}

WitnessPair find_witness_2(const Partition& part, const CenterTriple& triple, double R,
                           std::uint64_t seed) {
    if (part.cells.size() != 2) throw OutOfRange("two-cell witness needs a 2-cell partition");
    double rho = disk_bound_to_hyperbolic_radius(R);
    double margin = margin_constant(triple);

    Rng rng(seed);
    HPoint x0 = offset_from(triple.o, rho + margin + 1.0, rng.angle());
    CycleTrace trace = nine_cycle(triple, x0);

    const double boundary2 = (1.0 - 1.0 / R) * (1.0 - 1.0 / R);
    std::array<int, 10> color{};
    for (int i = 0; i < 10; ++i) {
        if (trace.points[i].norm2() <= boundary2) {
            throw Error("cycle point fell inside the excluded disk despite the margin");
        }
        color[i] = classify_point(part, trace.points[i]);
    }
    for (int i = 0; i < 9; ++i) {
        if (color[i] != color[i + 1]) continue;
        const std::array<HPoint, 3> c{triple.c0, triple.c1, triple.c2};
        return WitnessPair{trace.points[i], trace.points[i + 1], c[i % 3],
                           color[i],        R,                   Regime::cycle2};
    }
    throw NoWitness("nine-step cycle two-colored without a repeat; partition is defective");
}

CentralCandidateSet central_candidate_set(int m) {
    if (m < 2 || m > 64) throw OutOfRange("cell count outside [2, 64]");
    CentralCandidateSet set;
    set.m = m;
    for (int j = 0; j <= m; ++j) set.ideal_points.emplace_back(2.0 * kPi * j / (m + 1));
    for (int j = 0; j <= m; ++j) {
        for (int k = j + 1; k <= m; ++k) {
            HPoint mid = euclidean_arc_midpoint(set.ideal_points[j], set.ideal_points[k]);
            bool seen = false;
            for (const HPoint& c : set.centers) {
                if (edist(c, mid) <= kDedupTol) {
                    seen = true;
                    break;
                }
            }
            if (!seen) set.centers.push_back(mid);
        }
    }
    return set;
}

WitnessPair find_witness_m(const Partition& part, double r, double R) {
    int m = static_cast<int>(part.cells.size());
    if (m < 2 || m > 64) throw OutOfRange("cell count outside [2, 64]");
    if (R <= 1.0) throw InvalidBound("disk parameter must exceed 1");
    if (r <= 1.0 - 1.0 / R) throw RadiusInsideBound("witness circle lies inside the excluded disk");

    std::vector<HPoint> pts;
    std::vector<int> color;
    for (int j = 0; j <= m; ++j) {
        pts.push_back(from_complex(r * std::polar(1.0, 2.0 * kPi * j / (m + 1))));
        color.push_back(classify_point(part, pts.back()));
    }
    for (int j = 0; j <= m; ++j) {
        for (int k = j + 1; k <= m; ++k) {
            if (color[j] != color[k]) continue;
            return WitnessPair{pts[j],   pts[k], hyperbolic_midpoint(pts[j], pts[k]),
                               color[j], R,      Regime::pigeonhole_m};
        }
    }
    throw NoWitness("m+1 points two-by-two in distinct cells; partition is defective");
}

std::vector<MidpointSample> midpoint_convergence(const IdealPoint& x, const IdealPoint& y,
                                                 const std::vector<double>& r_schedule) {
    double gap = wrap_angle(x.theta - y.theta);
    if (gap == 0.0) throw DegenerateGeodesic("ideal endpoints coincide");
    bool antipodal = (gap == kPi);
    HPoint target = euclidean_arc_midpoint(x, y);

    std::vector<MidpointSample> out;
    for (double r : r_schedule) {
        if (r <= 0.0 || r >= 1.0) throw OutOfRange("schedule radius outside (0, 1)");
        HPoint px = from_complex(r * x.unit());
        HPoint py = antipodal ? HPoint(-px.x, -px.y) : from_complex(r * y.unit());
        HPoint mid = hyperbolic_midpoint(px, py);
        out.push_back({r, mid, edist(mid, target)});
    }
    return out;
}

HuntReport hunt(const Partition& part, const CenterSource& source,
                const std::vector<double>& R_schedule, const std::vector<double>& r_schedule,
                std::uint64_t seed) {
    // Source centers crowded below the clustering radius would make the
    // cluster-to-source assignment meaningless; candidate sets stay above it
    // through m = 9 and first dip under at m = 10.
    std::vector<HPoint> centers = source_centers(source);
    for (std::size_t i = 0; i < centers.size(); ++i) {
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            if (edist(centers[i], centers[j]) <= kClusterEps) {
                throw Error("source centers closer than the clustering radius 0.05");
            }
        }
    }

    HuntReport report;
    if (const auto* triple = std::get_if<CenterTriple>(&source)) {
        for (std::size_t i = 0; i < R_schedule.size(); ++i) {
            WitnessPair w = find_witness_2(part, *triple, R_schedule[i],
                                           seed + static_cast<std::uint64_t>(i));
            report.records.push_back({w, std::nullopt, -1});
        }
    } else {
        for (double R : R_schedule) {
            for (double r : r_schedule) {
                if (R <= 1.0 || r <= 1.0 - 1.0 / R || r >= 1.0) continue;  // inadmissible pair
                report.records.push_back({find_witness_m(part, r, R), r, -1});
            }
        }
    }

    for (HuntRecord& rec : report.records) {
        int assigned = -1;
        for (std::size_t k = 0; k < report.clusters.size(); ++k) {
            if (edist(rec.pair.center, report.clusters[k].representative) <= kClusterEps) {
                assigned = static_cast<int>(k);
                break;
            }
        }
        if (assigned < 0) {
            report.clusters.push_back({rec.pair.center, 0, 0.0, -1, 0.0});
            assigned = static_cast<int>(report.clusters.size()) - 1;
        }
        rec.cluster = assigned;
        ClusterSummary& cl = report.clusters[assigned];
        cl.count += 1;
        cl.max_R = std::max(cl.max_R, rec.pair.bound_R);
    }

    for (ClusterSummary& cl : report.clusters) {
        for (std::size_t k = 0; k < centers.size(); ++k) {
            double d = edist(cl.representative, centers[k]);
            if (cl.source_index < 0 || d < cl.source_distance) {
                cl.source_index = static_cast<int>(k);
                cl.source_distance = d;
            }
        }
    }
    return report;
}

ProbeReport boundedness_probe(const Partition& part, const std::vector<HPoint>& centers,
                              double R, long samples, std::uint64_t seed) {
    double rho_min = disk_bound_to_hyperbolic_radius(R);
    if (rho_min >= kSampleRadiusCap) {
        throw EmptySampleRegion("excluded disk swallows the whole sampling annulus");
    }

    std::vector<Isometry> symmetries;
    symmetries.reserve(centers.size());
    for (const HPoint& c : centers) symmetries.push_back(point_symmetry(c));

    ProbeReport report;
    report.R = R;
    report.centers = centers;
    Rng rng(seed);
    for (long i = 0; i < samples; ++i) {
        HPoint x = sample_annulus(rng, rho_min, kSampleRadiusCap);
        int cell = classify_point(part, x);
        for (std::size_t ci = 0; ci < symmetries.size(); ++ci) {
            HPoint y = apply(symmetries[ci], x);
            if (classify_point(part, y) == cell) {
                report.hits.push_back({x, y, cell, static_cast<int>(ci)});
            }
        }
        report.checked = i + 1;
    }
    return report;
}

std::vector<double> canonical_R_schedule() { return {2.0, 4.0, 8.0, 16.0, 32.0, 64.0}; }

std::vector<double> canonical_r_schedule() {
    std::vector<double> out;
    for (int k = 1; k <= 8; ++k) out.push_back(1.0 - std::pow(10.0, -k));
    return out;
}

std::string to_ndjson(const HuntReport& report) {
    std::string out;
    for (const HuntRecord& rec : report.records) {
        out += record_line(regime_name(rec.pair.regime), rec.pair.bound_R, rec.r, rec.pair.cell,
                           rec.pair.p, rec.pair.q, rec.pair.center, rec.cluster);
    }
    return out;
}

std::string to_ndjson(const ProbeReport& report) {
    std::string out;
    for (const ProbeHit& hit : report.hits) {
        out += record_line("probe", report.R, std::nullopt, hit.cell, hit.x, hit.image,
                           report.centers[static_cast<std::size_t>(hit.center_index)],
                           hit.center_index);
    }
    return out;
}

}  // namespace hrl::ramsey
