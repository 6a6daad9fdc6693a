#include "hrl/partition.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hrl/sampling.hpp"
#include "json.hpp"

namespace hrl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSampleRadiusCap = 20.0;

using ordered_json = nlohmann::ordered_json;

// Membership compares canonically wrapped angles directly instead of wrapped
// differences: subtracting nearly-equal angles across the 0/2*pi seam can round
// a hair-below-the-ray point onto the ray itself, which would put it in two
// adjacent wedges at once.
bool sector_contains(const SectorRegion& s, const HPoint& p) {
    if (p.x == 0.0 && p.y == 0.0) return s.owns_origin;
    double theta = wrap_angle(std::atan2(p.y, p.x));
    double from = wrap_angle(s.theta_from);
    double to = wrap_angle(s.theta_to);
    if (theta == from) return s.includes_from_ray;
    if (theta == to) return !s.includes_from_ray;  // the wedge owns exactly one boundary ray
    if (from < to) return theta > from && theta < to;
    return theta > from || theta < to;  // wedge spans the 0/2*pi seam
}

bool halfplane_contains(const HalfPlaneWithRay& h, const HPoint& p) {
    if (p.y > 0.0) return h.side == HalfPlaneSide::upper;
    if (p.y < 0.0) return h.side == HalfPlaneSide::lower;
    return (p.x >= 0.0) == (h.ray == RealRay::nonneg);
}

bool geodesic_side_contains(const GeodesicSideRegion& r, const HPoint& p) {
    double off = signed_offset(r.g, p);
    if (off == 0.0) return r.owns_boundary;
    return (off > 0.0) == (r.side == 0);
}

ordered_json region_to_json(const CellRegion& cell);

ordered_json sector_to_json(const SectorRegion& s) {
    ordered_json j{{"type", "sector"}, {"from", s.theta_from}, {"to", s.theta_to}};
    if (!s.includes_from_ray) j["includes_from_ray"] = false;
    if (s.owns_origin) j["owns_origin"] = true;
    return j;
}

ordered_json region_to_json(const CellRegion& cell) {
    return std::visit(
        [](const auto& r) -> ordered_json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, SectorRegion>) {
                return sector_to_json(r);
            } else if constexpr (std::is_same_v<T, HalfPlaneWithRay>) {
                return {{"type", "halfplane_ray"},
                        {"side", r.side == HalfPlaneSide::upper ? "upper" : "lower"},
                        {"ray", r.ray == RealRay::nonneg ? "nonneg" : "neg"}};
            } else if constexpr (std::is_same_v<T, GeodesicSideRegion>) {
                return {{"type", "geodesic_side"},
                        {"u", r.g.u.theta},
                        {"v", r.g.v.theta},
                        {"side", r.side},
                        {"owns_boundary", r.owns_boundary}};
            } else {
                ordered_json of = ordered_json::array();
                for (const CellRegion& sub : r.of) of.push_back(region_to_json(sub));
                return {{"type", "intersection"}, {"of", std::move(of)}};
            }
        },
        cell.region);
}

CellRegion region_from_json(const ordered_json& j);

SectorRegion sector_from_json(const ordered_json& j) {
    SectorRegion s;
    s.theta_from = j.at("from").get<double>();
    s.theta_to = j.at("to").get<double>();
    s.includes_from_ray = j.value("includes_from_ray", true);
    s.owns_origin = j.value("owns_origin", false);
    if (wrap_angle(s.theta_to - s.theta_from) == 0.0) {
        throw InvalidPartitionFile("sector span must be strictly between 0 and 2*pi");
    }
    return s;
}

CellRegion region_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("type")) {
        throw InvalidPartitionFile("cell is not an object with a type");
    }
    std::string type = j.at("type").get<std::string>();
    if (type == "sector") {
        return {sector_from_json(j)};
    }
    if (type == "halfplane_ray") {
        std::string side = j.at("side").get<std::string>();
        std::string ray = j.at("ray").get<std::string>();
        if ((side != "upper" && side != "lower") || (ray != "nonneg" && ray != "neg")) {
            throw InvalidPartitionFile("halfplane_ray side/ray out of vocabulary");
        }
        return {HalfPlaneWithRay{side == "upper" ? HalfPlaneSide::upper : HalfPlaneSide::lower,
                                 ray == "nonneg" ? RealRay::nonneg : RealRay::neg}};
    }
    if (type == "geodesic_side") {
        int side = j.at("side").get<int>();
        if (side != 0 && side != 1) throw InvalidPartitionFile("geodesic side must be 0 or 1");
        Geodesic g{IdealPoint(j.at("u").get<double>()), IdealPoint(j.at("v").get<double>())};
        if (wrap_angle(g.u.theta - g.v.theta) == 0.0) {
            throw InvalidPartitionFile("geodesic endpoints coincide");
        }
        return {GeodesicSideRegion{g, side, j.at("owns_boundary").get<bool>()}};
    }
    if (type == "intersection") {
        IntersectionRegion inter;
        for (const auto& sub : j.at("of")) inter.of.push_back(region_from_json(sub));
        if (inter.of.empty()) throw InvalidPartitionFile("empty intersection");
        return {std::move(inter)};
    }
    throw InvalidPartitionFile("unknown cell type: " + type);
}

}  // namespace

bool operator==(const IntersectionRegion& a, const IntersectionRegion& b) {
    return a.of == b.of;
}

bool contains(const CellRegion& cell, const HPoint& p) {
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, SectorRegion>) {
                return sector_contains(r, p);
            } else if constexpr (std::is_same_v<T, HalfPlaneWithRay>) {
                return halfplane_contains(r, p);
            } else if constexpr (std::is_same_v<T, GeodesicSideRegion>) {
                return geodesic_side_contains(r, p);
            } else {
                for (const CellRegion& sub : r.of) {
                    if (!contains(sub, p)) return false;
                }
                return true;
            }
        },
        cell.region);
}

int classify_point(const Partition& part, const HPoint& p) {
    int found = -1;
    for (int i = 0; i < static_cast<int>(part.cells.size()); ++i) {
        if (contains(part.cells[i], p)) {
            if (found >= 0) throw MultipleCells(p, found, i);
            found = i;
        }
    }
    if (found < 0) throw NoCell(p);
    return found;
}

Partition sector_partition(int m, double theta_offset) {
    if (m < 2 || m > 64) throw OutOfRange("sector count outside [2, 64]");
    Partition part;
    part.label = "sectors" + std::to_string(m);
    for (int k = 0; k < m; ++k) {
        SectorRegion s;
        s.theta_from = wrap_angle(theta_offset + 2.0 * kPi * k / m);
        s.theta_to = wrap_angle(theta_offset + 2.0 * kPi * (k + 1) / m);
        s.includes_from_ray = true;
        s.owns_origin = (k == 0);
        part.cells.push_back({s});
    }
    return part;
}

PropositionPartition proposition_partition(const HPoint& c1, const HPoint& c2) {
    if (distance(c1, c2) <= 1e-9) {
        throw DegenerateCenters("symmetry centers coincide");
    }
    HPoint mid = hyperbolic_midpoint(c1, c2);
    Isometry t = translation_to_origin(mid);
    double dir = std::arg(apply(t, c2).z());
    Isometry rot{std::polar(1.0, -dir / 2.0), 0.0};
    PropositionPartition out;
    out.h = compose(rot, t);
    out.part.label = "proposition_halfplanes";
    out.part.cells.push_back({HalfPlaneWithRay{HalfPlaneSide::upper, RealRay::nonneg}});
    out.part.cells.push_back({HalfPlaneWithRay{HalfPlaneSide::lower, RealRay::neg}});
    return out;
}

ValidationReport validate(const Partition& part, long samples, std::uint64_t seed) {
    ValidationReport rep;
    Rng rng(seed);
    for (long i = 0; i < samples; ++i) {
        HPoint p = sample_disk(rng, kSampleRadiusCap);
        int first = -1, second = -1;
        for (int k = 0; k < static_cast<int>(part.cells.size()); ++k) {
            if (contains(part.cells[k], p)) {
                if (first < 0) {
                    first = k;
                } else {
                    second = k;
                    break;
                }
            }
        }
        rep.checked = i + 1;
        if (first < 0) {
            rep.valid = false;
            rep.witness = p;
            rep.kind = "no_cell";
            return rep;
        }
        if (second >= 0) {
            rep.valid = false;
            rep.witness = p;
            rep.kind = "multiple_cells";
            rep.cell_a = first;
            rep.cell_b = second;
            return rep;
        }
    }
    return rep;
}

std::string partition_to_json_text(const Partition& part) {
    ordered_json j;
    j["label"] = part.label;
    ordered_json cells = ordered_json::array();
    for (const CellRegion& cell : part.cells) cells.push_back(region_to_json(cell));
    j["cells"] = std::move(cells);
    return j.dump(2) + "\n";
}

Partition partition_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidPartitionFile(std::string("JSON parse error: ") + e.what());
    }
    try {
        Partition part;
        part.label = j.at("label").get<std::string>();
        const auto& cells = j.at("cells");
        if (!cells.is_array() || cells.size() < 2) {
            throw InvalidPartitionFile("a partition needs at least two cells");
        }
        for (const auto& c : cells) part.cells.push_back(region_from_json(c));
        return part;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidPartitionFile(std::string("bad partition structure: ") + e.what());
    }
}

Partition load_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidPartitionFile("cannot open partition file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return partition_from_json_text(buf.str());
}

void save_partition_file(const Partition& part, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write partition file: " + path);
    out << partition_to_json_text(part);
}

}  // namespace hrl
