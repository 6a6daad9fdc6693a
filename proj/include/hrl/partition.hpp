#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hrl/hkernel.hpp"

namespace hrl {

// Wedge at the origin between the rays at theta_from and theta_to
// (counterclockwise span in (0, 2*pi)). Owns its start ray when
// includes_from_ray; the origin itself belongs to the cell flagged
// owns_origin.
struct SectorRegion {
    double theta_from = 0.0;
    double theta_to = 0.0;
    bool includes_from_ray = true;
    bool owns_origin = false;

    friend bool operator==(const SectorRegion&, const SectorRegion&) = default;
};

enum class HalfPlaneSide { upper, lower };
enum class RealRay { nonneg, neg };

// Open half-plane off the real diameter plus one of its two rays: the upper
// cell pairs with [0,1), the lower with (-1,0) under the canonical split.
struct HalfPlaneWithRay {
    HalfPlaneSide side = HalfPlaneSide::upper;
    RealRay ray = RealRay::nonneg;

    friend bool operator==(const HalfPlaneWithRay&, const HalfPlaneWithRay&) = default;
};

// One side of a geodesic; side 0 is the side containing the origin (positive
// signed_offset). The boundary curve belongs to the owning side.
struct GeodesicSideRegion {
    Geodesic g;
    int side = 0;
    bool owns_boundary = false;

    friend bool operator==(const GeodesicSideRegion&, const GeodesicSideRegion&) = default;
};

struct CellRegion;

struct IntersectionRegion {
    std::vector<CellRegion> of;

    friend bool operator==(const IntersectionRegion&, const IntersectionRegion&);
};

struct CellRegion {
    std::variant<SectorRegion, HalfPlaneWithRay, GeodesicSideRegion, IntersectionRegion> region;

    friend bool operator==(const CellRegion&, const CellRegion&) = default;
};

bool contains(const CellRegion& cell, const HPoint& p);

struct Partition {
    std::string label;
    std::vector<CellRegion> cells;

    friend bool operator==(const Partition&, const Partition&) = default;
};

struct NoCell : Error {
    HPoint point;
    explicit NoCell(const HPoint& p) : Error("no cell contains the point"), point(p) {}
};

struct MultipleCells : Error {
    HPoint point;
    int first;
    int second;
    MultipleCells(const HPoint& p, int a, int b)
        : Error("point belongs to more than one cell"), point(p), first(a), second(b) {}
};

// Index of the unique cell containing p; throws NoCell / MultipleCells.
int classify_point(const Partition& part, const HPoint& p);

// m equal wedges of angle 2*pi/m starting at theta_offset, each owning its
// counterclockwise-start ray; the origin goes to cell 0. Accepts 2 <= m <= 64.
Partition sector_partition(int m, double theta_offset);

struct PropositionPartition {
    Partition part;  // cells in the canonical frame: upper+[0,1), lower+(-1,0)
    Isometry h;      // maps the (c1, c2) configuration to the canonical frame
};

// The two-cell counterexample partition split along the geodesic through c1
// and c2; queries are classified as classify_point(part, apply(h, x)).
PropositionPartition proposition_partition(const HPoint& c1, const HPoint& c2);

struct ValidationReport {
    bool valid = true;
    long checked = 0;
    std::optional<HPoint> witness;  // first violating sample
    std::string kind;               // "no_cell" or "multiple_cells"
    int cell_a = -1;
    int cell_b = -1;
};

// Seeded hyperbolic-area-uniform sampling (radius cap 20); checks that every
// sample lies in exactly one cell and reports the first violation.
ValidationReport validate(const Partition& part, long samples, std::uint64_t seed);

// JSON de/serialization; text form round-trips to identical in-memory values.
std::string partition_to_json_text(const Partition& part);
Partition partition_from_json_text(const std::string& text);
Partition load_partition_file(const std::string& path);
void save_partition_file(const Partition& part, const std::string& path);

}  // namespace hrl
