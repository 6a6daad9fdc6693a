#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrl/hkernel.hpp"
#include "hrl/partition.hpp"

namespace hrl::svg {

struct LabeledPoint {
    HPoint p;
    std::string label;
};

struct LabeledGeodesic {
    Geodesic g;
    std::string label;  // empty = no label text
};

struct Segment {
    HPoint a, b;
};

// What to draw. The unit-disk boundary is always present; partition cells are
// filled regions (intersection cells are left unfilled); geodesics render as
// diameters or circular arcs; witness segments are straight dashed chords;
// labeled points are dots with adjacent text.
struct Scene {
    std::optional<Partition> partition;
    std::vector<LabeledGeodesic> geodesics;
    std::vector<Segment> segments;
    std::vector<LabeledPoint> points;
};

// Deterministic SVG text: fixed element order (cells, boundary, geodesics,
// segments, points), six-decimal coordinates, y axis flipped to screen
// orientation (so a mathematically counterclockwise arc uses sweep flag 0).
std::string render_svg_text(const Scene& scene);

// Writes render_svg_text(scene) to path; failures name the path.
void render_svg(const Scene& scene, const std::string& path);

}  // namespace hrl::svg
