#include "hrl/svg.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <string>

#include "hrl/errors.hpp"

namespace hrl::svg {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCenterPx = 320.0;
constexpr double kScalePx = 300.0;

const char* const kPalette[8] = {"#4e79a7", "#f28e2b", "#59a14c", "#e15759",
                                 "#b07aa1", "#76b7b2", "#edc948", "#9c755f"};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// Screen coordinates: y grows downward, so the vertical axis is flipped.
std::string px(double x) { return num(kCenterPx + kScalePx * x); }
std::string py(double y) { return num(kCenterPx - kScalePx * y); }

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        if (ch == '&')
            out += "&amp;";
        else if (ch == '<')
            out += "&lt;";
        else if (ch == '>')
            out += "&gt;";
        else
            out += ch;
    }
    return out;
}

// Arc of the unit circle from angle `from`, spanning `span` counterclockwise
// when ccw (clockwise otherwise), as an SVG arc command. Mathematically
// counterclockwise means sweep flag 0 on the flipped y axis.
std::string boundary_arc(double from, double span, bool ccw) {
    double to = ccw ? from + span : from - span;
    std::string cmd = "A " + num(kScalePx) + " " + num(kScalePx) + " 0 ";
    cmd += span > kPi ? "1 " : "0 ";
    cmd += ccw ? "0 " : "1 ";
    cmd += px(std::cos(to)) + " " + py(std::sin(to));
    return cmd;
}

// Path command tracing g from its endpoint u to its endpoint v through the
// disk: a straight diameter or the minor arc of the realization circle.
std::string geodesic_draw_cmd(const Geodesic& g) {
    GeodesicRealization real = realize(g);
    cplx ue = g.u.unit();
    cplx ve = g.v.unit();
    if (real.is_diameter) return "L " + px(ve.real()) + " " + py(ve.imag());

    double au = std::arg(ue - real.z0);
    double av = std::arg(ve - real.z0);
    bool ccw = wrap_angle(av - au) <= kPi;  // minor arc: counterclockwise iff span below pi
    std::string cmd = "A " + num(kScalePx * real.r) + " " + num(kScalePx * real.r) + " 0 0 ";
    cmd += ccw ? "0 " : "1 ";
    cmd += px(ve.real()) + " " + py(ve.imag());
    return cmd;
}

std::string move_to(double x, double y) { return "M " + px(x) + " " + py(y); }

std::string sector_path(const SectorRegion& s) {
    double from = wrap_angle(s.theta_from);
    double span = wrap_angle(s.theta_to - s.theta_from);
    std::string d = move_to(0.0, 0.0);
    d += " L " + px(std::cos(from)) + " " + py(std::sin(from));
    d += " " + boundary_arc(from, span, true);
    d += " Z";
    return d;
}

std::string halfplane_path(const HalfPlaneWithRay& h) {
    // Upper half disk: boundary arc from angle 0 counterclockwise through pi;
    // lower: from pi counterclockwise back to 2*pi. Both close on a diameter.
    double from = h.side == HalfPlaneSide::upper ? 0.0 : kPi;
    std::string d = move_to(std::cos(from), std::sin(from));
    d += " " + boundary_arc(from, kPi, true);
    d += " Z";
    return d;
}

std::string geodesic_side_path(const GeodesicSideRegion& region) {
    const Geodesic& g = region.g;
    std::string d = move_to(g.u.unit().real(), g.u.unit().imag());
    d += " " + geodesic_draw_cmd(g);

    // Return along the boundary arc that borders the requested side: probe
    // the counterclockwise candidate's midpoint and keep it when its side
    // matches, otherwise trace the complementary arc clockwise.
    double span_ccw = wrap_angle(g.u.theta - g.v.theta);
    double mid = g.v.theta + span_ccw / 2.0;
    HPoint probe = from_complex(0.99 * std::polar(1.0, mid));
    bool probe_on_side = (signed_offset(g, probe) > 0.0) == (region.side == 0);
    if (probe_on_side)
        d += " " + boundary_arc(g.v.theta, span_ccw, true);
    else
        d += " " + boundary_arc(g.v.theta, 2 * kPi - span_ccw, false);
    d += " Z";
    return d;
}

void append_cell(std::string& out, const CellRegion& cell, int index) {
    std::string path;
    if (const auto* s = std::get_if<SectorRegion>(&cell.region))
        path = sector_path(*s);
    else if (const auto* h = std::get_if<HalfPlaneWithRay>(&cell.region))
        path = halfplane_path(*h);
    else if (const auto* gs = std::get_if<GeodesicSideRegion>(&cell.region))
        path = geodesic_side_path(*gs);
    else
        return;  // intersection cells are not filled
    out += "  <path id=\"cell-" + std::to_string(index) + "\" d=\"" + path + "\" fill=\"" +
           kPalette[index % 8] + "\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
}

}  // namespace

std::string render_svg_text(const Scene& scene) {
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
        "viewBox=\"0 0 640 640\">\n";

    if (scene.partition) {
        const auto& cells = scene.partition->cells;
        for (std::size_t i = 0; i < cells.size(); ++i)
            append_cell(out, cells[i], static_cast<int>(i));
    }

    out += "  <circle id=\"boundary\" cx=\"" + num(kCenterPx) + "\" cy=\"" + num(kCenterPx) +
           "\" r=\"" + num(kScalePx) + "\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"1.5\"/>\n";

    for (std::size_t i = 0; i < scene.geodesics.size(); ++i) {
        const LabeledGeodesic& lg = scene.geodesics[i];
        std::string d = move_to(lg.g.u.unit().real(), lg.g.u.unit().imag());
        d += " " + geodesic_draw_cmd(lg.g);
        out += "  <path id=\"geodesic-" + std::to_string(i) + "\" d=\"" + d +
               "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1.2\"/>\n";
        if (!lg.label.empty()) {
            HPoint anchor = point_on_geodesic(lg.g, 0.35);
            out += "  <text x=\"" + num(kCenterPx + kScalePx * anchor.x + 6) + "\" y=\"" +
                   num(kCenterPx - kScalePx * anchor.y - 6) +
                   "\" font-family=\"sans-serif\" font-size=\"15\" font-style=\"italic\">" +
                   xml_escape(lg.label) + "</text>\n";
        }
    }

    for (std::size_t i = 0; i < scene.segments.size(); ++i) {
        const Segment& seg = scene.segments[i];
        out += "  <line id=\"segment-" + std::to_string(i) + "\" x1=\"" + px(seg.a.x) +
               "\" y1=\"" + py(seg.a.y) + "\" x2=\"" + px(seg.b.x) + "\" y2=\"" + py(seg.b.y) +
               "\" stroke=\"#666666\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }

    for (std::size_t i = 0; i < scene.points.size(); ++i) {
        const LabeledPoint& lp = scene.points[i];
        out += "  <circle id=\"point-" + std::to_string(i) + "\" cx=\"" + px(lp.p.x) +
               "\" cy=\"" + py(lp.p.y) + "\" r=\"3.5\" fill=\"#111111\"/>\n";
        if (!lp.label.empty()) {
            out += "  <text x=\"" + num(kCenterPx + kScalePx * lp.p.x + 7) + "\" y=\"" +
                   num(kCenterPx - kScalePx * lp.p.y - 7) +
                   "\" font-family=\"sans-serif\" font-size=\"15\">" + xml_escape(lp.label) +
                   "</text>\n";
        }
    }

    out += "</svg>\n";
    return out;
}

void render_svg(const Scene& scene, const std::string& path) {
    std::string text = render_svg_text(scene);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open SVG output file: " + path);
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    file.flush();
    if (!file.good()) throw Error("failed writing SVG file: " + path);
}

}  // namespace hrl::svg
