#pragma once

#include <complex>
#include <optional>

#include "hrl/errors.hpp"

namespace hrl {

using cplx = std::complex<double>;

// Near-boundary guard: points with x^2 + y^2 >= 1 - kBoundaryGuard are rejected.
inline constexpr double kBoundaryGuard = 1e-12;

// Half-width of the |trace| = 2 band reported as parabolic.
inline constexpr double kClassTol = 1e-13;

// Band inside which an isometry is treated as the identity by classify().
inline constexpr double kIdentityTol = 1e-12;

// Normalizes an angle to [0, 2*pi).
double wrap_angle(double theta);

// A point of the open unit disk (Poincare model coordinates).
struct HPoint {
    double x = 0.0;
    double y = 0.0;

    HPoint() = default;
    HPoint(double x_, double y_);

    cplx z() const { return {x, y}; }
    double norm2() const { return x * x + y * y; }

    friend bool operator==(const HPoint&, const HPoint&) = default;
};

HPoint from_complex(cplx z);

// A point of the ideal boundary circle, stored as its angle in [0, 2*pi).
struct IdealPoint {
    double theta = 0.0;

    IdealPoint() = default;
    explicit IdealPoint(double t) : theta(wrap_angle(t)) {}

    cplx unit() const { return std::polar(1.0, theta); }

    friend bool operator==(const IdealPoint&, const IdealPoint&) = default;
};

// Orientation-preserving disk isometry z -> (a*z + b) / (conj(b)*z + conj(a)),
// kept normalized to |a|^2 - |b|^2 = 1.
struct Isometry {
    cplx a{1.0, 0.0};
    cplx b{0.0, 0.0};

    Isometry() = default;
    Isometry(cplx a_, cplx b_);

    static Isometry identity() { return {}; }
};

Isometry compose(const Isometry& g, const Isometry& h);
Isometry inverse(const Isometry& g);
HPoint apply(const Isometry& g, const HPoint& p);
IdealPoint apply_boundary(const Isometry& g, const IdealPoint& u);

// The Mobius map T_c(z) = (z - c) / (1 - conj(c) z), sending c to the origin.
Isometry translation_to_origin(const HPoint& c);

// Central symmetry f_c: the pi-rotation about c.
Isometry point_symmetry(const HPoint& c);

Isometry rotation_about(const HPoint& c, double theta);

// Hyperbolic distance, curvature -1 normalization: 2*artanh |(p-q)/(1-conj(q)p)|.
double distance(const HPoint& p, const HPoint& q);

HPoint hyperbolic_midpoint(const HPoint& p, const HPoint& q);

// A hyperbolic line, stored by its two ideal endpoints.
struct Geodesic {
    IdealPoint u;
    IdealPoint v;

    friend bool operator==(const Geodesic&, const Geodesic&) = default;
};

// Euclidean realization of a geodesic: a diameter (direction dir) or a
// circular arc orthogonal to the unit circle (center z0, radius r).
struct GeodesicRealization {
    bool is_diameter = false;
    cplx dir{1.0, 0.0};  // unit vector along the diameter
    cplx z0{0.0, 0.0};   // arc center, |z0|^2 = 1 + r^2
    double r = 0.0;
};

GeodesicRealization realize(const Geodesic& g);

// Signed Euclidean offset of p from the realized curve. Zero on the curve;
// positive on the side containing the origin (for a diameter: positive on the
// counterclockwise side of dir).
double signed_offset(const Geodesic& g, const HPoint& p);

// Point of g at signed hyperbolic arclength tau from the point of g nearest
// the origin.
HPoint point_on_geodesic(const Geodesic& g, double tau);

Geodesic geodesic_through(const HPoint& p, const HPoint& q);
Geodesic perpendicular_at(const Geodesic& g, const HPoint& p);
std::optional<HPoint> geodesic_intersection(const Geodesic& g1, const Geodesic& g2);
HPoint euclidean_arc_midpoint(const IdealPoint& u, const IdealPoint& v);

// Hyperbolic radius of the disk D_R = {|z| <= 1 - 1/R}.
double disk_bound_to_hyperbolic_radius(double R);

enum class IsometryKind { elliptic, parabolic, hyperbolic_translation };

struct IsometryClass {
    IsometryKind kind = IsometryKind::elliptic;
    std::optional<double> angle;               // elliptic: rotation angle in (0, 2*pi); identity: 0
    std::optional<HPoint> fixed_point;         // elliptic (unset for the identity)
    std::optional<Geodesic> axis;              // hyperbolic_translation
    std::optional<double> translation_length;  // hyperbolic_translation
};

IsometryClass classify(const Isometry& g);

}  // namespace hrl
