#include "hrl/hkernel.hpp"

#include <algorithm>
#include <cmath>

namespace hrl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Angular threshold below which two ideal endpoints count as coincident.
constexpr double kEndpointTol = 1e-12;

// |theta_u - theta_v| within this of pi realizes as a diameter; the arc-center
// formula is catastrophically ill-conditioned closer to antipodal than this.
constexpr double kDiameterTol = 1e-8;

double wrap_signed(double theta) {
    // to (-pi, pi]
    double t = std::remainder(theta, 2.0 * kPi);
    if (t <= -kPi) t += 2.0 * kPi;
    return t;
}

double dot(cplx p, cplx q) { return p.real() * q.real() + p.imag() * q.imag(); }
double cross(cplx p, cplx q) { return p.real() * q.imag() - p.imag() * q.real(); }

bool endpoints_match(const Geodesic& g1, const Geodesic& g2) {
    auto close = [](const IdealPoint& s, const IdealPoint& t) {
        return std::abs(wrap_signed(s.theta - t.theta)) <= kEndpointTol;
    };
    return (close(g1.u, g2.u) && close(g1.v, g2.v)) ||
           (close(g1.u, g2.v) && close(g1.v, g2.u));
}

// Interior root of t^2 - 2*q*t + 1 = 0 (the chord parameter along a radical
// line); empty when both roots sit on or outside the unit circle.
std::optional<double> interior_chord_root(double q) {
    if (std::abs(q) <= 1.0) return std::nullopt;
    double s = std::sqrt(q * q - 1.0);
    double t = q > 0 ? q - s : q + s;
    if (t * t >= 1.0 - kBoundaryGuard) return std::nullopt;
    return t;
}

}  // namespace

double wrap_angle(double theta) {
    double t = std::remainder(theta, 2.0 * kPi);
    if (t < 0) t += 2.0 * kPi;
    if (t >= 2.0 * kPi) t = 0.0;
    return t;
}

HPoint::HPoint(double x_, double y_) : x(x_), y(y_) {
    if (!(x * x + y * y < 1.0 - kBoundaryGuard)) {
        throw OutOfDiskPrecision("point too close to the ideal boundary");
    }
}

HPoint from_complex(cplx z) { return {z.real(), z.imag()}; }

Isometry::Isometry(cplx a_, cplx b_) : a(a_), b(b_) {
    double det = std::norm(a) - std::norm(b);
    if (!(det > 0.0)) {
        throw Error("isometry matrix is not in SU(1,1)");
    }
    double s = std::sqrt(det);
    a /= s;
    b /= s;
}

Isometry compose(const Isometry& g, const Isometry& h) {
    return {g.a * h.a + g.b * std::conj(h.b), g.a * h.b + g.b * std::conj(h.a)};
}

Isometry inverse(const Isometry& g) { return {std::conj(g.a), -g.b}; }

HPoint apply(const Isometry& g, const HPoint& p) {
    cplx z = p.z();
    return from_complex((g.a * z + g.b) / (std::conj(g.b) * z + std::conj(g.a)));
}

IdealPoint apply_boundary(const Isometry& g, const IdealPoint& u) {
    cplx w = u.unit();
    cplx img = (g.a * w + g.b) / (std::conj(g.b) * w + std::conj(g.a));
    return IdealPoint(std::arg(img));
}

Isometry translation_to_origin(const HPoint& c) {
    double s = std::sqrt(1.0 - c.norm2());
    return {cplx{1.0 / s, 0.0}, -c.z() / s};
}

Isometry point_symmetry(const HPoint& c) {
    // T_c^{-1} o (z -> -z) o T_c, multiplied out.
    double n = c.norm2();
    double d = 1.0 - n;
    return {cplx{0.0, (1.0 + n) / d}, cplx{0.0, -2.0 / d} * c.z()};
}

Isometry rotation_about(const HPoint& c, double theta) {
    Isometry rot{std::polar(1.0, theta / 2.0), 0.0};
    Isometry t = translation_to_origin(c);
    return compose(inverse(t), compose(rot, t));
}

double distance(const HPoint& p, const HPoint& q) {
    cplx pz = p.z(), qz = q.z();
    double num = std::abs(pz - qz);
    if (num == 0.0) return 0.0;
    double den = std::abs(1.0 - std::conj(qz) * pz);
    double u = num / den;
    // 1 - u^2 = (1-|p|^2)(1-|q|^2) / den^2, which avoids the cancellation in
    // 1 - u when the points are deep in the disk.
    double w = (1.0 - p.norm2()) * (1.0 - q.norm2()) / (den * den * (1.0 + u));
    return std::log1p(2.0 * u / w);
}

HPoint hyperbolic_midpoint(const HPoint& p, const HPoint& q) {
    cplx pz = p.z(), qz = q.z();
    if (pz == qz) return p;
    if (p.x == -q.x && p.y == -q.y) return {};  // exactly antipodal: the origin, exactly
    cplx w = (qz - pz) / (1.0 - std::conj(pz) * qz);  // T_p(q)
    double aw = std::abs(w);
    if (aw == 0.0) return p;
    // |w| = tanh(d/2) can round to 1 for far-apart pairs; the half-distance
    // radius tanh(d/4) stays representable, so rebuild the midpoint from the
    // stably computed distance and the direction of w.
    cplx dir = w / aw;
    cplx m_local = std::tanh(distance(p, q) / 4.0) * dir;
    return from_complex((m_local + pz) / (1.0 + std::conj(pz) * m_local));
}

GeodesicRealization realize(const Geodesic& g) {
    double delta = wrap_signed(g.u.theta - g.v.theta);
    GeodesicRealization out;
    cplx U = g.u.unit(), V = g.v.unit();
    if (std::abs(std::abs(delta) - kPi) <= kDiameterTol) {
        out.is_diameter = true;
        cplx d = U - V;
        out.dir = d / std::abs(d);
        return out;
    }
    double c = std::cos(delta / 2.0);
    double denom = 2.0 * c * c;  // 1 + cos(delta), in cancellation-free form
    out.z0 = (U + V) / denom;
    out.r = std::sqrt((2.0 - denom) / denom);
    return out;
}

double signed_offset(const Geodesic& g, const HPoint& p) {
    GeodesicRealization re = realize(g);
    cplx z = p.z();
    if (re.is_diameter) return cross(re.dir, z);
    // (|z - z0|^2 - r^2) / (|z - z0| + r): positive on the origin side.
    double power = p.norm2() + 1.0 - 2.0 * dot(z, re.z0);
    return power / (std::abs(z - re.z0) + re.r);
}

HPoint point_on_geodesic(const Geodesic& g, double tau) {
    GeodesicRealization re = realize(g);
    double rad = std::tanh(tau / 2.0);
    if (re.is_diameter) return from_complex(rad * re.dir);
    HPoint m0 = euclidean_arc_midpoint(g.u, g.v);
    cplx tangent = cplx{0.0, 1.0} * (re.z0 / std::abs(re.z0));
    Isometry back = inverse(translation_to_origin(m0));
    return apply(back, from_complex(rad * tangent));
}

Geodesic geodesic_through(const HPoint& p, const HPoint& q) {
    if (distance(p, q) <= 1e-12) {
        throw DegenerateGeodesic("coincident points determine no geodesic");
    }
    cplx pz = p.z(), qz = q.z();
    double cr = cross(pz, qz);
    if (std::abs(cr) <= 1e-14) {
        // Collinear with the origin: the diameter through both points.
        cplx d = qz - pz;
        double t = std::atan2(d.imag(), d.real());
        return {IdealPoint(t), IdealPoint(t + kPi)};
    }
    // Orthocircle center z0 from 2<p,z0> = 1+|p|^2, 2<q,z0> = 1+|q|^2.
    double rp = 1.0 + p.norm2(), rq = 1.0 + q.norm2();
    double X = (rp * qz.imag() - rq * pz.imag()) / (2.0 * cr);
    double Y = (pz.real() * rq - qz.real() * rp) / (2.0 * cr);
    cplx z0{X, Y};
    double a2 = std::norm(z0);
    cplx root = cplx{0.0, 1.0} * std::sqrt(a2 - 1.0);
    cplx e1 = z0 * (1.0 + root) / a2;
    cplx e2 = z0 * (1.0 - root) / a2;
    return {IdealPoint(std::arg(e1)), IdealPoint(std::arg(e2))};
}

Geodesic perpendicular_at(const Geodesic& g, const HPoint& p) {
    if (std::abs(signed_offset(g, p)) > 1e-9) {
        throw PointNotOnGeodesic("perpendicular foot is not on the geodesic");
    }
    // Send p to the origin; the image of g is a diameter and the perpendicular
    // there is its quarter-turn, pulled back through the same map.
    Isometry t = translation_to_origin(p);
    cplx wu = apply_boundary(t, g.u).unit();
    Isometry back = inverse(t);
    IdealPoint a = apply_boundary(back, IdealPoint(std::arg(cplx{0.0, 1.0} * wu)));
    IdealPoint b = apply_boundary(back, IdealPoint(std::arg(cplx{0.0, -1.0} * wu)));
    return {a, b};
}

std::optional<HPoint> geodesic_intersection(const Geodesic& g1, const Geodesic& g2) {
    if (endpoints_match(g1, g2)) {
        throw IdenticalGeodesics("geodesics share both ideal endpoints");
    }
    GeodesicRealization r1 = realize(g1), r2 = realize(g2);
    if (r1.is_diameter && r2.is_diameter) {
        return HPoint{0.0, 0.0};
    }
    if (r1.is_diameter || r2.is_diameter) {
        const GeodesicRealization& dia = r1.is_diameter ? r1 : r2;
        const GeodesicRealization& arc = r1.is_diameter ? r2 : r1;
        auto t = interior_chord_root(dot(dia.dir, arc.z0));
        if (!t) return std::nullopt;
        return from_complex(*t * dia.dir);
    }
    // Both circles are orthogonal to the unit circle, so the origin has equal
    // power 1 with respect to each: the radical line is a diameter.
    cplx d = r2.z0 - r1.z0;
    double ad = std::abs(d);
    if (ad <= 1e-14) {
        // Concentric distinct orthocircles cannot both be orthogonal to the
        // unit circle unless identical, which was excluded above.
        return std::nullopt;
    }
    cplx e = cplx{0.0, 1.0} * d / ad;
    auto t = interior_chord_root(dot(e, r1.z0));
    if (!t) return std::nullopt;
    return from_complex(*t * e);
}

HPoint euclidean_arc_midpoint(const IdealPoint& u, const IdealPoint& v) {
    if (std::abs(wrap_signed(u.theta - v.theta)) <= kEndpointTol) {
        throw DegenerateGeodesic("coincident ideal endpoints");
    }
    GeodesicRealization re = realize({u, v});
    if (re.is_diameter) return HPoint{0.0, 0.0};
    double a = std::abs(re.z0);
    return from_complex(re.z0 / (a * (a + re.r)));
}

double disk_bound_to_hyperbolic_radius(double R) {
    if (!(R > 1.0)) throw InvalidBound("disk parameter must exceed 1");
    return 2.0 * std::atanh(1.0 - 1.0 / R);
}

IsometryClass classify(const Isometry& g) {
    IsometryClass out;
    double beta = g.a.imag();
    if (std::abs(g.b) <= kIdentityTol && std::abs(beta) <= kIdentityTol) {
        out.kind = IsometryKind::elliptic;
        out.angle = 0.0;
        return out;
    }
    double half_tr = std::abs(g.a.real());
    if (half_tr > 1.0 + kClassTol / 2.0) {
        out.kind = IsometryKind::hyperbolic_translation;
        out.translation_length = 2.0 * std::acosh(half_tr);
        // Boundary fixed points of conj(b) z^2 - 2i Im(a) z - b = 0.
        double q = std::sqrt(std::norm(g.b) - beta * beta);
        cplx cb = std::conj(g.b);
        cplx zp = (cplx{0.0, beta} + q) / cb;
        cplx zm = (cplx{0.0, beta} - q) / cb;
        out.axis = Geodesic{IdealPoint(std::arg(zp)), IdealPoint(std::arg(zm))};
        return out;
    }
    if (half_tr >= 1.0 - kClassTol / 2.0) {
        out.kind = IsometryKind::parabolic;
        return out;
    }
    out.kind = IsometryKind::elliptic;
    // Interior fixed point, written without the cancelling subtraction.
    double s = std::sqrt(beta * beta - std::norm(g.b));
    double denom = beta > 0 ? beta + s : beta - s;
    HPoint fp = from_complex(cplx{0.0, 1.0} * g.b / denom);
    out.fixed_point = fp;
    // |trace| = 2|cos(theta/2)| pins the angle up to the mirror pair
    // {theta, 2pi - theta}; the turn of a probe point near the fixed point
    // picks one.
    double cand = 2.0 * std::acos(std::min(half_tr, 1.0));
    Isometry t = translation_to_origin(fp);
    HPoint p0 = apply(inverse(t), HPoint{1e-3, 0.0});
    double probe = wrap_angle(std::arg(apply(t, apply(g, p0)).z()));
    if (cand < 1e-3) {
        // acos amplifies trace noise by 1/sin(theta/2) near 0 and 2*pi; the
        // probe angle is well-conditioned exactly there.
        out.angle = probe;
        return out;
    }
    double mirror = 2.0 * kPi - cand;
    out.angle = std::abs(wrap_signed(probe - cand)) <= std::abs(wrap_signed(probe - mirror))
                    ? cand
                    : mirror;
    return out;
}

}  // namespace hrl
