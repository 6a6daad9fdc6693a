#include "hrl/lemma.hpp"

#include <cmath>

namespace hrl::lemma {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTarget = 2.0 * kPi / 3.0;
constexpr double kTMin = 1e-6;
constexpr double kTMax = 40.0;

double abs_trace(const Isometry& g) { return 2.0 * std::abs(g.a.real()); }

}  // namespace

double circumradius_for_side(double t) {
    double target = std::cosh(t);
    double lo = 0.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double ch = std::cosh(mid), sh = std::sinh(mid);
        (ch * ch + 0.5 * sh * sh < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::array<HPoint, 3> equilateral_triangle(double t) {
    if (!(t >= kTMin && t <= kTMax)) {
        throw OutOfRange("triangle side outside [1e-6, 40]");
    }
    double rad = std::tanh(circumradius_for_side(t) / 2.0);
    std::array<HPoint, 3> v;
    for (int k = 0; k < 3; ++k) {
        double th = kPi / 2.0 + 2.0 * kPi * k / 3.0;
        v[k] = HPoint{rad * std::cos(th), rad * std::sin(th)};
    }
    return v;
}

Isometry composition_of(const HPoint& A, const HPoint& B, const HPoint& C) {
    return compose(point_symmetry(C), compose(point_symmetry(B), point_symmetry(A)));
}

Isometry triangle_composition(double t) {
    auto v = equilateral_triangle(t);
    return composition_of(v[0], v[1], v[2]);
}

CompositionClass composition_angle(double t) {
    IsometryClass cl = classify(triangle_composition(t));
    CompositionClass out;
    out.kind = cl.kind;
    if (cl.kind == IsometryKind::elliptic) out.phi = cl.angle;
    return out;
}

double find_t0() {
    // The composition is elliptic for small t; bracket the first |trace| = 2
    // crossing on a coarse grid, then bisect.
    double step = 0.01;
    double prev = kTMin;
    double prev_f = abs_trace(triangle_composition(prev)) - 2.0;
    if (prev_f >= 0.0) throw BracketingFailed("composition not elliptic at t = 1e-6");
    double lo = 0.0, hi = 0.0;
    for (double t = step; t <= kTMax; t += step) {
        double f = abs_trace(triangle_composition(t)) - 2.0;
        if (f >= 0.0) {
            lo = prev;
            hi = t;
            break;
        }
        prev = t;
        prev_f = f;
    }
    if (hi == 0.0) throw BracketingFailed("no elliptic-to-hyperbolic transition in (1e-6, 40)");
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        (abs_trace(triangle_composition(mid)) - 2.0 < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

TriangleSolution solve_lemma(double tol) {
    double t0 = find_t0();
    double lo = 1e-4, hi = t0 - 1e-7;
    auto phi_at = [](double t) {
        CompositionClass c = composition_angle(t);
        return c.phi ? *c.phi : 0.0;  // non-elliptic counts as past the target
    };
    if (!(phi_at(lo) > kTarget && phi_at(hi) < kTarget)) {
        throw ConvergenceFailure("composition angle does not bracket 2*pi/3");
    }
    double best_t = lo, best_err = 4.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double phi = phi_at(mid);
        double err = std::abs(phi - kTarget);
        if (err < best_err) {
            best_err = err;
            best_t = mid;
        }
        // No early exit: the downstream identity-on-probes contract needs the
        // root driven to floating-point exhaustion, not merely below tol.
        (phi > kTarget ? lo : hi) = mid;
    }
    if (best_err > tol) throw ConvergenceFailure("bisection exhausted above tolerance");

    TriangleSolution sol;
    sol.t = best_t;
    sol.t0 = t0;
    auto v = equilateral_triangle(best_t);
    sol.A = v[0];
    sol.B = v[1];
    sol.C = v[2];
    IsometryClass cl = classify(composition_of(sol.A, sol.B, sol.C));
    if (cl.kind != IsometryKind::elliptic || !cl.fixed_point) {
        throw ConvergenceFailure("solved composition is not elliptic");
    }
    sol.phi = *cl.angle;
    sol.O = *cl.fixed_point;
    return sol;
}

LemmaConstructionTrace build_construction(const HPoint& A, const HPoint& B, const HPoint& C) {
    LemmaConstructionTrace tr;
    tr.M = hyperbolic_midpoint(A, B);
    tr.P = apply(point_symmetry(A), tr.M);
    tr.X = apply(point_symmetry(tr.P), tr.M);
    tr.Xp = apply(point_symmetry(C), tr.M);
    tr.l = perpendicular_at(geodesic_through(C, tr.M), C);
    tr.p = perpendicular_at(geodesic_through(A, B), tr.P);
    tr.O_geom = geodesic_intersection(tr.l, tr.p);
    return tr;
}

LemmaConstructionTrace geometric_crosscheck(const TriangleSolution& sol) {
    LemmaConstructionTrace tr = build_construction(sol.A, sol.B, sol.C);
    if (!tr.O_geom) {
        throw NoIntersection("the lines l and p do not meet (t at or above t0)");
    }
    if (std::abs(tr.O_geom->z() - sol.O.z()) > 1e-6) {
        throw Error("geometric center disagrees with the trace-derived center");
    }
    HPoint image = apply(composition_of(sol.A, sol.B, sol.C), tr.X);
    if (std::abs(image.z() - tr.Xp.z()) > 1e-9) {
        throw Error("composition does not carry X to X'");
    }
    if (!(distance(tr.X, tr.Xp) < 4.0 * sol.t)) {
        throw Error("shift bound 4t violated");
    }
    return tr;
}

}  // namespace hrl::lemma
