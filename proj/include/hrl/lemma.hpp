#pragma once

#include <array>
#include <optional>

#include "hrl/hkernel.hpp"

namespace hrl::lemma {

// An equilateral triangle whose triple-symmetry composition f_C o f_B o f_A
// rotates by exactly 2*pi/3 about O.
struct TriangleSolution {
    double t = 0.0;  // side length
    HPoint A, B, C;
    HPoint O;          // rotation center of the composition
    double phi = 0.0;  // composition angle at t
    double t0 = 0.0;   // supremum of the elliptic regime
};

// The auxiliary construction: M the midpoint of AB, P and X its reflections
// through A and P, X' its reflection through C, l the perpendicular to CM at
// C, p the perpendicular to AB at P, and their intersection when it exists.
struct LemmaConstructionTrace {
    HPoint M, P, X, Xp;
    Geodesic l, p;
    std::optional<HPoint> O_geom;
};

struct CompositionClass {
    IsometryKind kind = IsometryKind::elliptic;
    std::optional<double> phi;  // set only when elliptic
};

// Circumradius rho with cosh t = cosh^2(rho) + sinh^2(rho)/2, by bisection.
double circumradius_for_side(double t);

// Vertices at circumradius distance from the origin, first on the positive
// imaginary axis, counterclockwise. Accepts 1e-6 <= t <= 40.
std::array<HPoint, 3> equilateral_triangle(double t);

// f_C o f_B o f_A for the canonical triangle of side t.
Isometry triangle_composition(double t);
Isometry composition_of(const HPoint& A, const HPoint& B, const HPoint& C);

CompositionClass composition_angle(double t);

// Side length at which the composition stops being elliptic, to 1e-10.
double find_t0();

// Side length with composition angle 2*pi/3; tol bounds |phi - 2*pi/3|.
TriangleSolution solve_lemma(double tol = 1e-12);

LemmaConstructionTrace build_construction(const HPoint& A, const HPoint& B, const HPoint& C);

// Builds the construction for a solution and checks it against the solution's
// rotation center; throws NoIntersection when l and p do not meet.
LemmaConstructionTrace geometric_crosscheck(const TriangleSolution& sol);

}  // namespace hrl::lemma
