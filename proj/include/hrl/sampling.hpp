#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hrl/hkernel.hpp"

namespace hrl {

// Deterministic seeded generator; mt19937_64 output is fixed by the standard,
// so streams are reproducible across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, 2*pi).
    double angle() { return unit() * 2.0 * 3.141592653589793238462643383279502884; }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

// Uniform in hyperbolic area over the annulus rho_min <= rho <= rho_max
// (hyperbolic radii): the radial CDF is proportional to cosh(rho) - 1.
inline HPoint sample_annulus(Rng& rng, double rho_min, double rho_max) {
    double c0 = std::cosh(rho_min), c1 = std::cosh(rho_max);
    double rho = std::acosh(c0 + rng.unit() * (c1 - c0));
    double rad = std::tanh(rho / 2.0);
    double th = rng.angle();
    return {rad * std::cos(th), rad * std::sin(th)};
}

// Uniform in hyperbolic area over the disk of hyperbolic radius rho_max.
inline HPoint sample_disk(Rng& rng, double rho_max) {
    return sample_annulus(rng, 0.0, rho_max);
}

}  // namespace hrl
