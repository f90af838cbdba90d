#pragma once

#include <cmath>
#include <complex>
#include <random>

namespace beansub::testing {

/// Uniform point in the closed disk of the given radius.
inline std::complex<double> random_in_disk(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double phi = 2.0 * M_PI * unit(rng);
    return std::polar(r, phi);
}

inline double random_angle(std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
}

}  // namespace beansub::testing
