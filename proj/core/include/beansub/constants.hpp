#pragma once

#include <cmath>
#include <numbers>

namespace beansub::constants {

inline constexpr double e = std::numbers::e;
inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt2 = std::numbers::sqrt2;

/// Sufficient radius beyond which |log(w^2/(2-w^2))| >= 2.
inline const double R0 = e * std::sqrt(2.0 / (e * e - 1.0));

/// min |B(e^{it})|, attained at t = pi.
inline const double omega_min = std::sqrt(2.0 / (1.0 + e * e));

/// min |zeta B'(zeta)| on the unit circle, attained at zeta = 1.
inline const double d_min = sqrt2 * e / std::pow(1.0 + e * e, 1.5);

/// min Re(zeta B''/B'), attained at zeta = 1.
inline const double g_min = (1.0 - 2.0 * std::pow(e, 4) - e * e) / std::pow(1.0 + e * e, 2);

}  // namespace beansub::constants
