#pragma once

#include <functional>

#include "beansub/bean.hpp"

namespace beansub {

// Boundary profiles of B on zeta = e^{i theta}. All are 2 pi periodic and even in theta.

/// omega(theta) = |B(e^{i theta})|
double omega_profile(double theta);

/// d(theta) = |zeta B'(zeta)|
double d_profile(double theta);

/// g(theta) = Re(zeta B''(zeta) / B'(zeta))
double g_profile(double theta);

/// chi_n(theta) = d(theta) / omega(theta)^n. Requires n >= 1.
double chi_profile(int n, double theta);

struct BoundaryPoint {
    double theta;
    Complex zeta;
    Complex r;       ///< B(zeta)
    Complex s_unit;  ///< zeta B'(zeta)
    double omega;
    double d;
    double g;
};

BoundaryPoint boundary_point(double theta);

enum class Extremum { Min, Max };

struct ExtremalResult {
    double arg;
    double value;
    Extremum kind;
    int iterations;
    double tolerance_used;
};

/// Identifies one of the boundary profiles; chi uses `n`.
struct Profile {
    enum class Kind { Omega, D, G, Chi };

    Kind kind;
    int n = 1;

    double operator()(double theta) const;

    static Profile omega() { return {Kind::Omega}; }
    static Profile d() { return {Kind::D}; }
    static Profile g() { return {Kind::G}; }
    static Profile chi(int n) { return {Kind::Chi, n}; }
};

struct ExtremumOptions {
    int scan_samples = 512;
    int max_iterations = 200;
};

/// Coarse uniform scan over [lo, hi] (both endpoints sampled) to bracket the best sample,
/// then golden-section refinement until the bracket is narrower than tol.
/// Ties in the scan resolve to the lowest argument. Throws ConvergenceError when the
/// iteration cap is hit first.
ExtremalResult find_extremum(const std::function<double(double)>& f, double lo, double hi, Extremum kind,
                             double tol, ExtremumOptions options = {});

ExtremalResult find_extremum(Profile profile, double lo, double hi, Extremum kind, double tol,
                             ExtremumOptions options = {});

/// Critical values of the boundary profiles on [0, pi], computed once on first use.
struct CriticalValues {
    double theta0;     ///< argmax omega
    double omega_max;  ///< omega(theta0)
    double theta1;     ///< argmax d
    double d_max;      ///< d(theta1)
    double d_at_0;
    double d_at_pi;
    double omega_at_pi;
    double g_argmin;
    double g_min;
};

const CriticalValues& critical_values();

/// Maximum of omega over the circle; the constant entering every threshold.
double omega_max();

/// True when min_k chi_n(theta_k) >= chi_n(0) - tol over a uniform grid of [0, 2 pi).
bool chi_floor_holds(int n, int grid = 4096, double tol = 1e-12);

}  // namespace beansub
