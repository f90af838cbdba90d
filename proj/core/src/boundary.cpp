#include "beansub/boundary.hpp"

#include <cmath>
#include <sstream>

#include "beansub/constants.hpp"
#include "beansub/errors.hpp"

namespace beansub {

namespace {

// 1 + e^{-4 cos t} + 2 e^{-2 cos t} cos(2 sin t) = |1 + e^{-2 e^{it}}|^2
double boundary_denominator(double theta) {
    const double c = std::cos(theta);
    return 1.0 + std::exp(-4.0 * c) + 2.0 * std::exp(-2.0 * c) * std::cos(2.0 * std::sin(theta));
}

void require_finite_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw DomainError("boundary profile: non-finite angle");
    }
}

}  // namespace

double omega_profile(double theta) {
    require_finite_angle(theta);
    return constants::sqrt2 / std::pow(boundary_denominator(theta), 0.25);
}

double d_profile(double theta) {
    require_finite_angle(theta);
    return constants::sqrt2 * std::exp(-2.0 * std::cos(theta)) / std::pow(boundary_denominator(theta), 0.75);
}

double g_profile(double theta) {
    require_finite_angle(theta);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double e2 = std::exp(2.0 * c);
    const double e4 = std::exp(4.0 * c);
    const double num = c - 2.0 * e4 * c + e2 * (std::cos(theta - 2.0 * s) - 2.0 * std::cos(theta + 2.0 * s));
    const double den = 1.0 + e4 + 2.0 * e2 * std::cos(2.0 * s);
    return num / den;
}

double chi_profile(int n, double theta) {
    if (n < 1) {
        throw PreconditionError("chi_profile: n must be >= 1");
    }
    require_finite_angle(theta);
    return std::pow(2.0, (1.0 - n) / 2.0) * std::exp(-2.0 * std::cos(theta)) /
           std::pow(boundary_denominator(theta), (3.0 - n) / 4.0);
}

BoundaryPoint boundary_point(double theta) {
    require_finite_angle(theta);
    const Complex zeta = std::polar(1.0, theta);
    const Complex r = bean_value(zeta);
    const Complex s_unit = bean_tangent(zeta);
    return {theta, zeta, r, s_unit, std::abs(r), std::abs(s_unit), g_profile(theta)};
}

double Profile::operator()(double theta) const {
    switch (kind) {
        case Kind::Omega:
            return omega_profile(theta);
        case Kind::D:
            return d_profile(theta);
        case Kind::G:
            return g_profile(theta);
        case Kind::Chi:
            return chi_profile(n, theta);
    }
    throw std::logic_error("Profile: unknown kind");
}

ExtremalResult find_extremum(const std::function<double(double)>& f, double lo, double hi, Extremum kind,
                             double tol, ExtremumOptions options) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw PreconditionError("find_extremum: need finite lo < hi");
    }
    if (!(tol > 0.0)) {
        throw PreconditionError("find_extremum: tol must be positive");
    }
    if (options.scan_samples < 512) {
        throw PreconditionError("find_extremum: scan needs at least 512 samples");
    }

    // Minimize sign * f.
    const double sign = kind == Extremum::Min ? 1.0 : -1.0;
    auto objective = [&](double x) { return sign * f(x); };

    const int n = options.scan_samples;
    const double step = (hi - lo) / n;
    int best = 0;
    double best_value = objective(lo);
    for (int k = 1; k <= n; ++k) {
        const double v = objective(k == n ? hi : lo + k * step);
        if (v < best_value) {
            best_value = v;
            best = k;
        }
    }

    double a = best == 0 ? lo : lo + (best - 1) * step;
    double b = best == n ? hi : lo + (best + 1) * step;

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    int iterations = 0;
    while (b - a > tol) {
        if (iterations == options.max_iterations) {
            std::ostringstream msg;
            msg << "find_extremum: bracket width " << (b - a) << " above tol " << tol << " after "
                << iterations << " iterations";
            throw ConvergenceError(msg.str());
        }
        ++iterations;
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }

    const double arg = 0.5 * (a + b);
    return {arg, f(arg), kind, iterations, tol};
}

ExtremalResult find_extremum(Profile profile, double lo, double hi, Extremum kind, double tol,
                             ExtremumOptions options) {
    return find_extremum(std::function<double(double)>(profile), lo, hi, kind, tol, options);
}

const CriticalValues& critical_values() {
    static const CriticalValues values = [] {
        constexpr double tol = 1e-10;
        const double pi = constants::pi;
        const auto omega = find_extremum(Profile::omega(), 0.0, pi, Extremum::Max, tol);
        const auto d = find_extremum(Profile::d(), 0.0, pi, Extremum::Max, tol);
        const auto g = find_extremum(Profile::g(), 0.0, 2.0 * pi, Extremum::Min, tol);
        return CriticalValues{omega.arg,      omega.value,        d.arg, d.value, d_profile(0.0),
                              d_profile(pi), omega_profile(pi), g.arg, g.value};
    }();
    return values;
}

double omega_max() { return critical_values().omega_max; }

bool chi_floor_holds(int n, int grid, double tol) {
    if (grid < 1) {
        throw PreconditionError("chi_floor_holds: grid must be positive");
    }
    const double floor = chi_profile(n, 0.0);
    for (int k = 0; k < grid; ++k) {
        if (chi_profile(n, 2.0 * constants::pi * k / grid) < floor - tol) {
            return false;
        }
    }
    return true;
}

}  // namespace beansub
