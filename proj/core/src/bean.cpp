#include "beansub/bean.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "beansub/constants.hpp"
#include "beansub/errors.hpp"

namespace beansub {

namespace {

void require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError(std::string(what) + ": non-finite argument");
    }
}

void require_closed_disk(Complex z, double radius_slack, const char* what) {
    require_finite(z, what);
    if (std::abs(z) > 1.0 + radius_slack) {
        std::ostringstream msg;
        msg << what << ": |z| = " << std::abs(z) << " lies outside the closed unit disk";
        throw DomainError(msg.str());
    }
}

// 1 + e^{-2z}. On the closed disk |Im 2z| <= 2 < pi, so this never reaches (-inf, 0]
// and the principal sqrt/log stay continuous.
Complex shifted_exp(Complex z) {
    const Complex u = 1.0 + std::exp(-2.0 * z);
    if (u.imag() == 0.0 && u.real() <= 0.0) {
        throw std::logic_error("bean: 1 + e^{-2z} crossed the principal branch cut");
    }
    return u;
}

}  // namespace

Complex bean_value(Complex z, double radius_slack) {
    require_closed_disk(z, radius_slack, "bean_value");
    return std::sqrt(2.0 / shifted_exp(z));
}

Complex bean_derivative(Complex z, double radius_slack) {
    require_closed_disk(z, radius_slack, "bean_derivative");
    const Complex u = shifted_exp(z);
    const Complex E = u - 1.0;
    return constants::sqrt2 * E / (u * std::sqrt(u));
}

Complex bean_second_derivative(Complex z, double radius_slack) {
    require_closed_disk(z, radius_slack, "bean_second_derivative");
    const Complex u = shifted_exp(z);
    const Complex E = u - 1.0;
    return -constants::sqrt2 * E * (2.0 - E) / (u * u * std::sqrt(u));
}

Complex bean_tangent(Complex zeta, double unit_tol) {
    require_finite(zeta, "bean_tangent");
    if (std::abs(std::abs(zeta) - 1.0) > unit_tol) {
        std::ostringstream msg;
        msg << "bean_tangent: |zeta| = " << std::abs(zeta) << " is not on the unit circle";
        throw DomainError(msg.str());
    }
    return zeta * bean_derivative(zeta, unit_tol);
}

std::vector<Complex> bean_image_boundary(int num_points) {
    if (num_points < 3) {
        throw PreconditionError("bean_image_boundary: num_points must be >= 3");
    }
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(num_points));
    for (int k = 0; k < num_points; ++k) {
        const double theta = 2.0 * constants::pi * k / num_points;
        out.push_back(bean_value(std::polar(1.0, theta)));
    }
    return out;
}

Margin Margin::singular() {
    return Margin(-std::numeric_limits<double>::infinity(), true);
}

void require_janowski_box(double A, double B) {
    if (!(B > -1.0 && B <= 0.0 && A > 0.0 && A <= 1.0)) {
        std::ostringstream msg;
        msg << "Janowski parameters must satisfy -1 < B <= 0 < A <= 1 (got A=" << A << ", B=" << B << ")";
        throw PreconditionError(msg.str());
    }
}

DomainPredicate DomainPredicate::bean() { return DomainPredicate(DomainKind::Bean, 0.0, 0.0); }

DomainPredicate DomainPredicate::janowski(double A, double B) {
    require_janowski_box(A, B);
    return DomainPredicate(DomainKind::Janowski, A, B);
}

DomainPredicate DomainPredicate::lemniscate() { return DomainPredicate(DomainKind::Lemniscate, 0.0, 0.0); }

Margin DomainPredicate::margin(Complex w) const {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        return Margin::singular();
    }
    switch (kind_) {
        case DomainKind::Bean: {
            const Complex w2 = w * w;
            const Complex denom = 2.0 - w2;
            if (w2 == 0.0 || std::abs(denom) <= 4.0 * std::numeric_limits<double>::epsilon()) {
                return Margin::singular();
            }
            const double value = 2.0 - std::abs(std::log(w2 / denom));
            if (!std::isfinite(value)) {
                return Margin::singular();
            }
            // The level set also contains the mirror image -B(D); keep it outside.
            if (w.real() <= 0.0) {
                return Margin::finite(std::min(value, 2.0 - constants::pi));
            }
            return Margin::finite(value);
        }
        case DomainKind::Janowski: {
            const Complex denom = A_ - B_ * w;
            if (denom == 0.0) {
                return Margin::singular();
            }
            return Margin::finite(1.0 - std::abs((w - 1.0) / denom));
        }
        case DomainKind::Lemniscate:
            return Margin::finite(1.0 - std::abs(w * w - 1.0));
    }
    throw std::logic_error("DomainPredicate: unknown kind");
}

double DomainPredicate::exclusion_radius() const {
    switch (kind_) {
        case DomainKind::Bean:
            return constants::R0;
        case DomainKind::Janowski:
            return (1.0 + A_) / (1.0 + B_);
        case DomainKind::Lemniscate:
            return constants::sqrt2;
    }
    throw std::logic_error("DomainPredicate: unknown kind");
}

std::string DomainPredicate::name() const {
    switch (kind_) {
        case DomainKind::Bean:
            return "bean";
        case DomainKind::Janowski: {
            std::ostringstream out;
            out << "janowski(A=" << A_ << ",B=" << B_ << ")";
            return out.str();
        }
        case DomainKind::Lemniscate:
            return "lemniscate";
    }
    return "unknown";
}

}  // namespace beansub
