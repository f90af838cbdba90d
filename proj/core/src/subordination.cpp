#include "beansub/subordination.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "beansub/constants.hpp"
#include "beansub/errors.hpp"

namespace beansub {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <typename Image>
GridReport scan_circles(std::span<const double> radii, int samples, const DomainPredicate& target, double tol,
                        Image image) {
    if (radii.empty()) {
        throw PreconditionError("subordination: no radii given");
    }
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) {
            throw PreconditionError("subordination: radii must lie in (0, 1)");
        }
    }
    if (samples < 64) {
        throw PreconditionError("subordination: samples_per_circle must be >= 64");
    }

    GridReport report;
    report.grid_size = radii.size() * static_cast<std::size_t>(samples);
    bool first = true;
    int singular = 0;
    for (double radius : radii) {
        for (int k = 0; k < samples; ++k) {
            const double phi = 2.0 * constants::pi * k / samples;
            const Complex z = std::polar(radius, phi);
            const std::optional<Complex> value = image(z);
            const Margin margin = value ? target.margin(*value) : Margin::singular();
            if (margin.is_singular()) {
                ++singular;
            }
            if (first || margin.value() < report.worst_margin) {
                first = false;
                report.worst_margin = margin.value();
                report.witness = z;
                report.witness_image = value.value_or(Complex{NAN, NAN});
                report.witness_angle = phi;
                report.witness_radius = radius;
            }
        }
    }
    if (singular > 0) {
        report.notes.push_back(std::to_string(singular) + " singular sample(s) counted as outside");
    }
    report.pass = report.worst_margin > -tol;
    return report;
}

// p = z f'/f and z p' = p (1 + z f''/f' - p) from the jet of f at z != 0.
std::optional<RatioValue> ratio_at(const PolynomialJet& j, Complex z) {
    if (j.value == 0.0 || j.d1 == 0.0) {
        return std::nullopt;
    }
    const Complex p = z * j.d1 / j.value;
    const Complex zp = p * (1.0 + z * j.d2 / j.d1 - p);
    if (!finite(p) || !finite(zp)) {
        return std::nullopt;
    }
    return RatioValue{p, zp};
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    for (Complex c : coeffs_) {
        if (!finite(c)) {
            throw PreconditionError("Polynomial: non-finite coefficient");
        }
    }
}

PolynomialJet Polynomial::jet(Complex z) const {
    // Taylor-coefficient Horner: after the loop d1 = p', d2 = p''/2, d3 = p'''/6.
    Complex v{}, d1{}, d2{}, d3{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        d3 = d3 * z + d2;
        d2 = d2 * z + d1;
        d1 = d1 * z + v;
        v = v * z + *it;
    }
    return {v, d1, 2.0 * d2, 6.0 * d3};
}

NormalizedFunction::NormalizedFunction(std::vector<Complex> coeffs) {
    if (coeffs.size() < 2 || coeffs[0] != 0.0 || coeffs[1] != 1.0) {
        throw PreconditionError("NormalizedFunction: coefficients must start with [0, 1]");
    }
    poly_ = Polynomial(std::move(coeffs));
}

std::optional<RatioValue> ratio_transform(const NormalizedFunction& f, Complex z) {
    if (z == 0.0) {
        return RatioValue{{1.0, 0.0}, {0.0, 0.0}};
    }
    return ratio_at(f.polynomial().jet(z), z);
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<Complex> coeffs) {
    if (coeffs.empty() || std::abs(coeffs[0] - 1.0) > 1e-12) {
        throw PreconditionError("polynomial function must satisfy p(0) = 1");
    }
    return AnalyticFunction(Kind::Polynomial, Polynomial(std::move(coeffs)));
}

AnalyticFunction AnalyticFunction::bean_composed(std::vector<Complex> inner) {
    if (!inner.empty() && inner[0] != 0.0) {
        throw PreconditionError("bean_composed: inner factor must vanish at 0");
    }
    const double total = std::accumulate(inner.begin(), inner.end(), 0.0,
                                         [](double acc, Complex c) { return acc + std::abs(c); });
    if (total > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "bean_composed: inner coefficients must satisfy sum |a_k| <= 1 (got " << total << ")";
        throw PreconditionError(msg.str());
    }
    return AnalyticFunction(Kind::BeanComposed, Polynomial(std::move(inner)));
}

AnalyticFunction AnalyticFunction::ratio(NormalizedFunction f) {
    return AnalyticFunction(Kind::Ratio, f.polynomial());
}

std::optional<FunctionJet> AnalyticFunction::evaluate(Complex z) const {
    switch (kind_) {
        case Kind::Polynomial: {
            const PolynomialJet j = poly_.jet(z);
            return FunctionJet{j.value, z * j.d1, z * z * j.d2};
        }
        case Kind::BeanComposed: {
            const PolynomialJet w = poly_.jet(z);
            const Complex b1 = bean_derivative(w.value);
            const Complex b2 = bean_second_derivative(w.value);
            const Complex p1 = b1 * w.d1;
            const Complex p2 = b2 * w.d1 * w.d1 + b1 * w.d2;
            return FunctionJet{bean_value(w.value), z * p1, z * z * p2};
        }
        case Kind::Ratio: {
            if (z == 0.0) {
                return FunctionJet{{1.0, 0.0}, {}, {}};
            }
            const PolynomialJet j = poly_.jet(z);
            const auto rv = ratio_at(j, z);
            if (!rv) {
                return std::nullopt;
            }
            // With u = f'/f, v = f''/f, x = f'''/f and p = z u:
            //   p'' = 2 (v - u^2) + z (x - 3 u v + 2 u^3)
            const Complex u = j.d1 / j.value;
            const Complex v = j.d2 / j.value;
            const Complex x = j.d3 / j.value;
            const Complex pp = 2.0 * (v - u * u) + z * (x - 3.0 * u * v + 2.0 * u * u * u);
            return FunctionJet{rv->p, rv->zp_prime, z * z * pp};
        }
    }
    throw std::logic_error("AnalyticFunction: unknown kind");
}

GridReport check_subordination(const AnalyticFunction& p, const DomainPredicate& target,
                               std::span<const double> radii, int samples_per_circle,
                               SubordinationOptions options) {
    return scan_circles(radii, samples_per_circle, target, options.tol, [&](Complex z) -> std::optional<Complex> {
        const auto jet = p.evaluate(z);
        if (!jet) {
            return std::nullopt;
        }
        return jet->p;
    });
}

ImplicationReport check_implication(const TheoremSpec& spec, const AnalyticFunction& p,
                                    std::span<const double> radii, int samples_per_circle,
                                    SubordinationOptions options) {
    if (!spec.hypothesis_met()) {
        std::ostringstream msg;
        msg << theorem_name(spec.id) << ": hypothesis not met (value " << spec.hypothesis_value()
            << ", threshold " << spec.threshold << ")";
        throw HypothesisError(msg.str());
    }
    ImplicationReport out;
    out.premise = scan_circles(radii, samples_per_circle, spec.premise, options.tol,
                               [&](Complex z) -> std::optional<Complex> {
                                   const auto jet = p.evaluate(z);
                                   if (!jet) {
                                       return std::nullopt;
                                   }
                                   return spec.op.evaluate(jet->p, jet->zp, jet->z2pp);
                               });
    out.conclusion = check_subordination(p, DomainPredicate::bean(), radii, samples_per_circle, options);
    return out;
}

}  // namespace beansub
