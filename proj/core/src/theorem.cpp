#include "beansub/theorem.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "beansub/boundary.hpp"
#include "beansub/constants.hpp"
#include "beansub/errors.hpp"

namespace beansub {

namespace {

Complex int_power(Complex z, int k) {
    Complex out{1.0, 0.0};
    for (int i = 0; i < k; ++i) {
        out *= z;
    }
    return out;
}

constexpr std::array<TheoremId, 12> kAllTheorems{
    TheoremId::BeanPower,          TheoremId::BeanQuotient,        TheoremId::BeanMobius,
    TheoremId::BeanSecondOrder,    TheoremId::JanowskiPower,       TheoremId::JanowskiQuotient,
    TheoremId::JanowskiMobius,     TheoremId::JanowskiSecondOrder, TheoremId::LemniscatePower,
    TheoremId::LemniscateQuotient, TheoremId::LemniscateMobius,    TheoremId::LemniscateSecondOrder,
};

constexpr std::array<std::string_view, 12> kNames{
    "bean-power",          "bean-quotient",        "bean-mobius",
    "bean-second-order",   "janowski-power",       "janowski-quotient",
    "janowski-mobius",     "janowski-second-order", "lemniscate-power",
    "lemniscate-quotient", "lemniscate-mobius",    "lemniscate-second-order",
};

std::size_t index_of(TheoremId id) { return static_cast<std::size_t>(id); }

DomainPredicate premise_domain(TheoremId id, const TheoremParams& params) {
    switch (target_kind(id)) {
        case DomainKind::Bean:
            return DomainPredicate::bean();
        case DomainKind::Janowski:
            return DomainPredicate::janowski(params.A, params.B);
        case DomainKind::Lemniscate:
            return DomainPredicate::lemniscate();
    }
    throw std::logic_error("premise_domain: unknown target");
}

void validate(TheoremId id, const TheoremParams& params) {
    if (params.delta != 0 && params.delta != 1) {
        throw PreconditionError("delta must be 0 or 1 (got " + std::to_string(params.delta) + ")");
    }
    if (params.n < 1) {
        throw PreconditionError("n must be a positive integer (got " + std::to_string(params.n) + ")");
    }
    if (target_kind(id) == DomainKind::Janowski) {
        require_janowski_box(params.A, params.B);
    }
}

bool positive_real(Complex z) { return z.imag() == 0.0 && z.real() > 0.0; }

}  // namespace

Complex OperatorSpec::evaluate(Complex r, Complex s, Complex t) const {
    switch (form) {
        case OperatorForm::Power:
            return int_power(r, delta) + beta * int_power(s, n);
        case OperatorForm::Quotient:
            return int_power(r, delta) + beta * s / int_power(r, n);
        case OperatorForm::Mobius:
            return r + s / (beta * r + gamma);
        case OperatorForm::SecondOrder:
            return int_power(r, delta) + gamma * s + beta * t;
    }
    throw std::logic_error("OperatorSpec: unknown form");
}

std::span<const TheoremId> all_theorems() { return kAllTheorems; }

std::string_view theorem_name(TheoremId id) { return kNames.at(index_of(id)); }

std::optional<TheoremId> parse_theorem(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) {
            return kAllTheorems[i];
        }
    }
    return std::nullopt;
}

OperatorForm operator_form(TheoremId id) {
    static constexpr std::array<OperatorForm, 4> forms{OperatorForm::Power, OperatorForm::Quotient,
                                                       OperatorForm::Mobius, OperatorForm::SecondOrder};
    return forms[index_of(id) % 4];
}

DomainKind target_kind(TheoremId id) {
    static constexpr std::array<DomainKind, 3> kinds{DomainKind::Bean, DomainKind::Janowski, DomainKind::Lemniscate};
    return kinds[index_of(id) / 4];
}

ThresholdSense threshold_sense(OperatorForm form) {
    switch (form) {
        case OperatorForm::Power:
        case OperatorForm::Quotient:
            return ThresholdSense::MinModulus;
        case OperatorForm::Mobius:
            return ThresholdSense::MaxWeightedSum;
        case OperatorForm::SecondOrder:
            return ThresholdSense::MinCombination;
    }
    throw std::logic_error("threshold_sense: unknown form");
}

double threshold(TheoremId id, const TheoremParams& params) {
    validate(id, params);
    using constants::e;
    const double bound = premise_domain(id, params).exclusion_radius();
    const double omega = omega_max();
    const double omega_delta = params.delta == 1 ? omega : 1.0;
    const double root2e = constants::sqrt2 * e;
    const double one_e2 = 1.0 + e * e;
    const int n = params.n;

    switch (operator_form(id)) {
        case OperatorForm::Power:
            return (bound + omega_delta) * std::pow(one_e2, 1.5 * n) / std::pow(root2e, n);
        case OperatorForm::Quotient:
            if (!chi_floor_holds(n)) {
                throw UnsupportedParameters("quotient threshold: min chi_n(theta) = chi_n(0) fails for n = " +
                                            std::to_string(n));
            }
            return (bound + omega_delta) * std::pow(one_e2, (3.0 - n) / 2.0) / std::pow(root2e, 1.0 - n);
        case OperatorForm::Mobius:
            return root2e / (std::pow(one_e2, 1.5) * (bound + omega));
        case OperatorForm::SecondOrder:
            // sqrt2 e (gamma (1+e^2)^2 + beta (1 - 2e^4 - e^2)) >= (bound + omega^delta)(1+e^2)^{7/2},
            // divided through by sqrt2 e (1+e^2)^2.
            return (bound + omega_delta) * std::pow(one_e2, 3.5) / (root2e * one_e2 * one_e2);
    }
    throw std::logic_error("threshold: unknown form");
}

TheoremSpec TheoremSpec::make(TheoremId id, TheoremParams params, Complex beta, Complex gamma) {
    validate(id, params);
    const OperatorForm form = operator_form(id);
    if (beta == 0.0) {
        throw PreconditionError("beta must be non-zero");
    }
    if (form == OperatorForm::SecondOrder && !(positive_real(beta) && positive_real(gamma))) {
        throw UnsupportedParameters("second-order certification covers real positive beta and gamma only");
    }
    if (form == OperatorForm::Mobius || form == OperatorForm::SecondOrder) {
        params.n = 1;
    }
    if (form == OperatorForm::Mobius) {
        params.delta = 1;
    }
    OperatorSpec op{form, params.delta, params.n, beta, gamma};
    const DomainPredicate premise = premise_domain(id, params);
    return TheoremSpec{id, params, op, premise, premise.exclusion_radius(), beansub::threshold(id, params)};
}

TheoremSpec TheoremSpec::at_threshold(TheoremId id, TheoremParams params, double slack) {
    if (!(slack > 0.0)) {
        throw PreconditionError("at_threshold: slack must be positive");
    }
    const double thr = beansub::threshold(id, params);
    switch (operator_form(id)) {
        case OperatorForm::Power:
        case OperatorForm::Quotient:
            return make(id, params, thr * slack);
        case OperatorForm::Mobius: {
            const double share = thr / (2.0 * slack);
            return make(id, params, share / omega_max(), share);
        }
        case OperatorForm::SecondOrder: {
            const double beta = 1.0;
            return make(id, params, beta, thr * slack - beta * constants::g_min);
        }
    }
    throw std::logic_error("at_threshold: unknown form");
}

double TheoremSpec::hypothesis_value() const {
    switch (threshold_sense(op.form)) {
        case ThresholdSense::MinModulus:
            return std::abs(op.beta);
        case ThresholdSense::MaxWeightedSum:
            return std::abs(op.beta) * omega_max() + std::abs(op.gamma);
        case ThresholdSense::MinCombination:
            return op.gamma.real() + op.beta.real() * constants::g_min;
    }
    throw std::logic_error("hypothesis_value: unknown sense");
}

bool TheoremSpec::hypothesis_met(double rel_tol) const {
    const double value = hypothesis_value();
    if (threshold_sense(op.form) == ThresholdSense::MaxWeightedSum) {
        return value <= threshold * (1.0 + rel_tol);
    }
    return value >= threshold * (1.0 - rel_tol);
}

GridReport admissibility_scan(const TheoremSpec& spec, const ScanOptions& options,
                              const std::function<void(const ScanSample&)>& observer) {
    if (options.theta_grid < 64) {
        throw PreconditionError("admissibility_scan: theta_grid must be >= 64");
    }
    if (options.m_values.empty()) {
        throw PreconditionError("admissibility_scan: m_values is empty");
    }
    for (double m : options.m_values) {
        if (!(m >= 1.0) || !std::isfinite(m)) {
            throw PreconditionError("admissibility_scan: every m must be finite and >= 1");
        }
    }
    if (options.refine < 1) {
        throw PreconditionError("admissibility_scan: refine must be >= 1");
    }

    GridReport report;
    report.grid_size = static_cast<std::size_t>(options.theta_grid) * options.m_values.size();
    if (!spec.hypothesis_met()) {
        std::ostringstream msg;
        msg << theorem_name(spec.id) << ": hypothesis not met (value " << spec.hypothesis_value()
            << ", threshold " << spec.threshold << ")";
        if (!options.probe) {
            throw HypothesisError(msg.str());
        }
        report.notes.push_back("probe mode: " + msg.str());
    }

    const bool second_order = spec.op.form == OperatorForm::SecondOrder;
    auto sample = [&](double theta, double m) {
        const BoundaryPoint bp = boundary_point(theta);
        const Complex s = m * bp.s_unit;
        const Complex t = second_order ? s * (m * (1.0 + bp.g) - 1.0) : Complex{};
        const Complex w = spec.op.evaluate(bp.r, s, t);
        ScanSample out{theta, m, bp.r, s, t, w, spec.premise.margin(w)};
        if (observer) {
            observer(out);
        }
        return out;
    };

    std::optional<ScanSample> worst;
    auto consider = [&](const ScanSample& candidate) {
        if (!worst || candidate.margin.value() > worst->margin.value()) {
            worst = candidate;
        }
    };

    const double step = 2.0 * constants::pi / options.theta_grid;
    for (double m : options.m_values) {
        for (int k = 0; k < options.theta_grid; ++k) {
            consider(sample(k * step, m));
        }
    }

    // One refinement round on the cells adjacent to the coarse worst point.
    const double centre = worst->theta;
    const double m_worst = worst->m;
    for (int j = -options.refine + 1; j < options.refine; ++j) {
        if (j != 0) {
            consider(sample(centre + j * step / options.refine, m_worst));
        }
    }

    report.worst_margin = worst->margin.value();
    report.witness = std::polar(1.0, worst->theta);
    report.witness_image = worst->w;
    report.witness_angle = worst->theta < 0.0 ? worst->theta + 2.0 * constants::pi : worst->theta;
    report.witness_m = worst->m;
    report.pass = report.worst_margin <= options.membership_tol;
    return report;
}

}  // namespace beansub
