#include "beansub/lemma.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "beansub/boundary.hpp"
#include "beansub/constants.hpp"
#include "beansub/errors.hpp"

namespace beansub {

LemmaSpec LemmaSpec::bean() { return LemmaSpec(LemmaKind::BeanRadius, 0.0, 0.0); }

LemmaSpec LemmaSpec::janowski(double A, double B) {
    require_janowski_box(A, B);
    return LemmaSpec(LemmaKind::JanowskiRadius, A, B);
}

LemmaSpec LemmaSpec::lemniscate() { return LemmaSpec(LemmaKind::LemniscateRadius, 0.0, 0.0); }

double LemmaSpec::claimed_radius() const {
    switch (kind_) {
        case LemmaKind::BeanRadius:
            return constants::R0;
        case LemmaKind::JanowskiRadius:
            return (1.0 + A_) / (1.0 + B_);
        case LemmaKind::LemniscateRadius:
            return constants::sqrt2;
    }
    throw std::logic_error("LemmaSpec: unknown kind");
}

double LemmaSpec::required_bound() const { return kind_ == LemmaKind::BeanRadius ? 2.0 : 1.0; }

double LemmaSpec::hypothesis_radius() const { return kind_ == LemmaKind::BeanRadius ? constants::sqrt2 : 1.0; }

double LemmaSpec::quantity(Complex w) const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (kind_) {
        case LemmaKind::BeanRadius: {
            const Complex w2 = w * w;
            const Complex denom = 2.0 - w2;
            if (w2 == 0.0 || denom == 0.0) {
                return inf;
            }
            const double q = std::abs(std::log(w2 / denom));
            return std::isfinite(q) ? q : inf;
        }
        case LemmaKind::JanowskiRadius: {
            const Complex denom = A_ - B_ * w;
            if (denom == 0.0) {
                return inf;
            }
            return std::abs((w - 1.0) / denom);
        }
        case LemmaKind::LemniscateRadius:
            return std::abs(w * w - 1.0);
    }
    throw std::logic_error("LemmaSpec: unknown kind");
}

std::string LemmaSpec::name() const {
    switch (kind_) {
        case LemmaKind::BeanRadius:
            return "bean";
        case LemmaKind::JanowskiRadius: {
            std::ostringstream out;
            out << "janowski(A=" << A_ << ",B=" << B_ << ")";
            return out.str();
        }
        case LemmaKind::LemniscateRadius:
            return "lemniscate";
    }
    return "unknown";
}

GridReport verify_radius_lemma(const LemmaSpec& spec, double radius, int grid_size, LemmaScanOptions options) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw PreconditionError("verify_radius_lemma: radius must be positive and finite");
    }
    if (grid_size < 360) {
        throw PreconditionError("verify_radius_lemma: grid_size must be >= 360");
    }

    auto at = [&](double phi) { return spec.quantity(std::polar(radius, phi)); };

    const double step = 2.0 * constants::pi / grid_size;
    int best = -1;
    double best_value = std::numeric_limits<double>::infinity();
    int excluded = 0;
    for (int k = 0; k < grid_size; ++k) {
        const double q = at(k * step);
        if (!std::isfinite(q)) {
            ++excluded;
            continue;
        }
        if (q < best_value) {
            best_value = q;
            best = k;
        }
    }

    GridReport report;
    report.grid_size = static_cast<std::size_t>(grid_size);
    if (excluded > 0) {
        report.notes.push_back(std::to_string(excluded) + " singular sample(s) excluded; neighbours refined");
    }

    double best_angle = best >= 0 ? best * step : 0.0;
    if (best >= 0) {
        // Golden-section refinement over the two cells adjacent to the coarse argmin.
        const auto refined = find_extremum(at, best_angle - step, best_angle + step, Extremum::Min, 1e-12);
        if (refined.value < best_value) {
            best_angle = refined.arg;
        }
    }
    best_angle = std::remainder(best_angle, 2.0 * constants::pi);
    if (best_angle < 0.0) {
        best_angle += 2.0 * constants::pi;
    }

    report.witness = std::polar(radius, best_angle);
    report.witness_image = report.witness;
    report.witness_angle = best_angle;
    report.witness_radius = radius;
    report.worst_margin = spec.quantity(report.witness);
    report.pass = report.worst_margin >= spec.required_bound() - options.pass_tol;
    if (!(radius > spec.hypothesis_radius())) {
        report.notes.push_back("outside lemma hypothesis: radius <= " + std::to_string(spec.hypothesis_radius()));
    }
    return report;
}

double bisect_verdict(const std::function<bool(double)>& passes, double lo, double hi, double tol, int probes) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw PreconditionError("bisect_verdict: need finite lo < hi");
    }
    if (!(tol > 0.0)) {
        throw PreconditionError("bisect_verdict: tol must be positive");
    }
    if (passes(lo)) {
        throw PreconditionError("bisect_verdict: verdict already passes at lo");
    }
    if (!passes(hi)) {
        throw PreconditionError("bisect_verdict: verdict fails at hi");
    }

    bool seen_pass = false;
    for (int j = 1; j <= probes; ++j) {
        const double x = lo + (hi - lo) * j / (probes + 1);
        const bool pass = passes(x);
        if (seen_pass && !pass) {
            std::ostringstream msg;
            msg << "bisect_verdict: verdict flips back to fail at " << x << " inside [" << lo << ", " << hi
                << "]; grid too coarse?";
            throw MonotonicityError(msg.str());
        }
        seen_pass = seen_pass || pass;
    }

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (passes(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double sharpness_bisect(const LemmaSpec& spec, double lo, double hi, double tol, SharpnessOptions options) {
    if (!(lo > 0.0)) {
        throw PreconditionError("sharpness_bisect: need 0 < lo");
    }
    auto passes = [&](double radius) {
        return verify_radius_lemma(spec, radius, options.grid_size, options.scan).pass;
    };
    return bisect_verdict(passes, lo, hi, tol, options.monotonicity_probes);
}

}  // namespace beansub
