#include "beansub_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "beansub/boundary.hpp"
#include "beansub/constants.hpp"
#include "beansub/lemma.hpp"
#include "beansub/subordination.hpp"
#include "beansub_cli/function_io.hpp"

namespace beansub::cli {

namespace {

// Values as displayed alongside the definitions of the boundary quantities.
constexpr double kDisplayedR0 = 1.5208;
constexpr double kDisplayedTheta0 = 1.31364;
constexpr double kDisplayedOmegaMax = 1.438;
constexpr double kDisplayedTheta1 = 1.639;
constexpr double kDisplayedDMax = 0.905;
constexpr double kDisplayedD0 = 0.158;
constexpr double kDisplayedDPi = 0.304;

Json complex_json(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        return nullptr;
    }
    return Json::array({z.real(), z.imag()});
}

Json finite_or_null(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

Json theorem_inputs(const TheoremArgs& a) {
    Json j{{"theorem", a.theorem}, {"n", a.n}, {"delta", a.delta}};
    if (target_kind(resolve_theorem(a.theorem)) == DomainKind::Janowski) {
        j["A"] = a.A;
        j["B"] = a.B;
    }
    return j;
}

TheoremParams params_of(const TheoremArgs& a) { return TheoremParams{a.n, a.delta, a.A, a.B}; }

Json grid_json(const GridReport& g) {
    Json notes = g.notes;
    return Json{{"grid_size", g.grid_size},
                {"worst_margin", finite_or_null(g.worst_margin)},
                {"pass", g.pass},
                {"witness", complex_json(g.witness)},
                {"witness_image", complex_json(g.witness_image)},
                {"witness_angle", finite_or_null(g.witness_angle)},
                {"witness_radius", finite_or_null(g.witness_radius)},
                {"notes", notes}};
}

std::string format_g12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::istringstream in(text);
    double re = 0.0;
    double im = 0.0;
    if (!(in >> re)) {
        throw ConfigError("not a complex number (expected re or re,im): " + text);
    }
    if (in.peek() == ',') {
        in.get();
        if (!(in >> im)) {
            throw ConfigError("not a complex number (expected re or re,im): " + text);
        }
    }
    if (!in.eof() && in.peek() != std::char_traits<char>::eof()) {
        throw ConfigError("not a complex number (expected re or re,im): " + text);
    }
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ConfigError("complex coefficient must be finite: " + text);
    }
    return {re, im};
}

TheoremId resolve_theorem(const std::string& name) {
    if (const auto id = parse_theorem(name)) {
        return *id;
    }
    std::string known;
    for (auto id : all_theorems()) {
        known += (known.empty() ? "" : ", ") + std::string(theorem_name(id));
    }
    throw ConfigError("unknown theorem id: " + name + " (known: " + known + ")");
}

Report cmd_constants(const RunConfig& config) {
    using constants::e;
    const Tolerances& tol = config.tolerances;
    const CriticalValues cv = critical_values();
    const double r0 = e * std::sqrt(2.0 / (e * e - 1.0));

    Report r;
    r.command = "constants";
    r.checks.push_back(agree("R0", kDisplayedR0, r0, tol.display));
    r.checks.push_back(agree("R0_closed_form", 1.520867, r0, tol.extremal));
    r.checks.push_back(agree("theta0", kDisplayedTheta0, cv.theta0, tol.display));
    r.checks.push_back(agree("omega_theta0", kDisplayedOmegaMax, cv.omega_max, tol.display));
    r.checks.push_back(agree("theta1", kDisplayedTheta1, cv.theta1, tol.display));
    r.checks.push_back(agree("d_theta1", kDisplayedDMax, cv.d_max, tol.display));
    r.checks.push_back(agree("d_0", kDisplayedD0, cv.d_at_0, tol.display));
    r.checks.push_back(agree("d_pi", kDisplayedDPi, cv.d_at_pi, tol.display));
    r.checks.push_back(agree("omega_pi", std::sqrt(2.0 / (1.0 + e * e)), cv.omega_at_pi, tol.extremal));
    const double one_e2 = 1.0 + e * e;
    r.checks.push_back(
        agree("g_0", (1.0 - 2.0 * std::pow(e, 4) - e * e) / (one_e2 * one_e2), g_profile(0.0), tol.extremal));
    const double g_arg_distance = std::min(cv.g_argmin, 2.0 * constants::pi - cv.g_argmin);
    r.checks.push_back(agree("g_argmin", 0.0, g_arg_distance, tol.display));
    return r;
}

Report cmd_verify_lemma(const RunConfig& config, const LemmaArgs& args) {
    LemmaSpec spec = [&] {
        if (args.kind == "bean") {
            return LemmaSpec::bean();
        }
        if (args.kind == "janowski") {
            return LemmaSpec::janowski(args.A, args.B);
        }
        if (args.kind == "lemniscate") {
            return LemmaSpec::lemniscate();
        }
        throw ConfigError("unknown lemma kind: " + args.kind + " (expected bean, janowski, lemniscate)");
    }();
    const double radius = args.radius.value_or(spec.claimed_radius());

    LemmaScanOptions opts;
    opts.pass_tol = config.tolerances.membership;
    const GridReport g = verify_radius_lemma(spec, radius, args.grid, opts);

    Report r;
    r.command = "verify-lemma";
    r.inputs = Json{{"kind", args.kind}, {"radius", radius}, {"grid", args.grid}};
    if (args.kind == "janowski") {
        r.inputs["A"] = args.A;
        r.inputs["B"] = args.B;
    }
    r.checks.push_back(at_least("worst_quantity", spec.required_bound(), g.worst_margin, config.tolerances.membership));
    r.checks.push_back(info("claimed_radius", spec.claimed_radius()));
    r.notes = g.notes;
    r.details["scan"] = grid_json(g);
    return r;
}

Report cmd_threshold(const RunConfig&, const TheoremArgs& args) {
    const TheoremId id = resolve_theorem(args.theorem);
    const double thr = threshold(id, params_of(args));

    Report r;
    r.command = "threshold";
    r.inputs = theorem_inputs(args);
    r.checks.push_back(info("threshold", thr));
    const char* sense = "";
    switch (threshold_sense(operator_form(id))) {
        case ThresholdSense::MinModulus:
            sense = "|beta| >= threshold";
            break;
        case ThresholdSense::MaxWeightedSum:
            sense = "|beta| omega_max + |gamma| <= threshold";
            break;
        case ThresholdSense::MinCombination:
            sense = "gamma + beta g(0) >= threshold";
            break;
    }
    r.details["sense"] = sense;
    return r;
}

Report cmd_scan(const RunConfig& config, const ScanArgs& args) {
    const TheoremId id = resolve_theorem(args.theorem.theorem);
    const TheoremParams params = params_of(args.theorem);
    if (args.gamma && !args.beta) {
        throw ConfigError("--gamma requires --beta");
    }
    const TheoremSpec spec = args.beta ? TheoremSpec::make(id, params, parse_complex(*args.beta),
                                                           args.gamma ? parse_complex(*args.gamma) : Complex{})
                                       : TheoremSpec::at_threshold(id, params);

    ScanOptions opts;
    opts.theta_grid = args.grid;
    opts.m_values = args.m_values;
    opts.probe = args.probe;
    opts.membership_tol = config.tolerances.membership;
    const GridReport g = admissibility_scan(spec, opts);

    Report r;
    r.command = "scan";
    r.inputs = theorem_inputs(args.theorem);
    r.inputs["beta"] = complex_json(spec.op.beta);
    r.inputs["gamma"] = complex_json(spec.op.gamma);
    r.inputs["probe"] = args.probe;
    r.inputs["grid"] = args.grid;
    r.inputs["m_values"] = args.m_values;

    CheckRecord hyp = (threshold_sense(spec.op.form) == ThresholdSense::MaxWeightedSum)
                          ? at_most("hypothesis", spec.threshold, spec.hypothesis_value(), 0.0)
                          : at_least("hypothesis", spec.threshold, spec.hypothesis_value(), 0.0);
    if (spec.hypothesis_met()) {
        hyp.verdict = Verdict::Pass;
    }
    r.checks.push_back(hyp);
    r.checks.push_back(at_most("max_premise_margin", 0.0, g.worst_margin, config.tolerances.membership));
    r.notes = g.notes;
    r.details["scan"] = grid_json(g);
    r.details["scan"]["witness_m"] = finite_or_null(g.witness_m);
    return r;
}

BoundaryOutput cmd_boundary(const RunConfig& config, const BoundaryArgs& args) {
    if (args.points < 3) {
        throw ConfigError("--points must be >= 3");
    }
    const auto bean = DomainPredicate::bean();
    std::vector<BoundaryPoint> rows;
    rows.reserve(args.points);
    double worst = 0.0;
    for (int k = 0; k < args.points; ++k) {
        const BoundaryPoint bp = boundary_point(2.0 * constants::pi * k / args.points);
        worst = std::max(worst, std::abs(bean.margin(bp.r).value()));
        rows.push_back(bp);
    }
    double asym = 0.0;
    for (int k = 1; k < args.points; ++k) {
        asym = std::max(asym, std::abs(rows[k].r - std::conj(rows[args.points - k].r)));
    }

    BoundaryOutput out;
    Report& r = out.report;
    r.command = "boundary";
    r.inputs = Json{{"points", args.points}, {"format", config.format == OutputFormat::Csv ? "csv" : "json"}};
    r.checks.push_back(at_most("max_abs_bean_margin", 0.0, worst, config.tolerances.membership));
    r.checks.push_back(at_most("conjugate_asymmetry", 0.0, asym, config.tolerances.symmetry));

    if (config.format == OutputFormat::Csv) {
        std::string csv = "theta,re,im,omega,d,g\n";
        for (const auto& bp : rows) {
            for (double v : {bp.theta, bp.r.real(), bp.r.imag(), bp.omega, bp.d}) {
                csv += format_g12(v) + ",";
            }
            csv += format_g12(bp.g) + "\n";
        }
        out.data = std::move(csv);
    } else {
        Json doc{{"columns", {"theta", "re", "im", "omega", "d", "g"}}, {"rows", Json::array()}};
        for (const auto& bp : rows) {
            doc["rows"].push_back({bp.theta, bp.r.real(), bp.r.imag(), bp.omega, bp.d, bp.g});
        }
        out.data = doc.dump(2) + "\n";
    }
    return out;
}

Report cmd_check(const RunConfig& config, const CheckArgs& args) {
    const TheoremId id = resolve_theorem(args.theorem.theorem);
    const AnalyticFunction p = load_function(args.function_path);
    const TheoremSpec spec = TheoremSpec::at_threshold(id, params_of(args.theorem));

    SubordinationOptions opts;
    opts.tol = config.tolerances.membership;
    const ImplicationReport rep = check_implication(spec, p, args.radii, args.samples, opts);

    Report r;
    r.command = "check";
    r.inputs = theorem_inputs(args.theorem);
    r.inputs["function"] = args.function_path;
    r.inputs["radii"] = args.radii;
    r.inputs["samples"] = args.samples;

    CheckRecord premise = info("premise_worst_margin", rep.premise.worst_margin);
    CheckRecord conclusion = info("conclusion_worst_margin", rep.conclusion.worst_margin);
    r.checks.push_back(premise);
    r.checks.push_back(conclusion);
    r.checks.push_back(flag("no_counterexample", !rep.counterexample()));
    r.details["premise"] = grid_json(rep.premise);
    r.details["conclusion"] = grid_json(rep.conclusion);
    return r;
}

}  // namespace beansub::cli
