#include "beansub_cli/report.hpp"

#include <algorithm>
#include <cmath>

#include "beansub/version.hpp"

namespace beansub::cli {

namespace {

CheckRecord graded(std::string name, double expected, double computed, double tolerance, double margin) {
    CheckRecord r{std::move(name), expected, computed, tolerance, margin, Verdict::Fail};
    if (margin >= 0.0) {
        r.verdict = Verdict::Pass;
    }
    return r;
}

Json number_or_null(const std::optional<double>& v) {
    if (!v || !std::isfinite(*v)) {
        return nullptr;
    }
    return *v;
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass:
            return "pass";
        case Verdict::Fail:
            return "fail";
        case Verdict::Info:
            return "info";
    }
    return "info";
}

CheckRecord agree(std::string name, double expected, double computed, double tolerance) {
    return graded(std::move(name), expected, computed, tolerance, tolerance - std::abs(computed - expected));
}

CheckRecord at_least(std::string name, double bound, double computed, double tolerance) {
    return graded(std::move(name), bound, computed, tolerance, computed - (bound - tolerance));
}

CheckRecord at_most(std::string name, double bound, double computed, double tolerance) {
    return graded(std::move(name), bound, computed, tolerance, bound + tolerance - computed);
}

CheckRecord info(std::string name, double computed) {
    return CheckRecord{std::move(name), std::nullopt, computed, std::nullopt, std::nullopt, Verdict::Info};
}

CheckRecord flag(std::string name, bool ok) {
    return CheckRecord{std::move(name), std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                       ok ? Verdict::Pass : Verdict::Fail};
}

bool Report::overall() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.verdict == Verdict::Fail; });
}

Json Report::to_json() const {
    Json checks_json = Json::array();
    for (const auto& c : checks) {
        checks_json.push_back(Json{{"name", c.name},
                                   {"expected", number_or_null(c.expected)},
                                   {"computed", number_or_null(c.computed)},
                                   {"tolerance", number_or_null(c.tolerance)},
                                   {"margin", number_or_null(c.margin)},
                                   {"verdict", to_string(c.verdict)}});
    }
    return Json{{"command", command},
                {"arguments", arguments},
                {"version", kVersion},
                {"inputs", inputs},
                {"tolerances",
                 {{"membership", tolerances.membership},
                  {"symmetry", tolerances.symmetry},
                  {"extremal", tolerances.extremal},
                  {"display", tolerances.display}}},
                {"checks", checks_json},
                {"notes", notes},
                {"details", details},
                {"overall", overall() ? "pass" : "fail"},
                {"wall_time_s", wall_time_s}};
}

}  // namespace beansub::cli
