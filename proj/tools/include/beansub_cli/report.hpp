#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "beansub/tolerances.hpp"

namespace beansub::cli {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Info };

std::string_view to_string(Verdict v);

/// One verified quantity. `margin` is signed slack: non-negative means the check holds.
struct CheckRecord {
    std::string name;
    std::optional<double> expected;
    std::optional<double> computed;
    std::optional<double> tolerance;
    std::optional<double> margin;
    Verdict verdict = Verdict::Info;
};

/// |computed - expected| <= tolerance
CheckRecord agree(std::string name, double expected, double computed, double tolerance);
/// computed >= bound - tolerance
CheckRecord at_least(std::string name, double bound, double computed, double tolerance);
/// computed <= bound + tolerance
CheckRecord at_most(std::string name, double bound, double computed, double tolerance);
/// Reported value without a verdict.
CheckRecord info(std::string name, double computed);
/// Boolean outcome with no numeric comparison.
CheckRecord flag(std::string name, bool ok);

struct Report {
    std::string command;
    std::vector<std::string> arguments;
    Json inputs = Json::object();
    Tolerances tolerances;
    std::vector<CheckRecord> checks;
    std::vector<std::string> notes;
    Json details = Json::object();
    double wall_time_s = 0.0;

    /// Conjunction of the non-informational verdicts.
    bool overall() const;
    Json to_json() const;
};

}  // namespace beansub::cli
