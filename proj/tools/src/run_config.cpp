#include "beansub_cli/run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>

namespace beansub::cli {

void apply_tolerance_override(Tolerances& tol, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError("tolerance override must look like name=value: " + std::string(assignment));
    }
    const std::string name(assignment.substr(0, eq));
    const std::string text(assignment.substr(eq + 1));

    double value = 0.0;
    try {
        std::size_t used = 0;
        value = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception&) {
        throw ConfigError("tolerance " + name + ": not a number: " + text);
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ConfigError("tolerance " + name + " must be positive and finite");
    }

    if (name == "membership") {
        tol.membership = value;
    } else if (name == "symmetry") {
        tol.symmetry = value;
    } else if (name == "extremal") {
        tol.extremal = value;
    } else if (name == "display") {
        tol.display = value;
    } else {
        throw ConfigError("unknown tolerance name: " + name + " (expected membership, symmetry, extremal, display)");
    }
}

OutputFormat parse_format(std::string_view text) {
    if (text == "json") {
        return OutputFormat::Json;
    }
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    throw ConfigError("unknown format: " + std::string(text));
}

std::optional<std::string> resolve_output_path(const RunConfig& config, const std::string& default_name) {
    if (config.output_path) {
        return config.output_path;
    }
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
        return (std::filesystem::path(dir) / default_name).string();
    }
    return std::nullopt;
}

}  // namespace beansub::cli
