#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "beansub/tolerances.hpp"

namespace beansub::cli {

/// Bad command-line or configuration input (exit code 2).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { Json, Csv };

/// Environment variable naming the default directory for reports and data files.
inline constexpr const char* kOutputDirEnv = "BEANSUB_OUTPUT_DIR";

struct RunConfig {
    std::string command;
    Tolerances tolerances;
    std::optional<std::string> output_path;
    OutputFormat format = OutputFormat::Json;
};

/// Applies "name=value" to the named tolerance. Names: membership, symmetry, extremal, display.
void apply_tolerance_override(Tolerances& tol, std::string_view assignment);

OutputFormat parse_format(std::string_view text);

/// Explicit path if given, else $BEANSUB_OUTPUT_DIR/<default_name>, else nullopt.
std::optional<std::string> resolve_output_path(const RunConfig& config, const std::string& default_name);

}  // namespace beansub::cli
