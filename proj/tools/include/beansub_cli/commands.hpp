#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beansub/bean.hpp"
#include "beansub/theorem.hpp"
#include "beansub_cli/report.hpp"
#include "beansub_cli/run_config.hpp"

namespace beansub::cli {

struct LemmaArgs {
    std::string kind = "bean";
    double A = 1.0;
    double B = 0.0;
    std::optional<double> radius;
    int grid = 4096;
};

struct TheoremArgs {
    std::string theorem;
    int n = 1;
    int delta = 0;
    double A = 1.0;
    double B = 0.0;
};

struct ScanArgs {
    TheoremArgs theorem;
    std::optional<std::string> beta;
    std::optional<std::string> gamma;
    bool probe = false;
    int grid = 4096;
    std::vector<double> m_values{1.0, 1.5, 2.0, 5.0, 10.0};
};

struct BoundaryArgs {
    int points = 360;
};

struct CheckArgs {
    TheoremArgs theorem;
    std::string function_path;
    std::vector<double> radii{0.5, 0.9, 0.99};
    int samples = 256;
};

/// A report plus the data file body for commands that emit one.
struct BoundaryOutput {
    Report report;
    std::string data;
};

/// "re" or "re,im".
Complex parse_complex(const std::string& text);

TheoremId resolve_theorem(const std::string& name);

Report cmd_constants(const RunConfig& config);
Report cmd_verify_lemma(const RunConfig& config, const LemmaArgs& args);
Report cmd_threshold(const RunConfig& config, const TheoremArgs& args);
Report cmd_scan(const RunConfig& config, const ScanArgs& args);
BoundaryOutput cmd_boundary(const RunConfig& config, const BoundaryArgs& args);
Report cmd_check(const RunConfig& config, const CheckArgs& args);

}  // namespace beansub::cli
