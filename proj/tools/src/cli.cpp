#include "beansub_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "beansub/errors.hpp"
#include "beansub/version.hpp"
#include "beansub_cli/commands.hpp"
#include "beansub_cli/function_io.hpp"

namespace beansub::cli {

namespace {

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ConfigError("cannot write " + path);
    }
    f << body;
    if (!f) {
        throw ConfigError("write failed: " + path);
    }
}

int emit(Report report, const RunConfig& config, const std::optional<std::string>& path,
         const std::vector<std::string>& args, double seconds, std::ostream& out) {
    report.arguments = args;
    report.tolerances = config.tolerances;
    report.wall_time_s = seconds;
    const std::string body = report.to_json().dump(2) + "\n";
    if (path) {
        write_file(*path, body);
        out << report.command << ": " << (report.overall() ? "pass" : "fail") << " (report: " << *path << ")\n";
    } else {
        out << body;
    }
    return report.overall() ? kAllPass : kVerifiedFailure;
}

void add_theorem_options(CLI::App* cmd, TheoremArgs& t) {
    cmd->add_option("--theorem", t.theorem, "Theorem id, e.g. bean-power")->required();
    cmd->add_option("--n", t.n, "Exponent n (power and quotient forms)")->check(CLI::PositiveNumber);
    cmd->add_option("--delta", t.delta, "delta in {0, 1}");
    cmd->add_option("--A", t.A, "Janowski A");
    cmd->add_option("--B", t.B, "Janowski B");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical verification toolkit for subordination onto the bean-shaped domain", "beansub"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::vector<std::string> tol_overrides;
    std::string out_path;
    app.add_option("--tol", tol_overrides, "Tolerance override name=value (membership, symmetry, extremal, display)");
    app.add_option("--out", out_path, "Output path for the report (boundary: the data file)");

    auto* constants_cmd = app.add_subcommand("constants", "Critical boundary constants against displayed values");

    LemmaArgs lemma;
    auto* lemma_cmd = app.add_subcommand("verify-lemma", "Grid check of a radius lemma");
    lemma_cmd->add_option("--kind", lemma.kind, "bean | janowski | lemniscate")->required();
    lemma_cmd->add_option("--A", lemma.A, "Janowski A");
    lemma_cmd->add_option("--B", lemma.B, "Janowski B");
    lemma_cmd->add_option("--radius", lemma.radius, "Circle radius (default: the claimed sharp constant)");
    lemma_cmd->add_option("--grid", lemma.grid, "Angular samples (>= 360)");

    TheoremArgs thr;
    auto* threshold_cmd = app.add_subcommand("threshold", "Closed-form threshold of a theorem");
    add_theorem_options(threshold_cmd, thr);

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Admissibility scan on the boundary data");
    add_theorem_options(scan_cmd, scan.theorem);
    scan_cmd->add_option("--beta", scan.beta, "beta as re or re,im (default: on the threshold)");
    scan_cmd->add_option("--gamma", scan.gamma, "gamma as re or re,im");
    scan_cmd->add_flag("--probe", scan.probe, "Scan even when the hypothesis fails");
    scan_cmd->add_option("--grid", scan.grid, "Angular samples (>= 64)");
    scan_cmd->add_option("--m", scan.m_values, "Comma-separated m values (>= 1)")->delimiter(',');

    BoundaryArgs boundary;
    std::string format = "csv";
    auto* boundary_cmd = app.add_subcommand("boundary", "Emit boundary curve data");
    boundary_cmd->add_option("--points", boundary.points, "Number of rows (>= 3)");
    boundary_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Premise and conclusion check for one function");
    check_cmd->add_option("--function", check.function_path, "Function file (JSON)")->required();
    add_theorem_options(check_cmd, check.theorem);
    check_cmd->add_option("--radii", check.radii, "Comma-separated radii in (0, 1)")->delimiter(',');
    check_cmd->add_option("--samples", check.samples, "Samples per circle (>= 64)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kAllPass : kUsageError;
    }

    try {
        for (const auto& t : tol_overrides) {
            apply_tolerance_override(config.tolerances, t);
        }
        if (!out_path.empty()) {
            config.output_path = out_path;
        }
        config.format = parse_format(format);

        const auto start = std::chrono::steady_clock::now();
        auto elapsed = [&] {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        };

        if (constants_cmd->parsed()) {
            config.command = "constants";
            Report r = cmd_constants(config);
            return emit(std::move(r), config, resolve_output_path(config, config.command + ".json"), args,
                        elapsed(), out);
        }
        if (lemma_cmd->parsed()) {
            config.command = "verify-lemma";
            Report r = cmd_verify_lemma(config, lemma);
            return emit(std::move(r), config, resolve_output_path(config, config.command + ".json"), args,
                        elapsed(), out);
        }
        if (threshold_cmd->parsed()) {
            config.command = "threshold";
            Report r = cmd_threshold(config, thr);
            return emit(std::move(r), config, resolve_output_path(config, config.command + ".json"), args,
                        elapsed(), out);
        }
        if (scan_cmd->parsed()) {
            config.command = "scan";
            Report r = cmd_scan(config, scan);
            return emit(std::move(r), config, resolve_output_path(config, config.command + ".json"), args,
                        elapsed(), out);
        }
        if (boundary_cmd->parsed()) {
            config.command = "boundary";
            const auto path = resolve_output_path(config, format == "csv" ? "boundary.csv" : "boundary.json");
            if (!path) {
                throw ConfigError("boundary: pass --out PATH or set " + std::string(kOutputDirEnv));
            }
            BoundaryOutput result = cmd_boundary(config, boundary);
            write_file(*path, result.data);
            result.report.details["data_file"] = *path;
            return emit(std::move(result.report), config, std::nullopt, args, elapsed(), out);
        }
        if (check_cmd->parsed()) {
            config.command = "check";
            Report r = cmd_check(config, check);
            return emit(std::move(r), config, resolve_output_path(config, config.command + ".json"), args,
                        elapsed(), out);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const FunctionFormatError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const HypothesisError& e) {
        err << "refused: " << e.what() << " (use --probe to scan anyway)\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    err << "error: no command given\n";
    return kUsageError;
}

}  // namespace beansub::cli
