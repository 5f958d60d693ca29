#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hahnspec/scan_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArgumentError = 1;
constexpr int kExitIoError = 2;
constexpr int kExitViolations = 3;

int run_scan_command(const hahnspec::ScanConfig& config) {
    const hahnspec::ScanReport report = hahnspec::run_scan(config);
    switch (config.format) {
        case hahnspec::OutputFormat::Csv:
            hahnspec::write_csv(report, config.output_path);
            break;
        case hahnspec::OutputFormat::Json:
            hahnspec::write_json(report, config.output_path);
            break;
        case hahnspec::OutputFormat::Pgm:
            hahnspec::write_pgm(report, config.output_path);
            break;
    }
    std::cout << "scanned " << report.rows.size() << " points: resolvent "
              << report.census.resolvent << ", continuous " << report.census.continuous
              << ", residual " << report.census.residual << ", point " << report.census.point
              << "; consistency violations " << report.violations << "\n"
              << "wrote " << hahnspec::to_string(config.format) << " to " << config.output_path
              << "\n";
    return report.violations == 0 ? kExitOk : kExitViolations;
}

int run_check_command(const std::string& preset) {
    if (preset != "reference") {
        std::cerr << "unknown grid preset '" << preset << "' (available: reference)\n";
        return kExitArgumentError;
    }
    const hahnspec::ScanConfig config = hahnspec::reference_scan_config();
    const auto grid = hahnspec::scan_grid_points(config);
    const hahnspec::ConsistencyReport report =
        hahnspec::consistency_suite(grid, config.boundary_tol);
    std::cout << "checked " << report.total_checked << " grid points, "
              << report.violations.size() << " violations\n";
    for (const auto& violation : report.violations) {
        std::cout << "  alpha = (" << violation.alpha.real() << ", " << violation.alpha.imag()
                  << "): " << violation.rule << "\n";
    }
    return report.violations.empty() ? kExitOk : kExitViolations;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fine-spectrum scanner for the difference operator on the Hahn sequence space"};
    app.require_subcommand(1);

    hahnspec::ScanConfig config;
    std::string format_name = "csv";

    CLI::App* scan = app.add_subcommand("scan", "classify a complex-plane grid and write it out");
    scan->add_option("--re-min", config.re_min, "left edge of the scan rectangle")->required();
    scan->add_option("--re-max", config.re_max, "right edge of the scan rectangle")->required();
    scan->add_option("--im-min", config.im_min, "bottom edge of the scan rectangle")->required();
    scan->add_option("--im-max", config.im_max, "top edge of the scan rectangle")->required();
    scan->add_option("--nx", config.nx, "grid columns")->required();
    scan->add_option("--ny", config.ny, "grid rows")->required();
    scan->add_option("--truncation", config.truncation, "finite-section size for numerics");
    scan->add_option("--column", config.column, "resolvent column probed by the numerics");
    scan->add_flag("--with-numerics", config.with_numerics,
                   "attach resolvent-bound and growth diagnostics to every row");
    scan->add_option("--boundary-tol", config.boundary_tol,
                     "tolerance for |1-alpha| = 1 boundary detection");
    scan->add_option("--divergence-threshold", config.divergence_threshold,
                     "cutoff above which series are flagged divergent");
    scan->add_option("--format", format_name, "output format: csv, json or pgm")->required();
    scan->add_option("--out", config.output_path, "output file path")->required();

    std::string preset = "reference";
    CLI::App* check = app.add_subcommand("check", "run the consistency suite on a preset grid");
    check->add_option("--grid-preset", preset, "grid preset name (reference)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitArgumentError;
    }

    try {
        if (scan->parsed()) {
            config.format = hahnspec::parse_output_format(format_name);
            config.validate();
            return run_scan_command(config);
        }
        return run_check_command(preset);
    } catch (const hahnspec::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitArgumentError;
    } catch (const hahnspec::IoError& e) {
        std::cerr << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgumentError;
    }
}
