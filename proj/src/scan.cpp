#include "hahnspec/scan.hpp"

#include <array>
#include <cmath>

namespace hahnspec {

std::string to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
        case OutputFormat::Pgm: return "pgm";
    }
    return "unknown";
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "pgm") return OutputFormat::Pgm;
    throw ConfigError("format", "expected csv, json or pgm, got '" + name + "'");
}

void ScanConfig::validate() const {
    if (!std::isfinite(re_min) || !std::isfinite(re_max)) {
        throw ConfigError("re_min/re_max", "bounds must be finite");
    }
    if (!std::isfinite(im_min) || !std::isfinite(im_max)) {
        throw ConfigError("im_min/im_max", "bounds must be finite");
    }
    if (!(re_min < re_max)) {
        throw ConfigError("re_min", "re_min must be below re_max");
    }
    if (!(im_min < im_max)) {
        throw ConfigError("im_min", "im_min must be below im_max");
    }
    if (nx < 1) {
        throw ConfigError("nx", "need at least one column");
    }
    if (ny < 1) {
        throw ConfigError("ny", "need at least one row");
    }
    if (truncation < 1) {
        throw ConfigError("truncation", "truncation must be positive");
    }
    if (!(boundary_tol > 0.0)) {
        throw ConfigError("boundary_tol", "tolerance must be positive");
    }
    if (!(divergence_threshold > 0.0)) {
        throw ConfigError("divergence_threshold", "threshold must be positive");
    }
}

ScanConfig reference_scan_config() {
    ScanConfig config;
    config.re_min = -1.0;
    config.re_max = 3.0;
    config.im_min = -2.0;
    config.im_max = 2.0;
    config.nx = 41;
    config.ny = 41;
    return config;
}

std::vector<Complex> scan_grid_points(const ScanConfig& config) {
    std::vector<Complex> points;
    points.reserve(config.nx * config.ny);
    const double re_step =
        config.nx > 1 ? (config.re_max - config.re_min) / static_cast<double>(config.nx - 1) : 0.0;
    const double im_step =
        config.ny > 1 ? (config.im_max - config.im_min) / static_cast<double>(config.ny - 1) : 0.0;
    for (std::size_t iy = 0; iy < config.ny; ++iy) {
        const double im =
            config.ny > 1 ? config.im_max - static_cast<double>(iy) * im_step : config.im_min;
        for (std::size_t ix = 0; ix < config.nx; ++ix) {
            const double re = config.re_min + static_cast<double>(ix) * re_step;
            points.emplace_back(re, im);
        }
    }
    return points;
}

namespace {

std::array<std::size_t, 3> growth_sizes(std::size_t truncation) {
    const std::size_t top = std::max<std::size_t>(truncation, 8);
    return {top / 4, top / 2, top};
}

void attach_numerics(PointClassification& pc, const ScanConfig& config) {
    if (Complex{1.0, 0.0} - pc.alpha == Complex{0.0, 0.0}) {
        pc.note = "singular-shift";
        return;
    }
    pc.diagnostics.resolvent_bound =
        norm_bound_series(pc.alpha, default_series_terms, config.divergence_threshold)
            .partial_value;
    const auto sizes = growth_sizes(config.truncation);
    const GrowthReport growth = finite_section_growth(
        pc.alpha, sizes, config.column, config.divergence_threshold);
    pc.diagnostics.growth_class = growth.classification;
    pc.diagnostics.growth_ratio = growth.last_ratio;
    pc.diagnostics.adjoint_test_value =
        adjoint_eigen_test(pc.alpha, config.truncation, config.divergence_threshold,
                           config.boundary_tol)
            .test_value;
}

} // namespace

ScanReport run_scan(const ScanConfig& config) {
    config.validate();

    ScanReport report;
    report.config = config;

    const std::vector<Complex> grid = scan_grid_points(config);
    report.rows.reserve(grid.size());
    for (const Complex alpha : grid) {
        PointClassification pc = classify_point(alpha, config.boundary_tol);
        if (config.with_numerics) {
            attach_numerics(pc, config);
        }
        switch (pc.region) {
            case SpectralRegion::ResolventSet: ++report.census.resolvent; break;
            case SpectralRegion::PointSpectrum: ++report.census.point; break;
            case SpectralRegion::ContinuousSpectrum: ++report.census.continuous; break;
            case SpectralRegion::ResidualSpectrum: ++report.census.residual; break;
        }
        report.rows.push_back(std::move(pc));
    }

    ConsistencyReport consistency = consistency_suite(grid, config.boundary_tol);
    report.violations = consistency.violations.size();
    report.violation_detail = std::move(consistency.violations);
    return report;
}

} // namespace hahnspec
