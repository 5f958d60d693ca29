#pragma once

#include <string>
#include <vector>

#include "hahnspec/spectral_analysis.hpp"

namespace hahnspec {

enum class OutputFormat { Csv, Json, Pgm };

std::string to_string(OutputFormat format);

/// Throws ConfigError for anything other than "csv", "json", "pgm".
OutputFormat parse_output_format(const std::string& name);

/// Rectangle scan over an endpoint-inclusive lattice. A single-point axis
/// (n = 1) degenerates to the min endpoint.
struct ScanConfig {
    double re_min = -1.0;
    double re_max = 3.0;
    double im_min = -2.0;
    double im_max = 2.0;
    std::size_t nx = 41;
    std::size_t ny = 41;
    std::size_t truncation = 64;
    std::size_t column = 0;
    double boundary_tol = default_boundary_tolerance;
    double divergence_threshold = default_divergence_threshold;
    bool with_numerics = false;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// The 41 x 41 grid over [-1,3] x [-2,2] used by the consistency preset.
ScanConfig reference_scan_config();

struct RegionCensus {
    std::size_t resolvent = 0;
    std::size_t point = 0;
    std::size_t continuous = 0;
    std::size_t residual = 0;

    std::size_t total() const { return resolvent + point + continuous + residual; }

    friend bool operator==(const RegionCensus&, const RegionCensus&) = default;
};

struct ScanReport {
    ScanConfig config;
    std::vector<PointClassification> rows; // row-major: im descending, re ascending
    RegionCensus census;
    std::size_t violations = 0;
    std::vector<ConsistencyViolation> violation_detail;
};

/// Lattice points in report row order: row index = iy * nx + ix with iy
/// walking im from im_max downward and ix walking re from re_min upward.
std::vector<Complex> scan_grid_points(const ScanConfig& config);

/// Classifies every lattice point, attaches numeric diagnostics when
/// requested, and runs the consistency suite over the grid. The singular
/// point alpha = 1 never aborts a scan; its row carries a "singular-shift"
/// note and empty numerics.
ScanReport run_scan(const ScanConfig& config);

} // namespace hahnspec
