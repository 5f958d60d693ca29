#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hahnspec/scan.hpp"

namespace hahnspec {

/// 17 significant digits, default float notation (round-trip exact).
std::string format_numeric(double value);

/// Header `re,im,region,goldberg,in_ap,in_delta,in_co,adjoint_eigen,
/// resolvent_bound,growth_class`, then one line per grid point in report row
/// order. Booleans as 0/1, missing numerics as empty fields.
std::string csv_string(const ScanReport& report);

/// Binary PGM: `P5\n<nx> <ny>\n255\n` followed by one byte per grid point.
/// Gray levels: resolvent 255, continuous 128, residual 64, point 0.
std::vector<std::uint8_t> pgm_bytes(const ScanReport& report);

/// Config echo, region census, violation count and the rows with the same
/// field names as the CSV columns, in a fixed key order.
std::string json_string(const ScanReport& report);

void write_csv(const ScanReport& report, const std::string& path);
void write_pgm(const ScanReport& report, const std::string& path);
void write_json(const ScanReport& report, const std::string& path);

/// Inverse of write_json, sufficient to regenerate the CSV and PGM outputs
/// byte for byte. Violation detail is not stored in the file, only the count.
ScanReport read_json(const std::string& path);

} // namespace hahnspec
