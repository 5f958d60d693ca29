#include "hahnspec/scan_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace hahnspec {

namespace {

using ordered_json = nlohmann::ordered_json;

SpectralRegion parse_region(const std::string& name) {
    if (name == "resolvent") return SpectralRegion::ResolventSet;
    if (name == "point") return SpectralRegion::PointSpectrum;
    if (name == "continuous") return SpectralRegion::ContinuousSpectrum;
    if (name == "residual") return SpectralRegion::ResidualSpectrum;
    throw std::invalid_argument("unknown spectral region '" + name + "'");
}

GoldbergState parse_goldberg(const std::string& name) {
    if (name.size() != 2) {
        throw std::invalid_argument("unknown Goldberg state '" + name + "'");
    }
    GoldbergState state{};
    switch (name[0]) {
        case 'A': state.range = RangeState::A; break;
        case 'B': state.range = RangeState::B; break;
        case 'C': state.range = RangeState::C; break;
        default: throw std::invalid_argument("unknown Goldberg state '" + name + "'");
    }
    switch (name[1]) {
        case '1': state.inverse = InverseState::Bounded; break;
        case '2': state.inverse = InverseState::Unbounded; break;
        case '3': state.inverse = InverseState::Missing; break;
        default: throw std::invalid_argument("unknown Goldberg state '" + name + "'");
    }
    return state;
}

GrowthClass parse_growth_class(const std::string& name) {
    if (name == "saturating") return GrowthClass::Saturating;
    if (name == "growing") return GrowthClass::Growing;
    throw std::invalid_argument("unknown growth class '" + name + "'");
}

std::uint8_t region_gray(SpectralRegion region) {
    switch (region) {
        case SpectralRegion::ResolventSet: return 255;
        case SpectralRegion::ContinuousSpectrum: return 128;
        case SpectralRegion::ResidualSpectrum: return 64;
        case SpectralRegion::PointSpectrum: return 0;
    }
    return 0;
}

} // namespace

std::string format_numeric(double value) {
    std::ostringstream out;
    out << std::setprecision(17) << value;
    return out.str();
}

std::string csv_string(const ScanReport& report) {
    std::ostringstream out;
    out << "re,im,region,goldberg,in_ap,in_delta,in_co,adjoint_eigen,"
           "resolvent_bound,growth_class\n";
    for (const PointClassification& row : report.rows) {
        out << format_numeric(row.alpha.real()) << ',' << format_numeric(row.alpha.imag()) << ','
            << to_string(row.region) << ',' << (row.goldberg ? to_string(*row.goldberg) : "")
            << ',' << (row.in_ap ? '1' : '0') << ',' << (row.in_delta ? '1' : '0') << ','
            << (row.in_co ? '1' : '0') << ',' << (row.adjoint_eigen ? '1' : '0') << ','
            << (row.diagnostics.resolvent_bound ? format_numeric(*row.diagnostics.resolvent_bound)
                                                : "")
            << ','
            << (row.diagnostics.growth_class ? to_string(*row.diagnostics.growth_class) : "")
            << '\n';
    }
    return out.str();
}

std::vector<std::uint8_t> pgm_bytes(const ScanReport& report) {
    std::string header = "P5\n" + std::to_string(report.config.nx) + " " +
                         std::to_string(report.config.ny) + "\n255\n";
    std::vector<std::uint8_t> bytes(header.begin(), header.end());
    bytes.reserve(bytes.size() + report.rows.size());
    for (const PointClassification& row : report.rows) {
        bytes.push_back(region_gray(row.region));
    }
    return bytes;
}

std::string json_string(const ScanReport& report) {
    ordered_json j;
    j["config"] = {
        {"re_min", report.config.re_min},
        {"re_max", report.config.re_max},
        {"im_min", report.config.im_min},
        {"im_max", report.config.im_max},
        {"nx", report.config.nx},
        {"ny", report.config.ny},
        {"truncation", report.config.truncation},
        {"column", report.config.column},
        {"boundary_tol", report.config.boundary_tol},
        {"divergence_threshold", report.config.divergence_threshold},
        {"with_numerics", report.config.with_numerics},
        {"output_path", report.config.output_path},
        {"format", to_string(report.config.format)},
    };
    j["census"] = {
        {"resolvent", report.census.resolvent},
        {"point", report.census.point},
        {"continuous", report.census.continuous},
        {"residual", report.census.residual},
    };
    j["violations"] = report.violations;

    ordered_json rows = ordered_json::array();
    for (const PointClassification& row : report.rows) {
        ordered_json r;
        r["re"] = row.alpha.real();
        r["im"] = row.alpha.imag();
        r["region"] = to_string(row.region);
        if (row.goldberg) {
            r["goldberg"] = to_string(*row.goldberg);
        } else {
            r["goldberg"] = nullptr;
        }
        r["in_ap"] = row.in_ap;
        r["in_delta"] = row.in_delta;
        r["in_co"] = row.in_co;
        r["adjoint_eigen"] = row.adjoint_eigen;
        if (row.diagnostics.resolvent_bound) {
            r["resolvent_bound"] = *row.diagnostics.resolvent_bound;
        } else {
            r["resolvent_bound"] = nullptr;
        }
        if (row.diagnostics.growth_class) {
            r["growth_class"] = to_string(*row.diagnostics.growth_class);
        } else {
            r["growth_class"] = nullptr;
        }
        if (!row.note.empty()) {
            r["note"] = row.note;
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

namespace {

void write_bytes(const std::string& path, const char* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError(path, "cannot open for writing");
    }
    out.write(data, static_cast<std::streamsize>(size));
    out.flush();
    if (!out) {
        throw IoError(path, "write failed");
    }
}

} // namespace

void write_csv(const ScanReport& report, const std::string& path) {
    const std::string text = csv_string(report);
    write_bytes(path, text.data(), text.size());
}

void write_pgm(const ScanReport& report, const std::string& path) {
    const std::vector<std::uint8_t> bytes = pgm_bytes(report);
    write_bytes(path, reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

void write_json(const ScanReport& report, const std::string& path) {
    const std::string text = json_string(report);
    write_bytes(path, text.data(), text.size());
}

ScanReport read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(path, "cannot open for reading");
    }
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError(path, std::string("json parse failed: ") + e.what());
    }

    ScanReport report;
    const auto& config = j.at("config");
    report.config.re_min = config.at("re_min").get<double>();
    report.config.re_max = config.at("re_max").get<double>();
    report.config.im_min = config.at("im_min").get<double>();
    report.config.im_max = config.at("im_max").get<double>();
    report.config.nx = config.at("nx").get<std::size_t>();
    report.config.ny = config.at("ny").get<std::size_t>();
    report.config.truncation = config.at("truncation").get<std::size_t>();
    report.config.column = config.at("column").get<std::size_t>();
    report.config.boundary_tol = config.at("boundary_tol").get<double>();
    report.config.divergence_threshold = config.at("divergence_threshold").get<double>();
    report.config.with_numerics = config.at("with_numerics").get<bool>();
    report.config.output_path = config.at("output_path").get<std::string>();
    report.config.format = parse_output_format(config.at("format").get<std::string>());

    const auto& census = j.at("census");
    report.census.resolvent = census.at("resolvent").get<std::size_t>();
    report.census.point = census.at("point").get<std::size_t>();
    report.census.continuous = census.at("continuous").get<std::size_t>();
    report.census.residual = census.at("residual").get<std::size_t>();

    report.violations = j.at("violations").get<std::size_t>();

    for (const auto& r : j.at("rows")) {
        PointClassification row;
        row.alpha = Complex{r.at("re").get<double>(), r.at("im").get<double>()};
        row.region = parse_region(r.at("region").get<std::string>());
        if (!r.at("goldberg").is_null()) {
            row.goldberg = parse_goldberg(r.at("goldberg").get<std::string>());
        }
        row.in_ap = r.at("in_ap").get<bool>();
        row.in_delta = r.at("in_delta").get<bool>();
        row.in_co = r.at("in_co").get<bool>();
        row.adjoint_eigen = r.at("adjoint_eigen").get<bool>();
        if (!r.at("resolvent_bound").is_null()) {
            row.diagnostics.resolvent_bound = r.at("resolvent_bound").get<double>();
        }
        if (!r.at("growth_class").is_null()) {
            row.diagnostics.growth_class = parse_growth_class(r.at("growth_class").get<std::string>());
        }
        if (r.contains("note")) {
            row.note = r.at("note").get<std::string>();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace hahnspec
