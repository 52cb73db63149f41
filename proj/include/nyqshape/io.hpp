// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.
//
// Text serialization for taps, response grids, sweep reports and comparison
// tables. All formatting goes through std::to_chars, so output is locale
// independent ('.' decimal separator, '\n' newlines) and byte-identical
// across runs. Taps use scientific notation with 17 significant digits,
// which round-trips doubles exactly; other fields use the shortest exact
// representation.

#ifndef NYQSHAPE_IO_HPP
#define NYQSHAPE_IO_HPP

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "nyqshape/analysis.hpp"
#include "nyqshape/design.hpp"
#include "nyqshape/errors.hpp"
#include "nyqshape/sweep.hpp"

namespace nyqshape::io {

using json = nlohmann::ordered_json;

/// Scientific notation, 17 significant digits (exact double round-trip).
inline std::string format_sci17(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

/// Shortest representation that parses back to the same double. Integral
/// values print as plain integers ("-720", not "-7.2e+02").
inline std::string format_shortest(double value) {
    char buf[64];
    if (value == std::floor(value) && std::abs(value) < 9.0e15) {
        const auto res = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(value));
        return std::string(buf, res.ptr);
    }
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

inline std::string format_optional(const std::optional<double>& value) {
    return value ? format_shortest(*value) : std::string("nan");
}

inline double parse_double(std::string_view text) {
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw InvalidArg("parse_double: not a number: '" + std::string(text) + "'");
    }
    return value;
}

// ---- taps ----------------------------------------------------------------

inline std::string taps_to_csv(std::span<const double> taps) {
    std::string out = "index,tap\n";
    for (std::size_t i = 0; i < taps.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_sci17(taps[i]);
        out += '\n';
    }
    return out;
}

inline std::vector<double> parse_taps_csv(std::string_view text) {
    std::vector<double> taps;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        if (header) {
            if (line != "index,tap") {
                throw InvalidArg("parse_taps_csv: missing 'index,tap' header");
            }
            header = false;
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw InvalidArg("parse_taps_csv: malformed row: '" + std::string(line) + "'");
        }
        taps.push_back(parse_double(line.substr(comma + 1)));
    }
    if (header) throw InvalidArg("parse_taps_csv: empty file");
    return taps;
}

inline std::string taps_to_json(std::span<const double> taps) {
    json rows = json::array();
    for (std::size_t i = 0; i < taps.size(); ++i) {
        rows.push_back(json{{"index", i}, {"tap", taps[i]}});
    }
    return json{{"taps", rows}}.dump(2) + "\n";
}

// ---- response grids --------------------------------------------------------

inline constexpr const char* kResponseCsvHeader =
    "f_hz,norm_freq,mag_db,phase_deg,group_delay_samples";

inline std::string response_to_csv(const ResponseGrid& grid) {
    std::string out = std::string(kResponseCsvHeader) + "\n";
    for (std::size_t j = 0; j < grid.size(); ++j) {
        out += format_shortest(grid.f_hz[j]);
        out += ',';
        out += format_shortest(grid.norm_freq[j]);
        out += ',';
        out += format_shortest(grid.mag_db[j]);
        out += ',';
        out += format_shortest(grid.phase_deg[j]);
        out += ',';
        out += format_shortest(grid.group_delay_samples[j]);
        out += '\n';
    }
    return out;
}

inline std::string response_to_json(const ResponseGrid& grid) {
    json rows = json::array();
    for (std::size_t j = 0; j < grid.size(); ++j) {
        rows.push_back(json{{"f_hz", grid.f_hz[j]},
                            {"norm_freq", grid.norm_freq[j]},
                            {"mag_db", grid.mag_db[j]},
                            {"phase_deg", grid.phase_deg[j]},
                            {"group_delay_samples", grid.group_delay_samples[j]}});
    }
    return json{{"points", rows}}.dump(2) + "\n";
}

// ---- sweep reports ---------------------------------------------------------

inline constexpr const char* kSweepCsvHeader =
    "swept_value,n_taps,occupied_bw_hz,main_lobe_edge_hz,stopband_start_hz,"
    "peak_sidelobe_db,peak_distortion,rms_distortion,phase_at_nu1_deg";

inline std::string sweep_to_csv(const SweepReport& report) {
    std::string out = std::string(kSweepCsvHeader) + "\n";
    for (const SweepRecord& r : report.records) {
        out += format_shortest(r.swept_value);
        out += ',';
        out += std::to_string(r.n_taps);
        out += ',';
        out += format_shortest(r.occupied_bw_hz);
        out += ',';
        out += format_shortest(r.metrics.main_lobe_edge_hz);
        out += ',';
        out += format_shortest(r.metrics.stopband_start_hz);
        out += ',';
        out += format_optional(r.metrics.peak_sidelobe_db);
        out += ',';
        out += format_shortest(r.isi.peak_distortion);
        out += ',';
        out += format_shortest(r.isi.rms_distortion);
        out += ',';
        out += format_shortest(r.phase_at_nu1_deg);
        out += '\n';
    }
    return out;
}

inline json sweep_record_to_json(const SweepRecord& r) {
    json row{{"swept_value", r.swept_value},
             {"n_taps", r.n_taps},
             {"occupied_bw_hz", r.occupied_bw_hz},
             {"main_lobe_edge_hz", r.metrics.main_lobe_edge_hz},
             {"stopband_start_hz", r.metrics.stopband_start_hz}};
    row["peak_sidelobe_db"] =
        r.metrics.peak_sidelobe_db ? json(*r.metrics.peak_sidelobe_db) : json(nullptr);
    row["peak_distortion"] = r.isi.peak_distortion;
    row["rms_distortion"] = r.isi.rms_distortion;
    row["phase_at_nu1_deg"] = r.phase_at_nu1_deg;
    return row;
}

inline std::string sweep_to_json(const SweepReport& report) {
    json rows = json::array();
    for (const SweepRecord& r : report.records) rows.push_back(sweep_record_to_json(r));
    return json{{"axis_name", axis_name(report.axis)}, {"records", rows}}.dump(2) + "\n";
}

// ---- family comparison -------------------------------------------------------

inline constexpr const char* kComparisonCsvHeader =
    "family,n_taps,main_lobe_edge_hz,stopband_start_hz,peak_sidelobe_db,"
    "passband_ripple_db,peak_distortion,rms_distortion";

inline std::string comparison_to_csv(const FamilyComparison& cmp) {
    std::string out = std::string(kComparisonCsvHeader) + "\n";
    for (const FamilyComparisonRow& r : cmp.rows) {
        out += family_name(r.family);
        out += ',';
        out += std::to_string(r.n_taps);
        out += ',';
        out += format_shortest(r.metrics.main_lobe_edge_hz);
        out += ',';
        out += format_shortest(r.metrics.stopband_start_hz);
        out += ',';
        out += format_optional(r.metrics.peak_sidelobe_db);
        out += ',';
        out += format_shortest(r.metrics.passband_ripple_db);
        out += ',';
        out += format_shortest(r.isi.peak_distortion);
        out += ',';
        out += format_shortest(r.isi.rms_distortion);
        out += '\n';
    }
    return out;
}

inline constexpr const char* kTradeoffCsvHeader =
    "family,delay,oversample,n_taps,peak_distortion,peak_sidelobe_db";

inline std::string tradeoff_to_csv(const FamilyComparison& cmp) {
    std::string out = std::string(kTradeoffCsvHeader) + "\n";
    for (const TradeoffCell& c : cmp.tradeoff) {
        out += family_name(cmp.tradeoff_family);
        out += ',';
        out += std::to_string(c.delay);
        out += ',';
        out += std::to_string(c.oversample);
        out += ',';
        out += std::to_string(c.n_taps);
        out += ',';
        out += format_shortest(c.peak_distortion);
        out += ',';
        out += format_optional(c.peak_sidelobe_db);
        out += '\n';
    }
    return out;
}

inline std::string comparison_to_json(const FamilyComparison& cmp) {
    json rows = json::array();
    for (const FamilyComparisonRow& r : cmp.rows) {
        json row{{"family", family_name(r.family)},
                 {"n_taps", r.n_taps},
                 {"main_lobe_edge_hz", r.metrics.main_lobe_edge_hz},
                 {"stopband_start_hz", r.metrics.stopband_start_hz}};
        row["peak_sidelobe_db"] =
            r.metrics.peak_sidelobe_db ? json(*r.metrics.peak_sidelobe_db) : json(nullptr);
        row["passband_ripple_db"] = r.metrics.passband_ripple_db;
        row["peak_distortion"] = r.isi.peak_distortion;
        row["rms_distortion"] = r.isi.rms_distortion;
        rows.push_back(row);
    }
    json cells = json::array();
    for (const TradeoffCell& c : cmp.tradeoff) {
        json cell{{"family", family_name(cmp.tradeoff_family)},
                  {"delay", c.delay},
                  {"oversample", c.oversample},
                  {"n_taps", c.n_taps},
                  {"peak_distortion", c.peak_distortion}};
        cell["peak_sidelobe_db"] = c.peak_sidelobe_db ? json(*c.peak_sidelobe_db) : json(nullptr);
        cells.push_back(cell);
    }
    return json{{"families", rows}, {"tradeoff", cells}}.dump(2) + "\n";
}

// ---- atomic file output --------------------------------------------------------

/// Writes content to a sibling temp file and renames it over the target, so
/// a failed run never leaves a partial data file behind.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot open '" + tmp.string() + "' for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw Error("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ec2;
        std::filesystem::remove(tmp, ec2);
        throw Error("rename to '" + path.string() + "' failed: " + ec.message());
    }
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path.string() + "' for reading");
    }
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return content;
}

} // namespace nyqshape::io

#endif // NYQSHAPE_IO_HPP
