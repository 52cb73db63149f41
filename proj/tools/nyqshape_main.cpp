// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.
//
// Command-line front end. Designs filters, runs response analyses and the
// parameter-sweep experiments, and writes taps / grids / reports as CSV or
// JSON for external plotting. Data files carry no timestamps and repeated
// identical invocations produce byte-identical output; --meta writes run
// metadata to a separate sidecar file instead.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nyqshape/nyqshape.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonFlags {
    double symbol_rate_hz = 3.84e6;
    double alpha = 0.22;
    int oversample = 2;
    int delay = 2;
    std::string family = "fexp";
    std::string norm = "peak-response";
    std::string format = "csv";
    std::string out;
    std::string config_path;
    bool meta = false;
};

const std::map<std::string, std::string> kFamilyHelp = {
    {"rc", "raised cosine"},
    {"rrc", "root raised cosine"},
    {"fexp", "flipped exponential"},
    {"fsech", "flipped hyperbolic secant"},
    {"farcsech", "flipped arc hyperbolic secant"},
};

void add_spec_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--symbol-rate", flags.symbol_rate_hz, "Symbol rate f_d in Hz")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--alpha", flags.alpha, "Roll-off factor in [0, 1]")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--oversample", flags.oversample, "Samples per symbol M (integer >= 2)")
        ->capture_default_str()
        ->check(CLI::Range(2, 1 << 20));
    cmd->add_option("--delay", flags.delay, "Group delay D in symbol periods (integer >= 1)")
        ->capture_default_str()
        ->check(CLI::Range(1, 1 << 20));
    cmd->add_option("--family", flags.family, "Pulse family")
        ->capture_default_str()
        ->check(CLI::IsMember({"rc", "rrc", "fexp", "fsech", "farcsech"}));
    cmd->add_option("--norm", flags.norm, "Tap normalization")
        ->capture_default_str()
        ->check(CLI::IsMember({"dc", "energy", "peak-tap", "peak-response"}));
    cmd->add_option("--format", flags.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", flags.out, "Output file path")->required();
    cmd->add_flag("--meta", flags.meta, "Also write a <out>.meta metadata sidecar");
    cmd->add_option("--config", flags.config_path,
                    "Read flags from a flat key=value file (# comments; command-line "
                    "flags take precedence)");
}

// Flat key=value config support. File entries are turned into --key=value
// arguments for every key the command line does not already set, before
// CLI11 sees the argument list.
std::vector<std::string> inject_config_args(std::vector<std::string> args) {
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
        }
    }
    if (config_path.empty()) return args;

    std::string text;
    try {
        text = nyqshape::io::read_file(config_path);
    } catch (const nyqshape::Error& e) {
        throw nyqshape::InvalidArg(e.what());
    }

    const auto given_on_command_line = [&](const std::string& key) {
        const std::string plain = "--" + key;
        const std::string with_value = plain + "=";
        for (const std::string& a : args) {
            if (a == plain || a.rfind(with_value, 0) == 0) return true;
        }
        return false;
    };

    std::size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto trim = [](std::string s) {
            const auto begin = s.find_first_not_of(" \t\r");
            const auto end = s.find_last_not_of(" \t\r");
            return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
        };
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw nyqshape::InvalidArg("config '" + config_path + "' line " +
                                       std::to_string(line_no) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw nyqshape::InvalidArg("config '" + config_path + "' line " +
                                       std::to_string(line_no) + ": empty key");
        }
        if (key == "config" || given_on_command_line(key)) continue;
        args.push_back("--" + key + "=" + value);
    }
    return args;
}

nyqshape::DesignSpec spec_from_flags(const CommonFlags& flags) {
    nyqshape::DesignSpec spec;
    spec.params = {flags.symbol_rate_hz, flags.alpha};
    spec.family = *nyqshape::family_from_name(flags.family);
    spec.oversample_m = flags.oversample;
    spec.delay_symbols_d = flags.delay;
    spec.normalization = *nyqshape::normalization_from_name(flags.norm);
    return spec;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_meta(const std::string& out_path, const std::string& command,
                const nyqshape::io::json& parameters) {
    nyqshape::io::json meta{{"tool", "nyqshape"},
                            {"version", kVersion},
                            {"command", command},
                            {"generated_utc", utc_timestamp()},
                            {"parameters", parameters}};
    nyqshape::io::write_file_atomic(out_path + ".meta", meta.dump(2) + "\n");
}

nyqshape::io::json parameters_json(const CommonFlags& flags) {
    return {{"symbol_rate_hz", flags.symbol_rate_hz}, {"alpha", flags.alpha},
            {"oversample", flags.oversample},         {"delay", flags.delay},
            {"family", flags.family},                 {"norm", flags.norm},
            {"format", flags.format}};
}

int run_design(const CommonFlags& flags, const std::string& method) {
    const nyqshape::DesignSpec spec = spec_from_flags(flags);
    const nyqshape::FirFilter filter = method == "time"
                                           ? nyqshape::design_time_sampling(spec)
                                           : nyqshape::design_frequency_sampling(spec);
    const std::string content = flags.format == "json" ? nyqshape::io::taps_to_json(filter.taps)
                                                       : nyqshape::io::taps_to_csv(filter.taps);
    nyqshape::io::write_file_atomic(flags.out, content);
    if (flags.meta) {
        auto params = parameters_json(flags);
        params["method"] = method;
        params["n_taps"] = filter.size();
        write_meta(flags.out, "design", params);
    }
    return 0;
}

int run_analyze(const CommonFlags& flags, int points, double threshold_db) {
    const nyqshape::DesignSpec spec = spec_from_flags(flags);
    const nyqshape::FirFilter filter = nyqshape::design_frequency_sampling(spec);
    const nyqshape::ResponseGrid grid =
        nyqshape::frequency_response(filter, points, 0.5 * filter.sample_rate_hz);
    const nyqshape::SpectralMetrics metrics = nyqshape::spectral_metrics(grid, threshold_db);
    const nyqshape::IsiReport isi = nyqshape::isi_report(filter);

    const std::string content = flags.format == "json" ? nyqshape::io::response_to_json(grid)
                                                       : nyqshape::io::response_to_csv(grid);
    nyqshape::io::write_file_atomic(flags.out, content);

    using nyqshape::io::format_optional;
    using nyqshape::io::format_shortest;
    std::cout << "n_taps=" << filter.size() << '\n'
              << "main_lobe_edge_hz=" << format_shortest(metrics.main_lobe_edge_hz) << '\n'
              << "stopband_start_hz=" << format_shortest(metrics.stopband_start_hz) << '\n'
              << "peak_sidelobe_db=" << format_optional(metrics.peak_sidelobe_db) << '\n'
              << "passband_ripple_db=" << format_shortest(metrics.passband_ripple_db) << '\n'
              << "peak_distortion=" << format_shortest(isi.peak_distortion) << '\n'
              << "rms_distortion=" << format_shortest(isi.rms_distortion) << '\n'
              << "phase_at_nu1_deg=" << format_shortest(grid.phase_deg.back()) << '\n'
              << "group_delay_samples=" << format_shortest(grid.group_delay_samples.front())
              << '\n';

    if (flags.meta) {
        auto params = parameters_json(flags);
        params["points"] = points;
        params["threshold_db"] = threshold_db;
        write_meta(flags.out, "analyze", params);
    }
    return 0;
}

int run_sweep(const CommonFlags& flags, const std::string& axis_str,
              std::vector<double> values, int points, double threshold_db) {
    const nyqshape::SweepAxis axis = *nyqshape::axis_from_name(axis_str);
    nyqshape::DesignSpec base = spec_from_flags(flags);
    const nyqshape::AnalysisOptions options{points, threshold_db};

    if (values.empty()) {
        switch (axis) {
            case nyqshape::SweepAxis::Alpha: values = {0.1, 0.5, 1.0}; break;
            case nyqshape::SweepAxis::Delay: values = {2, 4, 6, 8, 10}; break;
            case nyqshape::SweepAxis::OversampleEven: values = {2, 4, 6}; break;
            case nyqshape::SweepAxis::OversampleOdd: values = {3, 5, 7}; break;
        }
    }

    const auto as_ints = [&](const char* what) {
        std::vector<int> ints;
        ints.reserve(values.size());
        for (double v : values) {
            const int i = static_cast<int>(v);
            if (static_cast<double>(i) != v) {
                throw nyqshape::InvalidArg(std::string("sweep: ") + what +
                                           " values must be integers");
            }
            ints.push_back(i);
        }
        return ints;
    };

    nyqshape::SweepReport report;
    switch (axis) {
        case nyqshape::SweepAxis::Alpha:
            report = nyqshape::sweep_alpha(base, values, options);
            break;
        case nyqshape::SweepAxis::Delay:
            report = nyqshape::sweep_delay(base, as_ints("delay"), options);
            break;
        case nyqshape::SweepAxis::OversampleEven:
            report = nyqshape::sweep_oversample(base, as_ints("oversample"),
                                                nyqshape::Parity::Even, options);
            break;
        case nyqshape::SweepAxis::OversampleOdd:
            report = nyqshape::sweep_oversample(base, as_ints("oversample"),
                                                nyqshape::Parity::Odd, options);
            break;
    }

    const std::string content = flags.format == "json" ? nyqshape::io::sweep_to_json(report)
                                                       : nyqshape::io::sweep_to_csv(report);
    nyqshape::io::write_file_atomic(flags.out, content);

    if (flags.meta) {
        auto params = parameters_json(flags);
        params["axis"] = axis_str;
        params["values"] = values;
        params["points"] = points;
        params["threshold_db"] = threshold_db;
        write_meta(flags.out, "sweep", params);
    }
    return 0;
}

int run_compare(const CommonFlags& flags, const std::string& tradeoff_out, int points,
                double threshold_db) {
    const nyqshape::PulseParams params{flags.symbol_rate_hz, flags.alpha};
    const nyqshape::PulseFamily tradeoff_family = *nyqshape::family_from_name(flags.family);
    const nyqshape::AnalysisOptions options{points, threshold_db};
    const nyqshape::FamilyComparison cmp = nyqshape::family_comparison(
        params, flags.oversample, flags.delay, tradeoff_family, options);

    if (flags.format == "json") {
        nyqshape::io::write_file_atomic(flags.out, nyqshape::io::comparison_to_json(cmp));
    } else {
        nyqshape::io::write_file_atomic(flags.out, nyqshape::io::comparison_to_csv(cmp));
        if (!tradeoff_out.empty()) {
            nyqshape::io::write_file_atomic(tradeoff_out, nyqshape::io::tradeoff_to_csv(cmp));
        }
    }
    if (flags.meta) {
        auto params_json = parameters_json(flags);
        params_json["points"] = points;
        params_json["threshold_db"] = threshold_db;
        write_meta(flags.out, "compare", params_json);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nyqshape: Nyquist pulse-shaping FIR design and analysis"};
    app.set_version_flag("--version", std::string("nyqshape ") + kVersion);
    app.require_subcommand(1);

    CommonFlags design_flags;
    std::string design_method = "freq";
    CLI::App* design = app.add_subcommand("design", "Design a filter and write its taps");
    add_spec_flags(design, design_flags);
    design->add_option("--method", design_method, "Design path")
        ->capture_default_str()
        ->check(CLI::IsMember({"freq", "time"}));

    CommonFlags analyze_flags;
    int analyze_points = 2048;
    double analyze_threshold = -40.0;
    CLI::App* analyze =
        app.add_subcommand("analyze", "Design a filter and write its frequency response");
    add_spec_flags(analyze, analyze_flags);
    analyze->add_option("--points", analyze_points, "Response grid size")
        ->capture_default_str()
        ->check(CLI::Range(512, 1 << 24));
    analyze->add_option("--threshold", analyze_threshold, "Stopband threshold in dB (< 0)")
        ->capture_default_str()
        ->check(CLI::Range(-300.0, -1e-9));

    CommonFlags sweep_flags;
    std::string sweep_axis = "delay";
    std::vector<double> sweep_values;
    int sweep_points = 2048;
    double sweep_threshold = -40.0;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write the report");
    add_spec_flags(sweep, sweep_flags);
    sweep->add_option("--axis", sweep_axis, "Swept parameter")
        ->capture_default_str()
        ->check(CLI::IsMember({"alpha", "delay", "oversample_even", "oversample_odd"}));
    sweep->add_option("--values", sweep_values, "Comma-separated sweep values")->delimiter(',');
    sweep->add_option("--points", sweep_points, "Response grid size")
        ->capture_default_str()
        ->check(CLI::Range(512, 1 << 24));
    sweep->add_option("--threshold", sweep_threshold, "Stopband threshold in dB (< 0)")
        ->capture_default_str()
        ->check(CLI::Range(-300.0, -1e-9));

    CommonFlags compare_flags;
    std::string tradeoff_out;
    int compare_points = 2048;
    double compare_threshold = -40.0;
    CLI::App* compare =
        app.add_subcommand("compare", "Compare all pulse families at one operating point");
    add_spec_flags(compare, compare_flags);
    compare->add_option("--tradeoff-out", tradeoff_out,
                        "Also write the delay/oversampling tradeoff grid (CSV format only)");
    compare->add_option("--points", compare_points, "Response grid size")
        ->capture_default_str()
        ->check(CLI::Range(512, 1 << 24));
    compare->add_option("--threshold", compare_threshold, "Stopband threshold in dB (< 0)")
        ->capture_default_str()
        ->check(CLI::Range(-300.0, -1e-9));

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = inject_config_args(std::move(args));
        std::reverse(args.begin(), args.end()); // CLI11 consumes from the back
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help / --version
        }
        app.exit(e);
        return 2;
    } catch (const nyqshape::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (design->parsed()) return run_design(design_flags, design_method);
        if (analyze->parsed()) return run_analyze(analyze_flags, analyze_points, analyze_threshold);
        if (sweep->parsed()) {
            return run_sweep(sweep_flags, sweep_axis, sweep_values, sweep_points, sweep_threshold);
        }
        if (compare->parsed()) {
            return run_compare(compare_flags, tradeoff_out, compare_points, compare_threshold);
        }
    } catch (const nyqshape::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
