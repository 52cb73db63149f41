// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.
//
// Parameter-sweep experiments over roll-off, group delay and oversampling,
// plus the per-family comparison table. Each record is a full
// design -> response -> metrics pipeline run at one parameter point.

#ifndef NYQSHAPE_SWEEP_HPP
#define NYQSHAPE_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "nyqshape/analysis.hpp"
#include "nyqshape/design.hpp"
#include "nyqshape/errors.hpp"

namespace nyqshape {

enum class SweepAxis { Alpha, Delay, OversampleEven, OversampleOdd };

inline constexpr const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Alpha: return "alpha";
        case SweepAxis::Delay: return "delay";
        case SweepAxis::OversampleEven: return "oversample_even";
        case SweepAxis::OversampleOdd: return "oversample_odd";
    }
    return "?";
}

inline std::optional<SweepAxis> axis_from_name(std::string_view name) {
    for (SweepAxis a : {SweepAxis::Alpha, SweepAxis::Delay, SweepAxis::OversampleEven,
                        SweepAxis::OversampleOdd}) {
        if (name == axis_name(a)) return a;
    }
    return std::nullopt;
}

/// Response-grid resolution and stopband threshold shared by every record of
/// a sweep. 2048 points comfortably clears the 512-point metrics floor.
struct AnalysisOptions {
    int n_points = 2048;
    double stop_threshold_db = -40.0;
};

struct SweepRecord {
    double swept_value = 0.0;
    DesignSpec spec;
    int n_taps = 0;
    SpectralMetrics metrics;
    IsiReport isi;
    double phase_at_nu1_deg = 0.0; ///< unwrapped phase at f = f_s/2
    double occupied_bw_hz = 0.0;   ///< two-sided ideal bandwidth f_d (1 + alpha)
};

struct SweepReport {
    SweepAxis axis = SweepAxis::Alpha;
    DesignSpec base_spec;
    AnalysisOptions options;
    std::vector<SweepRecord> records; ///< sorted ascending by swept_value
};

namespace detail {

inline unsigned sweep_thread_cap() {
    unsigned cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    if (const char* env = std::getenv("NYQSHAPE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            cap = std::min<unsigned>(cap, static_cast<unsigned>(v));
        } else {
            cap = 1; // unparseable setting: fall back to serial
        }
    }
    return cap;
}

// Runs fn(0..n-1) on up to sweep_thread_cap() threads. Results must be
// written into pre-sized slots so the assembly order never depends on
// scheduling; the first exception wins and is rethrown on the caller.
template <typename F>
void parallel_for_index(std::size_t n, F&& fn) {
    const unsigned threads = std::min<std::size_t>(sweep_thread_cap(), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            std::size_t i;
            while (!failed.load(std::memory_order_relaxed) &&
                   (i = next.fetch_add(1)) < n) {
                try {
                    fn(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

inline SweepRecord analyze_point(const DesignSpec& spec, double swept_value,
                                 const AnalysisOptions& options) {
    const FirFilter filter = design_frequency_sampling(spec);
    const ResponseGrid grid =
        frequency_response(filter, options.n_points, 0.5 * filter.sample_rate_hz);
    SweepRecord record;
    record.swept_value = swept_value;
    record.spec = spec;
    record.n_taps = filter.size();
    record.metrics = spectral_metrics(grid, options.stop_threshold_db);
    record.isi = isi_report(filter);
    record.phase_at_nu1_deg = grid.phase_deg.back();
    record.occupied_bw_hz = 2.0 * band_edges(spec.params).f2_hz;
    return record;
}

template <typename Value, typename MakeSpec>
SweepReport run_sweep(SweepAxis axis, const DesignSpec& base, std::vector<Value> values,
                      const AnalysisOptions& options, const MakeSpec& make_spec) {
    std::sort(values.begin(), values.end());
    SweepReport report;
    report.axis = axis;
    report.base_spec = base;
    report.options = options;
    report.records.resize(values.size());
    parallel_for_index(values.size(), [&](std::size_t i) {
        report.records[i] =
            analyze_point(make_spec(values[i]), static_cast<double>(values[i]), options);
    });
    return report;
}

} // namespace detail

/// Roll-off study: one record per alpha, everything else from `base`.
inline SweepReport sweep_alpha(const DesignSpec& base, std::vector<double> alphas,
                               const AnalysisOptions& options = {}) {
    for (double a : alphas) {
        if (!(a >= 0.0 && a <= 1.0)) {
            throw InvalidRange("sweep_alpha: every alpha must lie in [0, 1]");
        }
    }
    return detail::run_sweep(SweepAxis::Alpha, base, std::move(alphas), options,
                             [&](double a) {
                                 DesignSpec spec = base;
                                 spec.params.rolloff = a;
                                 return spec;
                             });
}

/// Group-delay study: one record per D.
inline SweepReport sweep_delay(const DesignSpec& base, std::vector<int> delays,
                               const AnalysisOptions& options = {}) {
    for (int d : delays) {
        if (d < 1) throw InvalidRange("sweep_delay: every delay must be >= 1");
    }
    return detail::run_sweep(SweepAxis::Delay, base, std::move(delays), options,
                             [&](int d) {
                                 DesignSpec spec = base;
                                 spec.delay_symbols_d = d;
                                 return spec;
                             });
}

enum class Parity { Even, Odd };

/// Oversampling study at fixed parity (the even and odd M sets are reported
/// separately; they share all postconditions).
inline SweepReport sweep_oversample(const DesignSpec& base, std::vector<int> ms, Parity parity,
                                    const AnalysisOptions& options = {}) {
    for (int m : ms) {
        if (m < 2) throw InvalidRange("sweep_oversample: every M must be >= 2");
        const bool even = (m % 2) == 0;
        if (even != (parity == Parity::Even)) {
            throw ParityViolation("sweep_oversample: M = " + std::to_string(m) +
                                  " has the wrong parity for this sweep");
        }
    }
    const SweepAxis axis =
        parity == Parity::Even ? SweepAxis::OversampleEven : SweepAxis::OversampleOdd;
    return detail::run_sweep(axis, base, std::move(ms), options, [&](int m) {
        DesignSpec spec = base;
        spec.oversample_m = m;
        return spec;
    });
}

struct FamilyComparisonRow {
    PulseFamily family = PulseFamily::RaisedCosine;
    int n_taps = 0;
    SpectralMetrics metrics;
    IsiReport isi;
};

struct TradeoffCell {
    int delay = 0;
    int oversample = 0;
    int n_taps = 0;
    double peak_distortion = 0.0;
    std::optional<double> peak_sidelobe_db;
};

struct FamilyComparison {
    PulseParams params;
    int oversample_m = 0;
    int delay_symbols_d = 0;
    PulseFamily tradeoff_family = PulseFamily::FlippedExponential;
    std::vector<FamilyComparisonRow> rows;    ///< all five families at (alpha, M, D)
    std::vector<TradeoffCell> tradeoff;       ///< D in 2..10 x M in 2..7, row-major in D
};

/// All five families at identical (alpha, M, D), plus the D x M tradeoff
/// grid for one chosen family.
inline FamilyComparison family_comparison(const PulseParams& params, int m, int d,
                                          PulseFamily tradeoff_family = PulseFamily::FlippedExponential,
                                          const AnalysisOptions& options = {}) {
    FamilyComparison cmp;
    cmp.params = params;
    cmp.oversample_m = m;
    cmp.delay_symbols_d = d;
    cmp.tradeoff_family = tradeoff_family;

    cmp.rows.resize(kAllFamilies.size());
    detail::parallel_for_index(kAllFamilies.size(), [&](std::size_t i) {
        const DesignSpec spec{params, kAllFamilies[i], m, d, Normalization::UnitPeakResponse};
        const SweepRecord rec = detail::analyze_point(spec, 0.0, options);
        cmp.rows[i] = {kAllFamilies[i], rec.n_taps, rec.metrics, rec.isi};
    });

    constexpr int kDelays[] = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    constexpr int kOversamples[] = {2, 3, 4, 5, 6, 7};
    const std::size_t cells = std::size(kDelays) * std::size(kOversamples);
    cmp.tradeoff.resize(cells);
    detail::parallel_for_index(cells, [&](std::size_t i) {
        const int dd = kDelays[i / std::size(kOversamples)];
        const int mm = kOversamples[i % std::size(kOversamples)];
        const DesignSpec spec{params, tradeoff_family, mm, dd, Normalization::UnitPeakResponse};
        const SweepRecord rec = detail::analyze_point(spec, 0.0, options);
        cmp.tradeoff[i] = {dd, mm, rec.n_taps, rec.isi.peak_distortion,
                           rec.metrics.peak_sidelobe_db};
    });
    return cmp;
}

/// The fixed operating point the experiments default to: 3.84 Msymbol/s,
/// alpha 0.22, M = 2, D = 2, flipped-exponential, unit peak response.
inline DesignSpec wcdma_base_spec() {
    return DesignSpec{PulseParams{3.84e6, 0.22}, PulseFamily::FlippedExponential, 2, 2,
                      Normalization::UnitPeakResponse};
}

} // namespace nyqshape

#endif // NYQSHAPE_SWEEP_HPP
