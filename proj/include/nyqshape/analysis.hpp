// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.
//
// Frequency-domain and ISI views of a designed filter: magnitude / phase /
// group-delay grids, main-lobe and stopband metrics, symbol-spaced
// distortion, and eye-diagram overlay traces.

#ifndef NYQSHAPE_ANALYSIS_HPP
#define NYQSHAPE_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "nyqshape/design.hpp"
#include "nyqshape/dft.hpp"
#include "nyqshape/errors.hpp"
#include "nyqshape/rng.hpp"

namespace nyqshape {

/// Sampled complex frequency response with the derived plot columns.
/// norm_freq is f / (f_s/2) in [0, 1]; mag_db is floored at -300 dB;
/// phase_deg is the unwrapped phase in degrees.
struct ResponseGrid {
    std::vector<double> f_hz;
    std::vector<double> norm_freq;
    std::vector<std::complex<double>> response;
    std::vector<double> mag_db;
    std::vector<double> phase_deg;
    std::vector<double> group_delay_samples;
    double sample_rate_hz = 0.0;
    double passband_edge_hz = 0.0; ///< f1 of the originating design

    std::size_t size() const { return f_hz.size(); }
};

inline constexpr double kMagDbFloor = -300.0;

namespace detail {

// Unwraps a raw atan2 phase sequence (degrees). Steps are corrected to the
// nearest multiple of 180: besides the usual 360-degree wrapping, the real
// amplitude of a symmetric filter changes sign at response nulls, which
// shows up as a +-180 jump in the raw phase on top of the linear trend.
// Correcting in 180-degree units removes both and leaves the continuous
// linear-phase track. Requires the true phase to advance less than 90
// degrees per grid step.
inline std::vector<double> unwrap_phase_deg(const std::vector<double>& raw) {
    std::vector<double> out(raw.size());
    if (raw.empty()) return out;
    out[0] = raw[0];
    double offset = 0.0;
    for (std::size_t j = 1; j < raw.size(); ++j) {
        const double step = raw[j] - raw[j - 1];
        offset -= 180.0 * std::round(step / 180.0);
        out[j] = raw[j] + offset;
    }
    return out;
}

} // namespace detail

/// Group delay in samples from the unwrapped phase: -d(phi)/d(omega) by
/// central differences, one-sided at the endpoints. For phase in degrees and
/// omega in radians per sample, tau = -d(phi_deg)/d(nu) / 180.
inline std::vector<double> group_delay(const FirFilter&, const ResponseGrid& grid) {
    const auto& nu = grid.norm_freq;
    const auto& phi = grid.phase_deg;
    const std::size_t n = nu.size();
    std::vector<double> tau(n, 0.0);
    if (n < 2) return tau;
    const auto slope = [&](std::size_t a, std::size_t b) {
        return -(phi[b] - phi[a]) / (180.0 * (nu[b] - nu[a]));
    };
    tau[0] = slope(0, 1);
    for (std::size_t j = 1; j + 1 < n; ++j) tau[j] = slope(j - 1, j + 1);
    tau[n - 1] = slope(n - 2, n - 1);
    return tau;
}

/// Direct (per-frequency) response evaluation on n_points uniformly spaced
/// over [0, f_max_hz]. No transform shortcut: this is the defining sum and
/// doubles as its own oracle.
inline ResponseGrid frequency_response(const FirFilter& filter, int n_points, double f_max_hz) {
    const double f_half = 0.5 * filter.sample_rate_hz;
    if (!(f_max_hz > 0.0) || f_max_hz > f_half) {
        throw InvalidRange("frequency_response: f_max_hz must lie in (0, f_s/2]");
    }
    if (n_points < 2) {
        throw InvalidRange("frequency_response: n_points must be >= 2");
    }

    ResponseGrid grid;
    grid.sample_rate_hz = filter.sample_rate_hz;
    grid.passband_edge_hz = band_edges(filter.spec.params).f1_hz;
    grid.f_hz.resize(n_points);
    grid.norm_freq.resize(n_points);
    grid.response.resize(n_points);
    grid.mag_db.resize(n_points);
    std::vector<double> raw_phase(n_points);

    for (int j = 0; j < n_points; ++j) {
        const double f = f_max_hz * j / (n_points - 1);
        const auto h = dtft_at(filter.taps, filter.sample_rate_hz, f);
        grid.f_hz[j] = f;
        grid.norm_freq[j] = f / f_half;
        grid.response[j] = h;
        grid.mag_db[j] = std::max(20.0 * std::log10(std::abs(h)), kMagDbFloor);
        raw_phase[j] = std::atan2(h.imag(), h.real()) * (180.0 / std::numbers::pi);
    }
    grid.phase_deg = detail::unwrap_phase_deg(raw_phase);
    grid.group_delay_samples = group_delay(filter, grid);
    return grid;
}

/// Lobe and band metrics read off a response grid.
struct SpectralMetrics {
    double main_lobe_edge_hz = 0.0;   ///< first strict local minimum of mag_db beyond f1
    double stopband_start_hz = 0.0;   ///< first f from which mag_db stays below the threshold
    std::optional<double> peak_sidelobe_db; ///< max mag_db beyond the main lobe; absent if no lobe edge
    double passband_ripple_db = 0.0;  ///< max - min of mag_db over [0, f1]
};

/// Requires a grid that spans [0, f_s/2] with at least 512 points. If mag_db
/// has no strict local minimum beyond f1, the main-lobe edge degenerates to
/// f_s/2 and the sidelobe field is absent.
inline SpectralMetrics spectral_metrics(const ResponseGrid& grid, double stop_threshold_db) {
    const std::size_t n = grid.size();
    if (n < 512) {
        throw GridTooCoarse("spectral_metrics: need at least 512 grid points");
    }
    if (std::abs(grid.norm_freq.back() - 1.0) > 1e-12) {
        throw InvalidRange("spectral_metrics: grid must span [0, f_s/2]");
    }
    if (!(stop_threshold_db < 0.0)) {
        throw InvalidRange("spectral_metrics: stop threshold must be negative");
    }

    SpectralMetrics m;
    const auto& mag = grid.mag_db;
    const auto& f = grid.f_hz;

    std::size_t lobe = n; // index of the first strict local minimum beyond f1
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (f[i] > grid.passband_edge_hz && mag[i] < mag[i - 1] && mag[i] < mag[i + 1]) {
            lobe = i;
            break;
        }
    }
    if (lobe == n) {
        m.main_lobe_edge_hz = f.back();
        m.peak_sidelobe_db = std::nullopt;
    } else {
        m.main_lobe_edge_hz = f[lobe];
        double peak = kMagDbFloor;
        for (std::size_t i = lobe + 1; i < n; ++i) peak = std::max(peak, mag[i]);
        m.peak_sidelobe_db = peak;
    }

    std::size_t start = n;
    while (start > 0 && mag[start - 1] < stop_threshold_db) --start;
    m.stopband_start_hz = start == n ? f.back() : f[start];

    double lo = mag[0];
    double hi = mag[0];
    for (std::size_t i = 0; i < n && f[i] <= grid.passband_edge_hz; ++i) {
        lo = std::min(lo, mag[i]);
        hi = std::max(hi, mag[i]);
    }
    m.passband_ripple_db = hi - lo;
    return m;
}

/// Symbol-spaced samples of the (scaled) impulse response and the derived
/// ISI distortion scalars.
struct IsiReport {
    std::vector<double> symbol_samples; ///< p(kT) for k = -D..D, scaled so p(0) = 1
    double peak_distortion = 0.0;       ///< sum_{k != 0} |p(kT)|
    double rms_distortion = 0.0;        ///< sqrt(sum_{k != 0} p(kT)^2)
};

inline IsiReport isi_report(const FirFilter& filter) {
    const int m = filter.spec.oversample_m;
    const int d_sym = filter.spec.delay_symbols_d;
    const int n = filter.size();
    if (n != 2 * d_sym * m + 1) {
        throw InvalidSpec("isi_report: tap count does not match 2*D*M + 1 of the spec");
    }
    const int center = (n - 1) / 2;
    const double c0 = filter.taps[center];
    if (!(std::abs(c0) >= 1e-300)) {
        throw DegenerateFilter("isi_report: center tap is zero");
    }

    IsiReport report;
    report.symbol_samples.resize(2 * d_sym + 1);
    double peak = 0.0;
    double sq = 0.0;
    for (int k = -d_sym; k <= d_sym; ++k) {
        const double v = k == 0 ? 1.0 : filter.taps[center + k * m] / c0;
        report.symbol_samples[k + d_sym] = v;
        if (k != 0) {
            peak += std::abs(v);
            sq += v * v;
        }
    }
    report.peak_distortion = peak;
    report.rms_distortion = std::sqrt(sq);
    return report;
}

/// Eye-diagram overlay traces for a caller-supplied antipodal symbol stream:
/// upsample by M, filter by direct convolution, drop D warm-up symbols at
/// each end, and cut the steady-state output into consecutive two-symbol
/// windows of 2M+1 samples aligned to the filter delay.
inline std::vector<std::vector<double>> eye_trace_from_symbols(const FirFilter& filter,
                                                               std::span<const double> symbols) {
    const int m = filter.spec.oversample_m;
    const int d_sym = filter.spec.delay_symbols_d;
    const int n_taps = filter.size();
    const int n_sym = static_cast<int>(symbols.size());
    const int d = filter.delay_samples;

    // y[i] = sum_k symbols[k] * taps[i - k*M]; impulse-train input makes the
    // convolution a sparse sum over contributing symbols.
    const int y_len = n_sym * m + n_taps - 1;
    std::vector<double> y(y_len, 0.0);
    for (int k = 0; k < n_sym; ++k) {
        const int base = k * m;
        for (int t = 0; t < n_taps; ++t) {
            y[base + t] += symbols[k] * filter.taps[t];
        }
    }

    std::vector<std::vector<double>> traces;
    for (int w = 0;; ++w) {
        const int first_sym = d_sym + 2 * w;
        if (first_sym + 2 > n_sym - 1 - d_sym) break;
        const int base = first_sym * m + d;
        traces.emplace_back(y.begin() + base, y.begin() + base + 2 * m + 1);
    }
    return traces;
}

/// Eye traces for a deterministic +-1 stream drawn from splitmix64.
inline std::vector<std::vector<double>> eye_trace(const FirFilter& filter, int n_symbols,
                                                  std::uint64_t seed) {
    if (n_symbols < 16) {
        throw InvalidArg("eye_trace: n_symbols must be >= 16");
    }
    Splitmix64 rng(seed);
    std::vector<double> symbols(n_symbols);
    for (double& s : symbols) s = rng.symbol();
    return eye_trace_from_symbols(filter, symbols);
}

} // namespace nyqshape

#endif // NYQSHAPE_ANALYSIS_HPP
