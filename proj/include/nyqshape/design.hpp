// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.
//
// Linear-phase FIR transmit filter design. Two independent construction
// paths produce the same nominal filter:
//
//   design_frequency_sampling  samples the amplitude spectrum on the DFT
//                              grid, attaches linear phase and inverts;
//   design_time_sampling       samples the quadrature-evaluated ideal pulse
//                              directly.
//
// The frequency path circularly aliases the infinite ideal impulse response
// into the N-tap window while the time path truncates it, so the two differ
// by the wrapped pulse tails; the gap closes as the delay D grows.

#ifndef NYQSHAPE_DESIGN_HPP
#define NYQSHAPE_DESIGN_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nyqshape/dft.hpp"
#include "nyqshape/errors.hpp"
#include "nyqshape/pulse.hpp"

namespace nyqshape {

enum class Normalization {
    UnitDcGain,       ///< sum of taps = 1
    UnitEnergy,       ///< sum of squared taps = 1
    UnitPeakTap,      ///< largest |tap| = 1
    UnitPeakResponse, ///< max |H(f)| over [0, f_s/2] = 1 (4096-point grid)
};

inline constexpr const char* normalization_name(Normalization mode) {
    switch (mode) {
        case Normalization::UnitDcGain: return "dc";
        case Normalization::UnitEnergy: return "energy";
        case Normalization::UnitPeakTap: return "peak-tap";
        case Normalization::UnitPeakResponse: return "peak-response";
    }
    return "?";
}

inline std::optional<Normalization> normalization_from_name(std::string_view name) {
    for (Normalization m : {Normalization::UnitDcGain, Normalization::UnitEnergy,
                            Normalization::UnitPeakTap, Normalization::UnitPeakResponse}) {
        if (name == normalization_name(m)) return m;
    }
    return std::nullopt;
}

struct DesignSpec {
    PulseParams params;
    PulseFamily family = PulseFamily::FlippedExponential;
    int oversample_m = 2;   ///< samples per symbol, M >= 2
    int delay_symbols_d = 2; ///< group delay in symbol periods, D >= 1
    Normalization normalization = Normalization::UnitPeakResponse;

    double sample_rate_hz() const { return oversample_m * params.symbol_rate_hz; }
};

/// M >= 2 keeps the spectrum (support up to B(1+alpha) <= f_d) at or below
/// f_s/2; M = 1 would alias any alpha > 0 design and is rejected.
inline void validate(const DesignSpec& spec) {
    validate(spec.params);
    if (spec.oversample_m < 2) {
        throw InvalidSpec("oversample_m must be an integer >= 2");
    }
    if (spec.delay_symbols_d < 1) {
        throw InvalidSpec("delay_symbols_d must be an integer >= 1");
    }
}

/// N = 2*D*M + 1: odd length with half-length D*M, so "group delay of D
/// symbols" is exact for the symmetric designs below.
inline int tap_count(const DesignSpec& spec) {
    validate(spec);
    return 2 * spec.delay_symbols_d * spec.oversample_m + 1;
}

/// A designed tap vector. Taps are symmetric about the center bit-exactly;
/// delay_samples = (N-1)/2 = D*M.
struct FirFilter {
    std::vector<double> taps;
    double sample_rate_hz = 0.0;
    int delay_samples = 0;
    DesignSpec spec;

    int size() const { return static_cast<int>(taps.size()); }
};

/// Rescales taps in place according to `mode`; symmetry is preserved since
/// every tap is divided by the same scalar.
inline FirFilter normalize(FirFilter filter, Normalization mode) {
    double divisor = 0.0;
    switch (mode) {
        case Normalization::UnitDcGain:
            divisor = std::accumulate(filter.taps.begin(), filter.taps.end(), 0.0);
            break;
        case Normalization::UnitEnergy: {
            double e = 0.0;
            for (double t : filter.taps) e += t * t;
            divisor = std::sqrt(e);
            break;
        }
        case Normalization::UnitPeakTap:
            for (double t : filter.taps) divisor = std::max(divisor, std::abs(t));
            break;
        case Normalization::UnitPeakResponse: {
            constexpr int kGridPoints = 4096;
            const double f_half = 0.5 * filter.sample_rate_hz;
            for (int j = 0; j < kGridPoints; ++j) {
                const double f = f_half * j / (kGridPoints - 1);
                divisor = std::max(divisor, std::abs(dtft_at(filter.taps, filter.sample_rate_hz, f)));
            }
            break;
        }
    }
    if (!(std::abs(divisor) >= 1e-300)) {
        throw DegenerateFilter("normalize: divisor is zero or vanishingly small");
    }
    for (double& t : filter.taps) t /= divisor;
    return filter;
}

/// Frequency-sampling design: evaluate the amplitude spectrum on the length-N
/// DFT grid f_k = k f_s / N (frequencies above f_s/2 fold to negative),
/// attach linear phase e^{-2 pi i k d / N} with d = (N-1)/2, inverse-DFT and
/// keep the real part. Mirrored taps are averaged afterwards so the symmetry
/// invariant holds bit-exactly.
inline FirFilter design_frequency_sampling(const DesignSpec& spec) {
    const int n = tap_count(spec);
    const double fs = spec.sample_rate_hz();
    const int d = (n - 1) / 2;

    std::vector<std::complex<double>> response(n);
    for (int k = 0; k < n; ++k) {
        const int folded = (2 * k > n) ? k - n : k; // integer compare: k f_s/N > f_s/2
        const double f = std::abs(folded) * fs / n;
        const double a = amplitude_spectrum(spec.family, spec.params, f);
        const double phase = -2.0 * std::numbers::pi * static_cast<double>(k) * d / n;
        response[k] = std::polar(a, phase);
    }

    const auto impulse = inverse_dft(std::span<const std::complex<double>>(response));

    double peak = 0.0;
    for (const auto& c : impulse) peak = std::max(peak, std::abs(c.real()));
    if (!(peak > 0.0)) {
        throw DegenerateFilter("design_frequency_sampling: all-zero impulse response");
    }

    double imag_residue = 0.0;
    for (const auto& c : impulse) imag_residue = std::max(imag_residue, std::abs(c.imag()));
    if (imag_residue > 1e-8 * peak) {
        throw NumericalAsymmetry("design_frequency_sampling: imaginary residue exceeds 1e-8 of peak");
    }
    assert(imag_residue < 1e-10 * peak);

    std::vector<double> taps(n);
    for (int i = 0; i < n; ++i) taps[i] = impulse[i].real();

    double asym = 0.0;
    for (int i = 0; i < n / 2; ++i) asym = std::max(asym, std::abs(taps[i] - taps[n - 1 - i]));
    if (asym > 1e-8 * peak) {
        throw NumericalAsymmetry("design_frequency_sampling: tap asymmetry exceeds 1e-8 of peak");
    }
    for (int i = 0; i < n / 2; ++i) {
        const double avg = 0.5 * (taps[i] + taps[n - 1 - i]);
        taps[i] = avg;
        taps[n - 1 - i] = avg;
    }

    return normalize(FirFilter{std::move(taps), fs, d, spec}, spec.normalization);
}

/// Time-sampling design: taps are the ideal pulse sampled at (n - d)/f_s.
/// The pulse is even, so only one half is evaluated and mirrored.
inline FirFilter design_time_sampling(const DesignSpec& spec) {
    const int n = tap_count(spec);
    const double fs = spec.sample_rate_hz();
    const int d = (n - 1) / 2;

    std::vector<double> taps(n);
    for (int j = 0; j <= d; ++j) {
        const double v = ideal_pulse_value(spec.family, spec.params, j / fs);
        taps[d + j] = v;
        taps[d - j] = v;
    }

    return normalize(FirFilter{std::move(taps), fs, d, spec}, spec.normalization);
}

} // namespace nyqshape

#endif // NYQSHAPE_DESIGN_HPP
