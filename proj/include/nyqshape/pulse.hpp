// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.
//
// Amplitude spectra of the supported Nyquist pulse families, plus the
// quadrature-based time-domain evaluator that serves as the independent
// oracle for the FIR design paths.
//
// All five families share the same skeleton: F(f) = 1 in the passband
// |f| <= f1, F(f) = 0 in the stopband |f| >= f2, and a monotone transition
// in between. The three "flipped" families are built from a monotone shape
// on the inner half of the transition band that reaches 1/2 at the Nyquist
// frequency B, mirrored by point reflection through (B, 1/2) on the outer
// half. That construction makes F(B+x) + F(B-x) = 1 on the transition band,
// which is the frequency-domain form of the zero-ISI criterion.

#ifndef NYQSHAPE_PULSE_HPP
#define NYQSHAPE_PULSE_HPP

#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "nyqshape/errors.hpp"

namespace nyqshape {

enum class PulseFamily {
    RaisedCosine,
    RootRaisedCosine,
    FlippedExponential,
    FlippedHyperbolicSecant,
    FlippedArcHyperbolicSecant,
};

inline constexpr std::array<PulseFamily, 5> kAllFamilies = {
    PulseFamily::RaisedCosine,          PulseFamily::RootRaisedCosine,
    PulseFamily::FlippedExponential,    PulseFamily::FlippedHyperbolicSecant,
    PulseFamily::FlippedArcHyperbolicSecant,
};

/// True for every family whose spectrum itself satisfies the Nyquist
/// criterion. The root raised cosine only does so after matched filtering.
inline constexpr bool is_nyquist(PulseFamily family) {
    return family != PulseFamily::RootRaisedCosine;
}

inline constexpr const char* family_name(PulseFamily family) {
    switch (family) {
        case PulseFamily::RaisedCosine: return "rc";
        case PulseFamily::RootRaisedCosine: return "rrc";
        case PulseFamily::FlippedExponential: return "fexp";
        case PulseFamily::FlippedHyperbolicSecant: return "fsech";
        case PulseFamily::FlippedArcHyperbolicSecant: return "farcsech";
    }
    return "?";
}

inline std::optional<PulseFamily> family_from_name(std::string_view name) {
    for (PulseFamily f : kAllFamilies) {
        if (name == family_name(f)) return f;
    }
    return std::nullopt;
}

/// One Nyquist pulse instance: symbol rate f_d and roll-off factor alpha.
struct PulseParams {
    double symbol_rate_hz = 0.0; ///< f_d, symbols per second
    double rolloff = 0.0;        ///< alpha in [0, 1]

    double symbol_period_s() const { return 1.0 / symbol_rate_hz; }
    double nyquist_hz() const { return 0.5 * symbol_rate_hz; }
};

inline void validate(const PulseParams& params) {
    if (!(params.symbol_rate_hz > 0.0) || !std::isfinite(params.symbol_rate_hz)) {
        throw InvalidSpec("symbol_rate_hz must be positive and finite");
    }
    if (!(params.rolloff >= 0.0 && params.rolloff <= 1.0)) {
        throw InvalidSpec("rolloff must be within [0, 1]");
    }
}

/// Transition-band boundaries: f1 = B(1-alpha), fN = B, f2 = B(1+alpha).
struct BandEdges {
    double f1_hz = 0.0;
    double fN_hz = 0.0;
    double f2_hz = 0.0;
};

/// f2 is derived as 2*fN - f1 so that f1 + f2 == 2*fN holds bit-exactly.
inline BandEdges band_edges(const PulseParams& params) {
    validate(params);
    const double fN = params.nyquist_hz();
    const double f1 = (1.0 - params.rolloff) * fN;
    return {f1, fN, 2.0 * fN - f1};
}

namespace detail {

// asech(z) = ln((1 + sqrt(1 - z^2)) / z) for z in (0, 1]; asech(1) = 0
// exactly. (1-z)(1+z) keeps the radicand accurate as z -> 1.
inline double asech(double z) {
    if (z >= 1.0) return 0.0;
    return std::log((1.0 + std::sqrt((1.0 - z) * (1.0 + z))) / z);
}

// ln(2 + sqrt(3)) = asech(1/2); pins the flipped-sech and flipped-arcsech
// shapes to the value 1/2 at the Nyquist frequency.
inline double log_2_plus_sqrt3() { return std::log(2.0 + std::sqrt(3.0)); }

// Inner transition branch, valid on f1 < x <= B. Reaches 1/2 at x = B.
inline double transition_inner(PulseFamily family, const BandEdges& e, double alpha, double x) {
    const double ab = alpha * e.fN_hz;
    switch (family) {
        case PulseFamily::RaisedCosine:
            return 0.5 * (1.0 + std::cos(std::numbers::pi * (x - e.f1_hz) / (2.0 * ab)));
        case PulseFamily::RootRaisedCosine:
            return std::sqrt(0.5 * (1.0 + std::cos(std::numbers::pi * (x - e.f1_hz) / (2.0 * ab))));
        case PulseFamily::FlippedExponential:
            return std::exp(-(std::numbers::ln2 / ab) * (x - e.f1_hz));
        case PulseFamily::FlippedHyperbolicSecant:
            return 1.0 / std::cosh((log_2_plus_sqrt3() / ab) * (x - e.f1_hz));
        case PulseFamily::FlippedArcHyperbolicSecant:
            return 1.0 - asech((e.f2_hz - x) / (2.0 * ab)) / (2.0 * log_2_plus_sqrt3());
    }
    std::abort();
}

// Outer transition branch, valid on B < x < f2: the inner branch point
// reflected through (B, 1/2). The raised-cosine pair keeps its closed form,
// which coincides with the reflection.
inline double transition_outer(PulseFamily family, const BandEdges& e, double alpha, double x) {
    const double ab = alpha * e.fN_hz;
    switch (family) {
        case PulseFamily::RaisedCosine:
            return 0.5 * (1.0 + std::cos(std::numbers::pi * (x - e.f1_hz) / (2.0 * ab)));
        case PulseFamily::RootRaisedCosine:
            return std::sqrt(0.5 * (1.0 + std::cos(std::numbers::pi * (x - e.f1_hz) / (2.0 * ab))));
        case PulseFamily::FlippedExponential:
            return 1.0 - std::exp(-(std::numbers::ln2 / ab) * (e.f2_hz - x));
        case PulseFamily::FlippedHyperbolicSecant:
            return 1.0 - 1.0 / std::cosh((log_2_plus_sqrt3() / ab) * (e.f2_hz - x));
        case PulseFamily::FlippedArcHyperbolicSecant:
            return asech((x - e.f1_hz) / (2.0 * ab)) / (2.0 * log_2_plus_sqrt3());
    }
    std::abort();
}

} // namespace detail

/// Dimensionless amplitude spectrum F(|f|) in [0, 1].
///
/// Ties are broken deterministically: exactly f1 belongs to the passband,
/// exactly f2 to the stopband, exactly B evaluates to 1/2 (sqrt(1/2) for the
/// root raised cosine). alpha = 0 degenerates to a brick wall with F(B) = 1/2
/// by the same convention.
inline double amplitude_spectrum(PulseFamily family, const PulseParams& params, double f_hz) {
    const BandEdges e = band_edges(params);
    const double x = std::abs(f_hz);
    if (params.rolloff == 0.0) {
        if (x < e.fN_hz) return 1.0;
        if (x > e.fN_hz) return 0.0;
        return family == PulseFamily::RootRaisedCosine ? std::sqrt(0.5) : 0.5;
    }
    if (x <= e.f1_hz) return 1.0;
    if (x >= e.f2_hz) return 0.0;
    if (x == e.fN_hz) {
        return family == PulseFamily::RootRaisedCosine ? std::sqrt(0.5) : 0.5;
    }
    return x < e.fN_hz ? detail::transition_inner(family, e, params.rolloff, x)
                       : detail::transition_outer(family, e, params.rolloff, x);
}

/// Sum of the spectrum over its +-2 symbol-rate translates. Equals 1 for
/// every frequency when the family satisfies the Nyquist criterion (support
/// is within +-f2 <= f_d, so |k| <= 2 covers all overlaps).
inline double alias_sum(PulseFamily family, const PulseParams& params, double f_hz) {
    if (!is_nyquist(family)) {
        throw FamilyNotNyquist("alias_sum: root raised cosine is not a Nyquist spectrum; "
                               "apply the criterion to its square instead");
    }
    validate(params);
    double sum = 0.0;
    for (int k = -2; k <= 2; ++k) {
        sum += amplitude_spectrum(family, params, f_hz - k * params.symbol_rate_hz);
    }
    return sum;
}

namespace detail {

// Composite Simpson panels per smooth spectral piece. 2^14 panels push the
// quadrature error of the worst case (the arcsech square-root cusp at the
// band edges) to ~2e-9, well under the 1e-7 the zero-ISI checks need.
inline constexpr int kSimpsonPanels = 1 << 14;

// Integrates g(x) * cos(2 pi x t) over [lo, hi] with composite Simpson.
template <typename G>
double simpson_cos(const G& g, double lo, double hi, double t) {
    if (!(hi > lo)) return 0.0;
    const int n = kSimpsonPanels;
    const double h = (hi - lo) / n;
    const auto f = [&](double x) { return g(x) * std::cos(2.0 * std::numbers::pi * x * t); };
    double end = f(lo) + f(hi);
    double odd = 0.0;
    double even = 0.0;
    for (int i = 1; i < n; ++i) {
        const double x = lo + i * h;
        if (i & 1) {
            odd += f(x);
        } else {
            even += f(x);
        }
    }
    return (h / 3.0) * (end + 4.0 * odd + 2.0 * even);
}

} // namespace detail

/// Time-domain pulse p(t) = (2/f_d) * integral of F(f) cos(2 pi f t) over
/// [0, f2], integrating each smooth piece [0,f1], [f1,B], [B,f2] separately
/// with its own closed-form branch so the integrands stay smooth up to the
/// panel boundaries. Normalized so p(0) = 1 for the Nyquist families.
inline double ideal_pulse_value(PulseFamily family, const PulseParams& params, double t_s) {
    const BandEdges e = band_edges(params);
    const double alpha = params.rolloff;
    double total = detail::simpson_cos([](double) { return 1.0; }, 0.0, e.f1_hz, t_s);
    if (alpha > 0.0) {
        total += detail::simpson_cos(
            [&](double x) { return detail::transition_inner(family, e, alpha, x); }, e.f1_hz,
            e.fN_hz, t_s);
        total += detail::simpson_cos(
            [&](double x) { return detail::transition_outer(family, e, alpha, x); }, e.fN_hz,
            e.f2_hz, t_s);
    }
    return (2.0 / params.symbol_rate_hz) * total;
}

} // namespace nyqshape

#endif // NYQSHAPE_PULSE_HPP
