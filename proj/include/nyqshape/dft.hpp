// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.
//
// Plain O(N^2) discrete Fourier transform. Filter lengths in this project
// stay far below the point where an FFT would matter, and the direct sum
// doubles as a transform the response evaluator can be validated against
// (Parseval, grid-vs-DTFT identities).

#ifndef NYQSHAPE_DFT_HPP
#define NYQSHAPE_DFT_HPP

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace nyqshape {

namespace detail {

// N-th roots of unity e^{-2 pi i j / N}, j = 0..N-1.
inline std::vector<std::complex<double>> dft_twiddles(std::size_t n) {
    std::vector<std::complex<double>> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        w[j] = std::polar(1.0, angle);
    }
    return w;
}

} // namespace detail

/// Forward DFT: X_k = sum_n x_n e^{-2 pi i k n / N}.
inline std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x) {
    const std::size_t n = x.size();
    const auto w = detail::dft_twiddles(n);
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            acc += x[j] * w[(k * j) % n];
        }
        out[k] = acc;
    }
    return out;
}

inline std::vector<std::complex<double>> dft(std::span<const double> x) {
    std::vector<std::complex<double>> cx(x.begin(), x.end());
    return dft(std::span<const std::complex<double>>(cx));
}

/// Inverse DFT with the 1/N convention: x_n = (1/N) sum_k X_k e^{+2 pi i k n / N}.
inline std::vector<std::complex<double>> inverse_dft(std::span<const std::complex<double>> x) {
    const std::size_t n = x.size();
    const auto w = detail::dft_twiddles(n);
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            acc += x[j] * std::conj(w[(k * j) % n]);
        }
        out[k] = acc / static_cast<double>(n);
    }
    return out;
}

/// DTFT of a real tap vector at a single frequency (Hz):
/// H(f) = sum_n taps[n] e^{-2 pi i f n / f_s}.
inline std::complex<double> dtft_at(std::span<const double> taps, double sample_rate_hz,
                                    double f_hz) {
    const double w = 2.0 * std::numbers::pi * f_hz / sample_rate_hz;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < taps.size(); ++n) {
        const double phi = w * static_cast<double>(n);
        acc += taps[n] * std::complex<double>(std::cos(phi), -std::sin(phi));
    }
    return acc;
}

} // namespace nyqshape

#endif // NYQSHAPE_DFT_HPP
