// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.

#ifndef NYQSHAPE_RNG_HPP
#define NYQSHAPE_RNG_HPP

#include <cstdint>

namespace nyqshape {

// splitmix64 (Vigna). Chosen for bit-exact reproducibility across platforms;
// every randomized fixture in this project derives from it.
class Splitmix64 {
  public:
    explicit constexpr Splitmix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Antipodal symbol draw from the top bit: set bit -> +1, clear -> -1.
    constexpr double symbol() { return (next() >> 63) ? 1.0 : -1.0; }

  private:
    std::uint64_t state_;
};

} // namespace nyqshape

#endif // NYQSHAPE_RNG_HPP
