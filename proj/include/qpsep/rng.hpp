#pragma once

#include <array>
#include <cstdint>

#include "qpsep/complex_matrix.hpp"

namespace qpsep::rng {

/// splitmix64; used only to expand a user seed into generator state.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

/// xoshiro256** 1.0. Pinned so seeded streams are reproducible everywhere.
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& word : state_) {
            word = sm.next();
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

/// Standard normals via Box-Muller over a seeded xoshiro stream.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : gen_(seed) {}

    double next();
    Complex next_complex() {
        const double re = next();
        const double im = next();
        return Complex(re, im);
    }

private:
    Xoshiro256StarStar gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace qpsep::rng
