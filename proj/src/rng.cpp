// SPDX-License-Identifier: Apache-2.0
#include "rissim/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace rissim {

namespace {

std::uint64_t splitmix_step(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix_step(splitmix_step(a) ^ splitmix_step(b + 0xD1B54A32D192ED03ull));
}

std::uint64_t seed_bits(double value) { return std::bit_cast<std::uint64_t>(value); }

double RandomStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double a, double b) { return a + (b - a) * uniform(); }

double RandomStream::angle() { return 2.0 * std::numbers::pi * uniform(); }

double RandomStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

}  // namespace rissim
