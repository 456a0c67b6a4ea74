// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace rissim {

/// Hash-combine two 64-bit values (splitmix64 finaliser based).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Key a stream by the double's bit pattern (used for time-dependent
/// substreams).
std::uint64_t seed_bits(double value);

/// Stream purposes, kept distinct so unrelated consumers of the same
/// (seed, draw) pair never share a sequence.
enum class RngPurpose : std::uint64_t {
    Clusters = 0x11,
    RisPhase = 0x22,
    TestScenario = 0x33,
    TestMatrix = 0x44,
};

/// Deterministic substream addressed by (seed, draw index, purpose).
/// Distribution code is self-contained so sequences are reproducible
/// bit-for-bit for a given build.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t key) : engine_(key) {}
    RandomStream(std::uint64_t seed, std::uint64_t draw, RngPurpose purpose)
        : engine_(mix_seed(mix_seed(seed, draw), static_cast<std::uint64_t>(purpose))) {}

    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [a, b).
    double uniform(double a, double b);
    /// Uniform in [0, 2*pi).
    double angle();
    /// Standard normal (Box-Muller, cached spare).
    double normal();

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace rissim
