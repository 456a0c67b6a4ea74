// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rissim/geometry.hpp"
#include "rissim/partition.hpp"

namespace rissim {

/// Per-sub-array reflection phase rule.
///  Zero    - all phases 0
///  Random  - uniform in [0, 2pi), redrawn per draw and held fixed across
///            evaluation instants within a draw (static panel state)
///  CoPhase - cancels the propagation phase at the sub-array centre
enum class PhasePolicy { Zero, Random, CoPhase };

/// Weight of one sub-array term in the reflected-path sum.
enum class SubArrayWeighting { ElementCount, UnitPerSubArray };

struct Box {
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;
    double z_min = 0.0, z_max = 0.0;
};

/// Scatterer layout: cluster centres are drawn uniformly in `box`; each
/// cluster holds `rays_per_cluster` rays placed isotropically Gaussian
/// (sigma = ray_sigma) around the centre.
struct ClusterConfig {
    int count = 3;
    int rays_per_cluster = 20;
    double ray_sigma = 5.0;
    Box box{30.0, 70.0, -20.0, 20.0, 5.0, 25.0};
};

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Full simulation scenario.  Defaults describe a 4.8 GHz link with a
/// 50x50 half-wavelength RIS panel at (50, 50, 20), a 30-element UAV array
/// starting at (0, 0, 50) and a 40-element vehicle array starting at
/// (100, 0, 0), both moving at 10 m/s.
struct Scenario {
    double wavelength = 0.0625;
    double rician_k = 1.0;
    std::uint64_t seed = 1;
    int draws = 2000;
    double time = 1.0;  ///< default evaluation instant [s]

    ArraySpec uav{30, 0.03125, std::numbers::pi / 3.0, std::numbers::pi / 4.0};
    MotionSpec uav_motion{10.0, std::numbers::pi / 2.0, std::numbers::pi / 3.0};
    double uav_height = 50.0;

    ArraySpec vehicle{40, 0.03125, std::numbers::pi / 3.0, std::numbers::pi / 4.0};
    MotionSpec vehicle_motion{10.0, std::numbers::pi / 2.0, 0.0};
    double vehicle_distance = 100.0;

    RisSpec ris;
    double ris_amplitude = 1.0;
    PhasePolicy phase_policy = PhasePolicy::CoPhase;
    SubArrayWeighting weighting = SubArrayWeighting::ElementCount;
    int forced_max_side = 0;  ///< 0 = derive from link distances

    ClusterConfig clusters;
};

/// Range-check every field; throws ConfigError naming the offending key.
void validate(const Scenario& scenario);

/// Apply "key = value" lines onto an existing scenario.  Lines may carry
/// '#' comments; unknown or duplicate keys and out-of-range values raise
/// ConfigError with the line number and key name.  Angle keys accept a
/// "_deg" suffix for degrees.  When `text` sets the wavelength but not a
/// spacing key, the corresponding spacing defaults to wavelength / 2.
void apply_scenario_text(Scenario& scenario, std::string_view text);

/// Parse a scenario file body starting from defaults.
Scenario parse_scenario(std::string_view text);

/// Load and parse a scenario file; an empty file yields the defaults.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace rissim
