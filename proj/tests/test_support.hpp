// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "rissim/rng.hpp"
#include "rissim/scenario.hpp"

namespace rissim::test {

/// Deterministic randomized-but-valid scenario for property tests.  The
/// same case index always yields the same scenario; the phase policy
/// cycles through all three variants.
inline Scenario random_scenario(std::uint64_t case_index, int max_antennas = 8,
                                int max_panel = 8) {
    RandomStream stream(0x7357u, case_index, RngPurpose::TestScenario);
    const auto pick_count = [&](int bound) {
        return 1 + static_cast<int>(stream.uniform() * bound);
    };

    Scenario sc;
    sc.wavelength = stream.uniform(0.03, 0.12);
    sc.rician_k = stream.uniform(0.0, 5.0);
    sc.seed = case_index + 1;
    sc.draws = 8;
    sc.time = stream.uniform(0.0, 4.0);

    sc.uav.count = pick_count(max_antennas);
    sc.uav.spacing = sc.wavelength / 2.0;
    sc.uav.azimuth_tilt = stream.uniform(-std::numbers::pi, std::numbers::pi);
    sc.uav.vertical_tilt = stream.uniform(-std::numbers::pi / 2.0, std::numbers::pi / 2.0);
    sc.uav_motion.speed = stream.uniform(0.0, 15.0);
    sc.uav_motion.azimuth_heading = stream.uniform(-std::numbers::pi, std::numbers::pi);
    sc.uav_motion.vertical_heading =
        stream.uniform(-std::numbers::pi / 2.0, std::numbers::pi / 2.0);
    sc.uav_height = stream.uniform(30.0, 80.0);

    sc.vehicle.count = pick_count(max_antennas);
    sc.vehicle.spacing = sc.wavelength / 2.0;
    sc.vehicle.azimuth_tilt = stream.uniform(-std::numbers::pi, std::numbers::pi);
    sc.vehicle.vertical_tilt = stream.uniform(-std::numbers::pi / 2.0, std::numbers::pi / 2.0);
    sc.vehicle_motion.speed = stream.uniform(0.0, 15.0);
    sc.vehicle_motion.azimuth_heading = stream.uniform(-std::numbers::pi, std::numbers::pi);
    sc.vehicle_distance = stream.uniform(60.0, 140.0);

    sc.ris.elements_x = pick_count(max_panel);
    sc.ris.elements_z = pick_count(max_panel);
    sc.ris.element_spacing = sc.wavelength / 2.0;
    sc.ris.center = {stream.uniform(20.0, 60.0), stream.uniform(20.0, 60.0),
                     stream.uniform(10.0, 30.0)};

    sc.clusters.count = pick_count(3);
    sc.clusters.rays_per_cluster = pick_count(6);
    sc.clusters.ray_sigma = stream.uniform(0.5, 5.0);

    switch (case_index % 3) {
        case 0: sc.phase_policy = PhasePolicy::CoPhase; break;
        case 1: sc.phase_policy = PhasePolicy::Random; break;
        default: sc.phase_policy = PhasePolicy::Zero; break;
    }
    validate(sc);
    return sc;
}

/// Largest entry-wise difference between two complex matrices.
inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace rissim::test
