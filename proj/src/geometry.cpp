// SPDX-License-Identifier: Apache-2.0
#include "rissim/geometry.hpp"

#include <stdexcept>
#include <string>

#include "rissim/scenario.hpp"

namespace rissim {

Vec3 tilt_direction(const ArraySpec& array) {
    const double cv = std::cos(array.vertical_tilt);
    return {cv * std::cos(array.azimuth_tilt), cv * std::sin(array.azimuth_tilt),
            std::sin(array.vertical_tilt)};
}

Vec3 velocity(const MotionSpec& motion) {
    const double cv = std::cos(motion.vertical_heading);
    return {motion.speed * cv * std::cos(motion.azimuth_heading),
            motion.speed * cv * std::sin(motion.azimuth_heading),
            motion.speed * std::sin(motion.vertical_heading)};
}

Vec3 antenna_offset(const ArraySpec& array, int index) {
    if (index < 1 || index > array.count) {
        throw std::domain_error("antenna index " + std::to_string(index) +
                                " outside [1, " + std::to_string(array.count) + "]");
    }
    const double scale = 0.5 * (array.count - 2 * index + 1) * array.spacing;
    return scale * tilt_direction(array);
}

Vec3 terminal_position(Side side, const Scenario& scenario, double t) {
    if (side == Side::Uav) {
        const Vec3 v = velocity(scenario.uav_motion);
        return {v.x * t, v.y * t, scenario.uav_height + v.z * t};
    }
    const Vec3 v = velocity(scenario.vehicle_motion);
    return {scenario.vehicle_distance + v.x * t, v.y * t, 0.0};
}

AnglePair angles_between(const Vec3& from, const Vec3& to) {
    const Vec3 d = to - from;
    if (d.x == 0.0 && d.y == 0.0 && d.z == 0.0) {
        throw std::domain_error("direction between coincident points is undefined");
    }
    return {std::atan2(d.y, d.x), std::atan2(d.z, std::hypot(d.x, d.y))};
}

AnglePair ground_angles_between(const Vec3& from, const Vec3& to) {
    const Vec3 d = to - from;
    if (d.x == 0.0 && d.y == 0.0 && d.z == 0.0) {
        throw std::domain_error("direction between coincident points is undefined");
    }
    return {std::atan2(d.y, d.x), std::atan2(to.z, std::hypot(d.x, d.y))};
}

Vec3 unit_direction(const AnglePair& angles) {
    const double cv = std::cos(angles.vertical);
    return {cv * std::cos(angles.azimuth), cv * std::sin(angles.azimuth),
            std::sin(angles.vertical)};
}

}  // namespace rissim
