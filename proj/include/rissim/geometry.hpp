// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace rissim {

struct Scenario;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm_squared(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm_squared(v)); }

/// Azimuth in (-pi, pi], vertical (elevation) in [-pi/2, pi/2].
struct AnglePair {
    double azimuth = 0.0;
    double vertical = 0.0;
};

/// Uniform linear antenna array: element count, inter-element spacing [m]
/// and the azimuth/vertical tilt of the array axis.
struct ArraySpec {
    int count = 1;
    double spacing = 0.03125;
    double azimuth_tilt = 0.0;
    double vertical_tilt = 0.0;
};

/// Constant-velocity motion: speed [m/s] plus azimuth/vertical heading.
struct MotionSpec {
    double speed = 0.0;
    double azimuth_heading = 0.0;
    double vertical_heading = 0.0;
};

enum class Side { Uav, Vehicle };

/// Unit vector along the array axis.
Vec3 tilt_direction(const ArraySpec& array);

/// Velocity vector for a motion spec.
Vec3 velocity(const MotionSpec& motion);

/// Offset of antenna element `index` (1-based) from the array centre.
/// Elements are placed symmetrically: index 1 sits at +(count-1)/2 spacings
/// along the tilt direction, index `count` at -(count-1)/2.
Vec3 antenna_offset(const ArraySpec& array, int index);

/// Position of the UAV or the ground vehicle at time t [s].
/// The UAV starts at (0, 0, H0), the vehicle at (D0, 0, 0); the vehicle
/// stays on the ground plane z = 0.
Vec3 terminal_position(Side side, const Scenario& scenario, double t);

/// Azimuth/vertical angles of the ray from `from` towards `to`.
/// Azimuth is four-quadrant; vertical uses the height difference over the
/// horizontal range.
AnglePair angles_between(const Vec3& from, const Vec3& to);

/// Same as angles_between, but the vertical angle is referenced to the
/// ground plane: its numerator is the target's absolute height, not the
/// height difference.  Used for links seen from a ground terminal.
AnglePair ground_angles_between(const Vec3& from, const Vec3& to);

/// Unit direction vector for an angle pair.
Vec3 unit_direction(const AnglePair& angles);

}  // namespace rissim
