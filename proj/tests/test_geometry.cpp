// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rissim/geometry.hpp"
#include "rissim/scenario.hpp"
#include "test_support.hpp"

using namespace rissim;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("antenna offset: middle element of an odd array sits at the centre") {
    const ArraySpec array{3, 0.7, 1.1, -0.4};
    const Vec3 offset = antenna_offset(array, 2);
    CHECK(offset.x == 0.0);
    CHECK(offset.y == 0.0);
    CHECK(offset.z == 0.0);
}

TEST_CASE("antenna offset: two-element untilted array straddles the centre") {
    const ArraySpec array{2, 0.5, 0.0, 0.0};
    const Vec3 first = antenna_offset(array, 1);
    CHECK(first.x == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(first.y == 0.0);
    CHECK(first.z == 0.0);
    const Vec3 second = antenna_offset(array, 2);
    CHECK(second.x == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("antenna offset: out-of-range index is rejected") {
    const ArraySpec array{4, 0.5, 0.0, 0.0};
    CHECK_THROWS_AS(antenna_offset(array, 0), std::domain_error);
    CHECK_THROWS_AS(antenna_offset(array, 5), std::domain_error);
}

TEST_CASE("antenna offset: offsets over a whole array sum to zero") {
    for (int count : {1, 2, 5, 8}) {
        const ArraySpec array{count, 0.31, 0.9, 0.3};
        Vec3 sum{};
        for (int i = 1; i <= count; ++i) sum = sum + antenna_offset(array, i);
        CHECK(std::abs(sum.x) < 1e-12);
        CHECK(std::abs(sum.y) < 1e-12);
        CHECK(std::abs(sum.z) < 1e-12);
    }
}

TEST_CASE("terminal position: both terminals start at their anchor points") {
    const Scenario sc;
    const Vec3 uav = terminal_position(Side::Uav, sc, 0.0);
    CHECK(uav.x == 0.0);
    CHECK(uav.y == 0.0);
    CHECK(uav.z == sc.uav_height);
    const Vec3 vehicle = terminal_position(Side::Vehicle, sc, 0.0);
    CHECK(vehicle.x == sc.vehicle_distance);
    CHECK(vehicle.y == 0.0);
    CHECK(vehicle.z == 0.0);
}

TEST_CASE("terminal position: straight-up flight climbs by speed times time") {
    Scenario sc;
    sc.uav_motion = {10.0, 0.0, kPi / 2.0};
    sc.uav_height = 50.0;
    const Vec3 pos = terminal_position(Side::Uav, sc, 1.0);
    CHECK(std::abs(pos.x) < 1e-12);
    CHECK(std::abs(pos.y) < 1e-12);
    CHECK(pos.z == doctest::Approx(60.0).epsilon(1e-12));
}

TEST_CASE("terminal position: trajectories are affine in time") {
    const Scenario sc = test::random_scenario(11);
    for (const Side side : {Side::Uav, Side::Vehicle}) {
        const Vec3 p0 = terminal_position(side, sc, 0.0);
        const Vec3 p1 = terminal_position(side, sc, 1.5);
        const Vec3 p2 = terminal_position(side, sc, 3.0);
        const Vec3 lhs = p2 - p1;
        const Vec3 rhs = p1 - p0;
        CHECK(std::abs(lhs.x - rhs.x) < 1e-9);
        CHECK(std::abs(lhs.y - rhs.y) < 1e-9);
        CHECK(std::abs(lhs.z - rhs.z) < 1e-9);
    }
}

TEST_CASE("terminal position: the vehicle stays on the ground plane") {
    const Scenario sc = test::random_scenario(12);
    for (const double t : {0.0, 1.0, 7.5}) {
        CHECK(terminal_position(Side::Vehicle, sc, t).z == 0.0);
    }
}

TEST_CASE("angles between points: diagonal target gives 45-degree pair") {
    const AnglePair a = angles_between({0, 0, 0}, {1, 1, std::numbers::sqrt2});
    CHECK(a.azimuth == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    CHECK(a.vertical == doctest::Approx(kPi / 4.0).epsilon(1e-12));
}

TEST_CASE("angles between points: on-axis and behind-the-origin targets") {
    const AnglePair front = angles_between({0, 0, 0}, {1, 0, 0});
    CHECK(front.azimuth == 0.0);
    CHECK(front.vertical == 0.0);
    const AnglePair back = angles_between({0, 0, 0}, {-1, 0, 0});
    CHECK(back.azimuth == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(back.vertical == 0.0);
}

TEST_CASE("angles between points: coincident points are rejected") {
    const Vec3 p{3.0, -1.0, 2.0};
    CHECK_THROWS_AS(angles_between(p, p), std::domain_error);
    CHECK_THROWS_AS(ground_angles_between(p, p), std::domain_error);
}

TEST_CASE("ground-referenced angles use the target's absolute height") {
    const Vec3 from{0.0, 0.0, 5.0};
    const Vec3 to{3.0, 4.0, 10.0};
    const AnglePair relative = angles_between(from, to);
    const AnglePair ground = ground_angles_between(from, to);
    CHECK(ground.azimuth == relative.azimuth);
    CHECK(relative.vertical == doctest::Approx(std::atan2(5.0, 5.0)).epsilon(1e-12));
    CHECK(ground.vertical == doctest::Approx(std::atan2(10.0, 5.0)).epsilon(1e-12));
}

TEST_CASE("unit direction: axis cases and the diagonal") {
    const Vec3 x = unit_direction({0.0, 0.0});
    CHECK(x.x == 1.0);
    CHECK(x.y == 0.0);
    CHECK(x.z == 0.0);
    const Vec3 y = unit_direction({kPi / 2.0, 0.0});
    CHECK(std::abs(y.x) < 1e-15);
    CHECK(y.y == doctest::Approx(1.0).epsilon(1e-15));
    const Vec3 diag = unit_direction({kPi / 4.0, kPi / 4.0});
    CHECK(diag.x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(diag.y == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(diag.z == doctest::Approx(std::numbers::sqrt2 / 2.0).epsilon(1e-12));
}

TEST_CASE("unit direction: always unit norm") {
    RandomStream stream(0xd1c, 0, RngPurpose::TestScenario);
    for (int i = 0; i < 200; ++i) {
        const AnglePair a{stream.uniform(-kPi, kPi), stream.uniform(-kPi / 2.0, kPi / 2.0)};
        CHECK(std::abs(norm(unit_direction(a)) - 1.0) < 1e-12);
    }
}

TEST_CASE("angles then direction reconstructs the separation vector") {
    RandomStream stream(0xd1c, 1, RngPurpose::TestScenario);
    for (int i = 0; i < 100; ++i) {
        const Vec3 from{stream.uniform(-50, 50), stream.uniform(-50, 50), stream.uniform(-50, 50)};
        const Vec3 to{stream.uniform(-50, 50), stream.uniform(-50, 50), stream.uniform(-50, 50)};
        const Vec3 d = to - from;
        const double separation = norm(d);
        if (separation == 0.0) continue;
        const Vec3 rebuilt = separation * unit_direction(angles_between(from, to));
        CHECK(std::abs(rebuilt.x - d.x) < 1e-9 * separation);
        CHECK(std::abs(rebuilt.y - d.y) < 1e-9 * separation);
        CHECK(std::abs(rebuilt.z - d.z) < 1e-9 * separation);
    }
}

TEST_CASE("velocity: heading decomposes into direction cosines") {
    const Vec3 v = velocity({10.0, kPi / 2.0, kPi / 3.0});
    CHECK(std::abs(v.x) < 1e-12);
    CHECK(v.y == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(v.z == doctest::Approx(5.0 * std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("tilt direction matches the unit direction of the tilt angles") {
    const ArraySpec array{4, 0.5, 0.8, -0.3};
    const Vec3 tilt = tilt_direction(array);
    const Vec3 expect = unit_direction({array.azimuth_tilt, array.vertical_tilt});
    CHECK(tilt.x == expect.x);
    CHECK(tilt.y == expect.y);
    CHECK(tilt.z == expect.z);
    CHECK(std::abs(norm(tilt) - 1.0) < 1e-12);
}
