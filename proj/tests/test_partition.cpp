// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rissim/partition.hpp"
#include "rissim/scenario.hpp"
#include "test_support.hpp"

using namespace rissim;

TEST_CASE("far-field distance: default panel sits at 150.0625 m") {
    const RisSpec ris;  // 50x50, half-wavelength spacing at 0.0625 m
    CHECK(fraunhofer_distance(ris, 0.0625) == 150.0625);
}

TEST_CASE("far-field distance: single element has no extent") {
    RisSpec ris;
    ris.elements_x = 1;
    ris.elements_z = 1;
    CHECK(fraunhofer_distance(ris, 0.0625) == 0.0);
}

TEST_CASE("far-field distance: hand-evaluated 10x10 case") {
    RisSpec ris;
    ris.elements_x = 10;
    ris.elements_z = 10;
    ris.element_spacing = 0.05;
    CHECK(fraunhofer_distance(ris, 0.1) == doctest::Approx(8.1).epsilon(1e-12));
}

TEST_CASE("axis tiling: exact division, remainder, and degenerate side") {
    const AxisTiling even = tile_axis(8, 4);
    CHECK(even.counts == std::vector<int>{4, 4});
    CHECK(even.starts == std::vector<int>{1, 5});

    const AxisTiling uneven = tile_axis(10, 4);
    CHECK(uneven.counts == std::vector<int>{4, 4, 2});
    CHECK(uneven.starts == std::vector<int>{1, 5, 9});

    const AxisTiling single = tile_axis(5, 1);
    CHECK(single.counts == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("axis tiling: invalid inputs are rejected") {
    CHECK_THROWS_AS(tile_axis(0, 3), std::domain_error);
    CHECK_THROWS_AS(tile_axis(5, 0), std::domain_error);
}

TEST_CASE("axis tiling: covers every element under the side bound") {
    for (int m = 1; m <= 64; ++m) {
        for (int side = 1; side <= m; ++side) {
            const AxisTiling tiling = tile_axis(m, side);
            CHECK(std::accumulate(tiling.counts.begin(), tiling.counts.end(), 0) == m);
            CHECK(*std::max_element(tiling.counts.begin(), tiling.counts.end()) <= side);
            int expected_start = 1;
            for (std::size_t i = 0; i < tiling.counts.size(); ++i) {
                CHECK(tiling.starts[i] == expected_start);
                expected_start += tiling.counts[i];
            }
        }
    }
}

TEST_CASE("side bound combination: floor, lower clamp, and panel clamp") {
    CHECK(max_side_from_bounds(3.7, 5.2, 50) == 3);
    CHECK(max_side_from_bounds(0.4, 5.2, 50) == 1);
    CHECK(max_side_from_bounds(200.0, 300.0, 50) == 50);
    CHECK_THROWS_AS(max_side_from_bounds(2.0, 2.0, 0), std::domain_error);
}

TEST_CASE("side bounds: default scenario distances and bounds at t=1") {
    const Scenario sc;
    const SideBounds b = subarray_side_bounds(sc, 1.0);

    // Vehicle at (100, 10, 0) against the panel at (50, 50, 20).
    CHECK(b.xi_r == doctest::Approx(30.0 * std::sqrt(5.0)).epsilon(1e-12));
    const double expected_xi_t =
        std::sqrt(2500.0 + 2025.0 + std::pow(30.0 + 5.0 * std::sqrt(3.0), 2));
    CHECK(b.xi_t == doctest::Approx(expected_xi_t).epsilon(1e-12));

    const double root2 = std::numbers::sqrt2;
    const double expected_g1 = std::sqrt(0.0625 * b.xi_t) / 0.0625 - 30.0 * 0.03125 / (root2 * 0.03125) + 1.0;
    const double expected_g2 = std::sqrt(0.0625 * b.xi_r) / 0.0625 - 40.0 * 0.03125 / (root2 * 0.03125) + 1.0;
    CHECK(b.g1 == doctest::Approx(expected_g1).epsilon(1e-12));
    CHECK(b.g2 == doctest::Approx(expected_g2).epsilon(1e-12));
    CHECK(b.clamp == 50);

    CHECK(max_subarray_side(sc, 1.0) == 5);
    const SubArrayPartition part = partition_grid(sc, 1.0);
    CHECK(part.num_x() == 10);
    CHECK(part.num_z() == 10);
    CHECK(part.total() == 100);
}

TEST_CASE("side bounds: default scenario at the start of motion") {
    const Scenario sc;
    CHECK(max_subarray_side(sc, 0.0) == 7);
    const SubArrayPartition part = partition_grid(sc, 0.0);
    CHECK(part.num_x() == 8);
    CHECK(part.num_z() == 8);
}

TEST_CASE("side bounds: terminal on the panel centre is rejected") {
    Scenario sc;
    sc.ris.center = {sc.vehicle_distance, 0.0, 0.0};
    CHECK_THROWS_AS(subarray_side_bounds(sc, 0.0), std::domain_error);
}

TEST_CASE("forced side override wins over the distance-derived bounds") {
    Scenario sc;
    sc.forced_max_side = 3;
    CHECK(max_subarray_side(sc, 1.0) == 3);
    const SubArrayPartition part = partition_grid(sc, 1.0);
    CHECK(part.num_x() == 17);  // 16 tiles of 3 plus a 2-element remainder
    CHECK(part.x.counts.back() == 2);
    sc.forced_max_side = 500;  // clamped to the panel dimension
    CHECK(max_subarray_side(sc, 1.0) == 50);
}

TEST_CASE("partition: weights cover the panel and centers stay inside it") {
    for (std::uint64_t i = 0; i < 12; ++i) {
        const Scenario sc = test::random_scenario(i);
        for (const double t : {0.0, sc.time}) {
            const SubArrayPartition part = partition_grid(sc, t);
            CHECK(std::accumulate(part.weights.begin(), part.weights.end(), 0) ==
                  sc.ris.elements_x * sc.ris.elements_z);

            const Vec3 first = ris_element_position(sc.ris, 1, 1);
            const Vec3 last =
                ris_element_position(sc.ris, sc.ris.elements_x, sc.ris.elements_z);
            const double slack = 1e-9;
            for (const Vec3& centre : part.centers) {
                CHECK(centre.x >= std::min(first.x, last.x) - slack);
                CHECK(centre.x <= std::max(first.x, last.x) + slack);
                CHECK(centre.y >= std::min(first.y, last.y) - slack);
                CHECK(centre.y <= std::max(first.y, last.y) + slack);
                CHECK(centre.z >= std::min(first.z, last.z) - slack);
                CHECK(centre.z <= std::max(first.z, last.z) + slack);
            }
        }
    }
}

TEST_CASE("partition: growing link distances never shrink the sub-arrays") {
    Scenario sc;
    int previous = 0;
    for (const double d : {100.0, 300.0, 1000.0, 5000.0}) {
        sc.vehicle_distance = d;
        const int side = max_subarray_side(sc, 0.0);
        CHECK(side >= previous);
        previous = side;
    }
}

TEST_CASE("partition: a panel no larger than the side bound stays whole") {
    Scenario sc;
    sc.ris.elements_x = 5;
    sc.ris.elements_z = 5;
    // Far-field boundary is ~1 m here; both links are tens of meters.
    CHECK(fraunhofer_distance(sc.ris, sc.wavelength) < 2.0);
    REQUIRE(max_subarray_side(sc, 0.0) == 5);
    const SubArrayPartition part = partition_grid(sc, 0.0);
    CHECK(part.total() == 1);
    CHECK(part.weights[0] == 25);
}

TEST_CASE("unit and whole-panel partitions bracket the tiling range") {
    RisSpec ris;
    ris.elements_x = 6;
    ris.elements_z = 4;
    const SubArrayPartition unit = unit_partition(ris);
    CHECK(unit.total() == 24);
    for (const int w : unit.weights) CHECK(w == 1);

    const SubArrayPartition whole = whole_panel_partition(ris);
    CHECK(whole.total() == 1);
    CHECK(whole.weights[0] == 24);
    CHECK(std::abs(whole.centers[0].x - ris.center.x) < 1e-12);
    CHECK(std::abs(whole.centers[0].y - ris.center.y) < 1e-12);
    CHECK(std::abs(whole.centers[0].z - ris.center.z) < 1e-12);
}

TEST_CASE("element positions: the grid spans the axes perpendicular to the normal") {
    RisSpec ris;
    ris.elements_x = 3;
    ris.elements_z = 3;
    ris.element_spacing = 0.5;
    ris.center = {10.0, 20.0, 30.0};

    // Default -y normal: grid spans global x and z.
    const Vec3 corner = ris_element_position(ris, 1, 1);
    CHECK(corner.x == doctest::Approx(9.5).epsilon(1e-15));
    CHECK(corner.y == 20.0);
    CHECK(corner.z == doctest::Approx(29.5).epsilon(1e-15));
    const Vec3 middle = ris_element_position(ris, 2, 2);
    CHECK(middle.x == 10.0);
    CHECK(middle.z == 30.0);

    // +-x normals: the horizontal grid axis becomes global y.
    ris.normal = PanelNormal::PlusX;
    const Vec3 rotated = ris_element_position(ris, 1, 2);
    CHECK(rotated.x == 10.0);
    CHECK(rotated.y == doctest::Approx(19.5).epsilon(1e-15));
    CHECK(rotated.z == 30.0);
}

TEST_CASE("element positions: indices outside the grid are rejected") {
    const RisSpec ris;
    CHECK_THROWS_AS(ris_element_position(ris, 0, 1), std::domain_error);
    CHECK_THROWS_AS(ris_element_position(ris, 1, 51), std::domain_error);
}
