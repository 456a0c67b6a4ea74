// SPDX-License-Identifier: Apache-2.0
#include "rissim/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rissim/scenario.hpp"

namespace rissim {

namespace {

// Unit vector of the in-plane horizontal grid axis for a panel normal.
Vec3 horizontal_axis(PanelNormal normal) {
    switch (normal) {
        case PanelNormal::PlusY:
        case PanelNormal::MinusY:
            return {1.0, 0.0, 0.0};
        case PanelNormal::PlusX:
        case PanelNormal::MinusX:
        default:
            return {0.0, 1.0, 0.0};
    }
}

// Panel-grid offset of 1-based index `i` on an axis of `m` elements.
double axis_offset(double i, int m, double spacing) {
    return (i - 0.5 * (m + 1)) * spacing;
}

}  // namespace

Vec3 ris_element_position(const RisSpec& ris, int ix, int iz) {
    if (ix < 1 || ix > ris.elements_x || iz < 1 || iz > ris.elements_z) {
        throw std::domain_error("RIS element index (" + std::to_string(ix) + ", " +
                                std::to_string(iz) + ") outside the panel grid");
    }
    const Vec3 h = horizontal_axis(ris.normal);
    return ris.center + axis_offset(ix, ris.elements_x, ris.element_spacing) * h +
           Vec3{0.0, 0.0, axis_offset(iz, ris.elements_z, ris.element_spacing)};
}

double fraunhofer_distance(const RisSpec& ris, double wavelength) {
    if (wavelength <= 0.0) throw std::domain_error("wavelength must be positive");
    const double mx = ris.elements_x - 1;
    const double mz = ris.elements_z - 1;
    return 2.0 * ris.element_spacing * ris.element_spacing * (mx * mx + mz * mz) / wavelength;
}

AxisTiling tile_axis(int m, int side) {
    if (m < 1) throw std::domain_error("axis must hold at least one element");
    if (side < 1) throw std::domain_error("sub-array side must be at least 1");
    side = std::min(side, m);
    AxisTiling tiling;
    const int full = m / side;
    const int rest = m % side;
    const int count = rest == 0 ? full : full + 1;
    tiling.counts.reserve(count);
    tiling.starts.reserve(count);
    int start = 1;
    for (int i = 0; i < full; ++i) {
        tiling.counts.push_back(side);
        tiling.starts.push_back(start);
        start += side;
    }
    if (rest != 0) {
        tiling.counts.push_back(rest);
        tiling.starts.push_back(start);
    }
    return tiling;
}

SideBounds subarray_side_bounds(const Scenario& scenario, double t) {
    const RisSpec& ris = scenario.ris;
    SideBounds b;
    b.clamp = std::min(ris.elements_x, ris.elements_z);
    b.xi_t = norm(ris.center - terminal_position(Side::Uav, scenario, t));
    b.xi_r = norm(ris.center - terminal_position(Side::Vehicle, scenario, t));
    if (b.xi_t == 0.0 || b.xi_r == 0.0) {
        throw std::domain_error("terminal coincides with the RIS panel centre");
    }
    const double d = ris.element_spacing;
    const double root2 = std::numbers::sqrt2;
    b.g1 = std::sqrt(scenario.wavelength * b.xi_t) / (2.0 * d) -
           scenario.uav.count * scenario.uav.spacing / (root2 * d) + 1.0;
    b.g2 = std::sqrt(scenario.wavelength * b.xi_r) / (2.0 * d) -
           scenario.vehicle.count * scenario.vehicle.spacing / (root2 * d) + 1.0;
    return b;
}

int max_side_from_bounds(double g1, double g2, int clamp) {
    if (clamp < 1) throw std::domain_error("panel dimension must be at least 1");
    const double g = std::min(g1, g2);
    if (g <= 1.0) return 1;
    if (g >= static_cast<double>(clamp)) return clamp;
    return static_cast<int>(std::floor(g));
}

int max_subarray_side(const Scenario& scenario, double t) {
    const int clamp = std::min(scenario.ris.elements_x, scenario.ris.elements_z);
    if (scenario.forced_max_side > 0) return std::min(scenario.forced_max_side, clamp);
    const SideBounds b = subarray_side_bounds(scenario, t);
    return max_side_from_bounds(b.g1, b.g2, b.clamp);
}

SubArrayPartition make_partition(const RisSpec& ris, int side) {
    SubArrayPartition part;
    part.side = side;
    part.x = tile_axis(ris.elements_x, side);
    part.z = tile_axis(ris.elements_z, side);
    const Vec3 h = horizontal_axis(ris.normal);
    const int nx = part.num_x();
    const int nz = part.num_z();
    part.centers.reserve(static_cast<std::size_t>(nx) * nz);
    part.weights.reserve(static_cast<std::size_t>(nx) * nz);
    for (int iz = 0; iz < nz; ++iz) {
        const double mid_z = part.z.starts[iz] + 0.5 * (part.z.counts[iz] - 1);
        const double off_z = axis_offset(mid_z, ris.elements_z, ris.element_spacing);
        for (int ix = 0; ix < nx; ++ix) {
            const double mid_x = part.x.starts[ix] + 0.5 * (part.x.counts[ix] - 1);
            const double off_x = axis_offset(mid_x, ris.elements_x, ris.element_spacing);
            part.centers.push_back(ris.center + off_x * h + Vec3{0.0, 0.0, off_z});
            part.weights.push_back(part.x.counts[ix] * part.z.counts[iz]);
        }
    }
    return part;
}

SubArrayPartition partition_grid(const Scenario& scenario, double t) {
    return make_partition(scenario.ris, max_subarray_side(scenario, t));
}

SubArrayPartition unit_partition(const RisSpec& ris) { return make_partition(ris, 1); }

SubArrayPartition whole_panel_partition(const RisSpec& ris) {
    return make_partition(ris, std::max(ris.elements_x, ris.elements_z));
}

}  // namespace rissim
