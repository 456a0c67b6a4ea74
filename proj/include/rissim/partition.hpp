// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "rissim/geometry.hpp"

namespace rissim {

struct Scenario;

/// Direction of the RIS panel normal.  The element grid spans the axis
/// perpendicular to the normal (x for +-y normals, y for +-x normals)
/// together with the global z axis.
enum class PanelNormal { PlusX, MinusX, PlusY, MinusY };

/// Rectangular RIS panel: element grid size, element spacing [m], centre
/// position and facing direction.
struct RisSpec {
    int elements_x = 50;
    int elements_z = 50;
    double element_spacing = 0.03125;
    Vec3 center{50.0, 50.0, 20.0};
    PanelNormal normal = PanelNormal::MinusY;
};

/// Position of element (ix, iz), both 1-based, on the panel grid.
Vec3 ris_element_position(const RisSpec& ris, int ix, int iz);

/// Far-field (Fraunhofer) distance of the whole panel [m].
double fraunhofer_distance(const RisSpec& ris, double wavelength);

/// One axis of the partition: element count and first element index
/// (1-based) of each sub-array tile.
struct AxisTiling {
    std::vector<int> counts;
    std::vector<int> starts;
};

/// Tile an axis of m elements into sub-arrays of at most `side` elements:
/// full tiles of `side` elements plus one remainder tile if needed.
AxisTiling tile_axis(int m, int side);

/// Upper bounds for the per-axis sub-array size at time t.  g1 derives from
/// the UAV-side link distance and the transmit aperture, g2 from the
/// vehicle-side link distance and the receive aperture; `clamp` is the
/// smaller panel dimension.
struct SideBounds {
    double g1 = 0.0;
    double g2 = 0.0;
    int clamp = 1;
    double xi_t = 0.0;  ///< UAV-to-panel-centre distance [m]
    double xi_r = 0.0;  ///< vehicle-to-panel-centre distance [m]
};

SideBounds subarray_side_bounds(const Scenario& scenario, double t);

/// Combine the bounds into the admissible sub-array side length.
int max_side_from_bounds(double g1, double g2, int clamp);

/// Maximum per-axis sub-array side at time t (>= 1).  A forced override in
/// the scenario takes precedence over the distance-derived bounds.
int max_subarray_side(const Scenario& scenario, double t);

/// Partition of the panel into a grid of rectangular sub-arrays.
struct SubArrayPartition {
    int side = 1;  ///< per-axis element budget used to build the tiling
    AxisTiling x;
    AxisTiling z;
    std::vector<Vec3> centers;  ///< per sub-array, indexed iz * num_x() + ix
    std::vector<int> weights;   ///< element count per sub-array

    int num_x() const { return static_cast<int>(x.counts.size()); }
    int num_z() const { return static_cast<int>(z.counts.size()); }
    int total() const { return num_x() * num_z(); }
};

/// Partition with every sub-array no larger than `side` per axis.
SubArrayPartition make_partition(const RisSpec& ris, int side);

/// Partition for the scenario at time t, using max_subarray_side.
SubArrayPartition partition_grid(const Scenario& scenario, double t);

/// Every element is its own sub-array.
SubArrayPartition unit_partition(const RisSpec& ris);

/// The whole panel as a single sub-array.
SubArrayPartition whole_panel_partition(const RisSpec& ris);

}  // namespace rissim
