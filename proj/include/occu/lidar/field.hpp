// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/grid/occupancy_grid.hpp"

#include <vector>

namespace occu::lidar {

/// Signed distance surrogate built from an occupancy grid. At voxel centers
/// the value is the distance to the nearest occupied center (empty voxels)
/// or minus the distance to the nearest empty center (occupied voxels);
/// between centers it is trilinear. Outside the center bounding box the
/// value at the clamped point is extended by the distance to it.
class OccupancyField {
public:
    /// Throws InvalidArgument("no occupied voxels") for an empty grid.
    explicit OccupancyField(const grid::SemanticOccupancyGrid &grid);

    const grid::GridGeometry &geometry() const noexcept { return geo_; }

    double value(const Vec3 &p) const;
    /// Value and analytic gradient of the interpolant.
    double value_grad(const Vec3 &p, Vec3 &grad) const;

    /// Raw value at a voxel center.
    float at(std::size_t linear) const { return f_[linear]; }

private:
    grid::GridGeometry geo_;
    std::vector<float> f_;
};

inline double sdf_at(const OccupancyField &field, const Vec3 &p) { return field.value(p); }

} // namespace occu::lidar
