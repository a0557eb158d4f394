// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/grid/occupancy_grid.hpp"

#include <vector>

namespace occu::grid {

/// Exact Euclidean distance (m) from every voxel center to the nearest voxel
/// center where `feature` is true, using the separable lower-envelope
/// transform with anisotropic spacing. Voxels with no feature anywhere get
/// +infinity. Layout matches GridGeometry::linear.
std::vector<double> euclidean_distance_transform(const GridGeometry &geometry,
                                                 const std::vector<bool> &feature);

/// Distance from each voxel center to the nearest occupied voxel center; 0
/// on occupied voxels. Throws InvalidArgument("no occupied voxels") for an
/// all-empty grid.
std::vector<double> unsigned_distance_field(const SemanticOccupancyGrid &grid);

} // namespace occu::grid
