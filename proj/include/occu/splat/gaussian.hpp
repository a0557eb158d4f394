// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/common.hpp"
#include "occu/grid/occupancy_grid.hpp"

#include <vector>

namespace occu::splat {

struct GaussianPrimitive {
    Vec3 mu = Vec3::Zero();
    Mat3 sigma = Mat3::Identity();
    double alpha = 1.0;
    ClassId label = 0;

    /// Symmetric within 1e-12, Cholesky-factorizable, alpha in (0, 1].
    void validate() const;
};

/// One isotropic Gaussian per occupied voxel, at the voxel center, in
/// linear voxel order.
std::vector<GaussianPrimitive> occupancy_to_gaussians(const grid::SemanticOccupancyGrid &grid,
                                                      double scale = 0.01, double opacity = 0.99);

} // namespace occu::splat
