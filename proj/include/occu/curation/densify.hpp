// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/point_cloud.hpp"

#include <span>

namespace occu::curation {

struct DensifyParams {
    double voxel = 0.125;       // TSDF cell size (m)
    int truncation_voxels = 3;  // truncation distance in cells
    std::size_t normal_neighbors = 12;
    double min_weight = 0.0;    // cells with less accumulated weight are ignored
    Vec3 anchor = Vec3::Zero(); // a cell corner; keeps cells aligned with a target grid
};

struct DensifyResult {
    geom::PointCloud cloud;
    bool warning = false; // too few points, input returned unchanged
};

/// Surface densification by TSDF fusion. Each point splats a signed distance
/// along its PCA normal into the cells of its truncation ball, weighted by a
/// Gaussian in the lateral offset. Output is the centers of zero-crossing
/// cells, sorted. `origins` (empty or one per point) orients normals toward
/// the sensor; without it normals point away from the centroid.
DensifyResult densify(const geom::PointCloud &points, std::span<const Vec3> origins = {},
                      const DensifyParams &params = {});

} // namespace occu::curation
