// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/point_cloud.hpp"
#include "occu/geom/transform.hpp"

#include <span>

namespace occu::curation {

struct IcpParams {
    double downsample = 0.2;
    double initial_radius = 2.0;
    double radius_decay = 0.9;
    double min_radius = 0.3;
    double convergence = 1e-4; // on rotation angle (rad) + translation (m)
    int max_iterations = 50;
};

struct IcpResult {
    geom::RigidTransform T; // maps source into target
    double rmse = 0.0;      // over the final correspondences
    int iterations = 0;
    bool converged = false;
};

/// Centroid of the points falling in each cubic cell, ordered by cell key.
std::vector<Vec3> voxel_downsample(std::span<const Vec3> points, double cell);

/// Point-to-point ICP with a shrinking correspondence radius.
/// Throws InvalidArgument when a cloud has fewer than 10 points and
/// Error("registration diverged") when an iteration finds fewer than three
/// correspondences.
IcpResult icp_register(const geom::PointCloud &source, const geom::PointCloud &target,
                       const geom::RigidTransform &init = {}, const IcpParams &params = {});

} // namespace occu::curation
