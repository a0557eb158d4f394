// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/lidar_rig.hpp"
#include "occu/lidar/field.hpp"

#include <Eigen/Core>
#include <span>
#include <vector>

namespace occu::lidar {

struct VolumeRenderParams {
    double sharpness = 64.0; // s of the logistic, 1/m
    double w_min = 1e-3;
    bool normalize_depth = true;
};

struct VolumeRenderResult {
    double depth = 0.0;
    std::vector<double> weights;
    double weight_sum = 0.0;
    double transmittance = 1.0; // after the last sample
    bool dropped = true;
};

/// Logistic 1 / (1 + exp(-s x)).
double logistic(double x, double s);

/// Discrete SDF volume rendering over ascending depths `s` with field
/// values `f`. The last sample only closes the final interval, so its
/// weight is 0.
VolumeRenderResult volume_render(std::span<const double> s, std::span<const double> f,
                                 const VolumeRenderParams &params = {});

/// Same, evaluating the field at ray.origin + s_i ray.dir.
VolumeRenderResult volume_render(const geom::Ray &ray, const OccupancyField &field,
                                 std::span<const double> s, const VolumeRenderParams &params = {});

/// v_r = sum_i w_i u_i. Throws InvalidArgument on a length mismatch or
/// ragged features.
Eigen::VectorXd ray_feature(std::span<const double> weights,
                            const std::vector<Eigen::VectorXd> &features);

} // namespace occu::lidar
