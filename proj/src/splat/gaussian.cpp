// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/splat/gaussian.hpp"

#include <Eigen/Cholesky>

namespace occu::splat {

void GaussianPrimitive::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("gaussian: alpha must be in (0, 1]");
    if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw InvalidArgument("gaussian: covariance is not symmetric");
    Eigen::LLT<Mat3> llt(sigma);
    if (llt.info() != Eigen::Success)
        throw InvalidArgument("gaussian: covariance is not positive definite");
}

std::vector<GaussianPrimitive> occupancy_to_gaussians(const grid::SemanticOccupancyGrid &grid,
                                                      double scale, double opacity) {
    if (!(scale > 0.0)) throw InvalidArgument("occupancy_to_gaussians: scale must be > 0");
    if (!(opacity > 0.0 && opacity <= 1.0))
        throw InvalidArgument("occupancy_to_gaussians: opacity must be in (0, 1]");
    const auto &geo = grid.geometry();
    const Mat3 cov = scale * scale * Mat3::Identity();
    std::vector<GaussianPrimitive> out;
    const auto &cls = grid.classes();
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (cls[i] == 0) continue;
        out.push_back({geo.voxel_center(geo.unravel(i)), cov, opacity, cls[i]});
    }
    return out;
}

} // namespace occu::splat
