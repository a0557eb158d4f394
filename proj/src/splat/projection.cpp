// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/splat/projection.hpp"

#include <Eigen/Cholesky>

#include <cmath>

namespace occu::splat {

void UtParams::validate() const {
    if (!(3.0 + lambda() > 0.0))
        throw InvalidArgument("ut: 3 + lambda must be positive (alpha, kappa)");
}

UtParams::Weights UtParams::weights() const {
    const double l = lambda();
    Weights w;
    w.mean.fill(1.0 / (2.0 * (l + 3.0)));
    w.cov = w.mean;
    w.mean[0] = l / (l + 3.0);
    w.cov[0] = w.mean[0] + (1.0 - alpha * alpha + beta);
    return w;
}

bool ellipse_hits_image(const Projected2D &p, const geom::CameraModel &cam, double cull_q) {
    const double rx = std::sqrt(std::max(cull_q * p.cov(0, 0), 0.0));
    const double ry = std::sqrt(std::max(cull_q * p.cov(1, 1), 0.0));
    if (!std::isfinite(rx) || !std::isfinite(ry) || !p.mean.allFinite()) return false;
    return std::ceil(p.mean.x() - rx) <= cam.width() - 1 && std::floor(p.mean.x() + rx) >= 0 &&
           std::ceil(p.mean.y() - ry) <= cam.height() - 1 && std::floor(p.mean.y() + ry) >= 0;
}

std::optional<Projected2D> project_ewa(const GaussianPrimitive &g, const geom::CameraModel &cam,
                                       double cull_q) {
    const auto &T = cam.world_to_camera();
    const Vec3 xc = T.apply(g.mu);
    if (!(xc.z() > cam.z_near())) return std::nullopt;
    const auto J = cam.jacobian_camera(xc);
    const Eigen::Matrix<double, 2, 3> JW = J * T.rotation();
    Projected2D p{cam.project_camera(xc), JW * g.sigma * JW.transpose(), xc.z()};
    p.cov = 0.5 * (p.cov + p.cov.transpose()).eval();
    if (!ellipse_hits_image(p, cam, cull_q)) return std::nullopt;
    return p;
}

std::optional<Projected2D> project_ut(const GaussianPrimitive &g, const geom::CameraModel &cam,
                                      const UtParams &ut, double cull_q) {
    ut.validate();
    Eigen::LLT<Mat3> llt(g.sigma);
    if (llt.info() != Eigen::Success)
        throw InvalidArgument("project_ut: covariance is not positive definite");
    const Mat3 L = llt.matrixL();
    const double spread = std::sqrt(3.0 + ut.lambda());
    const auto &T = cam.world_to_camera();

    std::array<Vec2, 7> v;
    const Vec3 c0 = T.apply(g.mu);
    if (!(c0.z() > cam.z_near())) return std::nullopt;
    v[0] = cam.project_camera(c0);
    for (int k = 0; k < 3; ++k) {
        for (int s = 0; s < 2; ++s) {
            const Vec3 x = g.mu + (s == 0 ? spread : -spread) * L.col(k);
            const Vec3 xc = T.apply(x);
            if (!(xc.z() > cam.z_near())) return std::nullopt;
            v[1 + k + 3 * s] = cam.project_camera(xc);
        }
    }
    const auto w = ut.weights();
    Vec2 mean = Vec2::Zero();
    for (int k = 0; k < 7; ++k) mean += w.mean[k] * v[k];
    Mat2 cov = Mat2::Zero();
    for (int k = 0; k < 7; ++k) {
        const Vec2 d = v[k] - mean;
        cov += w.cov[k] * d * d.transpose();
    }
    Projected2D p{mean, 0.5 * (cov + cov.transpose()), c0.z()};
    if (!ellipse_hits_image(p, cam, cull_q)) return std::nullopt;
    return p;
}

} // namespace occu::splat
