// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/geom/camera.hpp"

namespace occu::geom {

CameraModel::CameraModel(Params params) : p_(std::move(params)) {
    if (!(p_.fx > 0.0) || !(p_.fy > 0.0))
        throw InvalidArgument("camera '" + p_.name + "': fx and fy must be positive");
    if (p_.width < 1 || p_.height < 1)
        throw InvalidArgument("camera '" + p_.name + "': width and height must be >= 1");
    if (!(p_.z_near > 0.0)) throw InvalidArgument("camera '" + p_.name + "': z_near must be > 0");
}

Vec2 CameraModel::distort(const Vec2 &xy) const {
    const auto &d = p_.distortion;
    const double x = xy.x(), y = xy.y();
    const double r2 = x * x + y * y;
    const double radial = 1.0 + r2 * (d.k1 + r2 * (d.k2 + r2 * d.k3));
    return {x * radial + 2.0 * d.p1 * x * y + d.p2 * (r2 + 2.0 * x * x),
            y * radial + d.p1 * (r2 + 2.0 * y * y) + 2.0 * d.p2 * x * y};
}

Vec2 CameraModel::project_camera(const Vec3 &x_cam) const {
    Vec2 xy;
    if (p_.kind == ProjectionKind::Pinhole)
        xy = {x_cam.x() / x_cam.z(), x_cam.y() / x_cam.z()};
    else
        xy = {x_cam.x(), x_cam.y()};
    if (!p_.distortion.is_zero()) xy = distort(xy);
    return {p_.fx * xy.x() + p_.cx, p_.fy * xy.y() + p_.cy};
}

std::optional<PixelProjection> CameraModel::project(const Vec3 &x_world) const {
    const Vec3 xc = p_.world_to_camera.apply(x_world);
    if (!(xc.z() > p_.z_near)) return std::nullopt;
    return PixelProjection{project_camera(xc), xc.z()};
}

Eigen::Matrix<double, 2, 3> CameraModel::jacobian_camera(const Vec3 &x_cam) const {
    Eigen::Matrix<double, 2, 3> P;
    double x, y;
    if (p_.kind == ProjectionKind::Pinhole) {
        const double iz = 1.0 / x_cam.z();
        x = x_cam.x() * iz;
        y = x_cam.y() * iz;
        P << iz, 0.0, -x * iz, 0.0, iz, -y * iz;
    } else {
        x = x_cam.x();
        y = x_cam.y();
        P << 1.0, 0.0, 0.0, 0.0, 1.0, 0.0;
    }

    Mat2 D = Mat2::Identity();
    const auto &d = p_.distortion;
    if (!d.is_zero()) {
        const double r2 = x * x + y * y;
        const double L = 1.0 + r2 * (d.k1 + r2 * (d.k2 + r2 * d.k3));
        const double dL = d.k1 + r2 * (2.0 * d.k2 + 3.0 * d.k3 * r2); // dL / d(r^2)
        D(0, 0) = L + 2.0 * x * x * dL + 2.0 * d.p1 * y + 6.0 * d.p2 * x;
        D(0, 1) = 2.0 * x * y * dL + 2.0 * d.p1 * x + 2.0 * d.p2 * y;
        D(1, 0) = 2.0 * x * y * dL + 2.0 * d.p1 * x + 2.0 * d.p2 * y;
        D(1, 1) = L + 2.0 * y * y * dL + 6.0 * d.p1 * y + 2.0 * d.p2 * x;
    }
    Eigen::Matrix<double, 2, 3> J = D * P;
    J.row(0) *= p_.fx;
    J.row(1) *= p_.fy;
    return J;
}

} // namespace occu::geom
