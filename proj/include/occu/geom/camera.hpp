// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/common.hpp"
#include "occu/geom/transform.hpp"

#include <optional>
#include <string>

namespace occu::geom {

/// Brown-Conrady radial (k1, k2, k3) and tangential (p1, p2) coefficients.
struct Distortion {
    double k1 = 0.0, k2 = 0.0, k3 = 0.0;
    double p1 = 0.0, p2 = 0.0;

    bool is_zero() const noexcept {
        return k1 == 0.0 && k2 == 0.0 && k3 == 0.0 && p1 == 0.0 && p2 == 0.0;
    }
};

enum class ProjectionKind {
    Pinhole,
    /// u = fx * x_cam + cx. Affine when distortion is zero; used to check
    /// projection back ends against closed forms.
    Orthographic,
};

struct PixelProjection {
    Vec2 uv;
    double depth; // camera-frame z
};

class CameraModel {
public:
    struct Params {
        std::string name = "cam";
        double fx = 1.0, fy = 1.0, cx = 0.0, cy = 0.0;
        int width = 1, height = 1;
        Distortion distortion;
        RigidTransform world_to_camera;
        ProjectionKind kind = ProjectionKind::Pinhole;
        double z_near = 1e-4;
    };

    explicit CameraModel(Params params);

    const Params &params() const noexcept { return p_; }
    const std::string &name() const noexcept { return p_.name; }
    int width() const noexcept { return p_.width; }
    int height() const noexcept { return p_.height; }
    double z_near() const noexcept { return p_.z_near; }
    const RigidTransform &world_to_camera() const noexcept { return p_.world_to_camera; }

    /// World point -> pixel. nullopt when camera-frame z <= z_near.
    std::optional<PixelProjection> project(const Vec3 &x_world) const;

    /// Camera-frame point -> pixel, no near-plane test.
    Vec2 project_camera(const Vec3 &x_cam) const;

    /// d(u, v) / d(x_cam) of project_camera, including distortion.
    Eigen::Matrix<double, 2, 3> jacobian_camera(const Vec3 &x_cam) const;

    /// Applies the distortion polynomial to normalized image coordinates.
    Vec2 distort(const Vec2 &xy) const;

private:
    Params p_;
};

} // namespace occu::geom
