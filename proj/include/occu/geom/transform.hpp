// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/common.hpp"
#include "occu/geom/point_cloud.hpp"

#include <Eigen/Geometry>

#include <array>

namespace occu::geom {

/// Proper rigid motion x -> R x + t. Stored as a matrix for speed,
/// serialized as a normalized (w, x, y, z) quaternion.
class RigidTransform {
public:
    RigidTransform() = default;
    RigidTransform(const Mat3 &rotation, const Vec3 &translation);

    static RigidTransform identity() { return {}; }
    static RigidTransform from_translation(const Vec3 &t);
    /// Quaternion given as (w, x, y, z); it is normalized before use.
    static RigidTransform from_quaternion(const std::array<double, 4> &wxyz,
                                          const Vec3 &translation);
    static RigidTransform from_axis_angle(const Vec3 &axis, double angle_rad,
                                          const Vec3 &translation = Vec3::Zero());

    const Mat3 &rotation() const noexcept { return rotation_; }
    const Vec3 &translation() const noexcept { return translation_; }

    /// Normalized quaternion with w >= 0.
    std::array<double, 4> quaternion_wxyz() const;

    Vec3 apply(const Vec3 &p) const { return rotation_ * p + translation_; }
    Vec3 rotate(const Vec3 &v) const { return rotation_ * v; }

    /// (this * other)(x) = this(other(x)).
    RigidTransform operator*(const RigidTransform &other) const;
    RigidTransform inverse() const;

    /// Rotation angle in radians, in [0, pi].
    double rotation_angle() const;

    Eigen::Matrix4d matrix() const;

private:
    Mat3 rotation_ = Mat3::Identity();
    Vec3 translation_ = Vec3::Zero();
};

/// p' = R p + t for every point; attributes carried unchanged.
PointCloud transform_points(const PointCloud &points, const RigidTransform &T);

} // namespace occu::geom
