// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/geom/transform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace occu::geom {

void PointCloud::push_from(const PointCloud &other, std::size_t i) {
    xyz.push_back(other.xyz[i]);
    if (other.has_intensity()) intensity.push_back(other.intensity[i]);
    if (other.has_label()) label.push_back(other.label[i]);
}

void PointCloud::append(const PointCloud &other) {
    const bool had_points = !xyz.empty();
    if (had_points && has_intensity() != other.has_intensity() && !other.empty())
        throw InvalidArgument("append: intensity attribute mismatch");
    if (had_points && has_label() != other.has_label() && !other.empty())
        throw InvalidArgument("append: label attribute mismatch");
    xyz.insert(xyz.end(), other.xyz.begin(), other.xyz.end());
    intensity.insert(intensity.end(), other.intensity.begin(), other.intensity.end());
    label.insert(label.end(), other.label.begin(), other.label.end());
}

void PointCloud::reserve(std::size_t n) {
    xyz.reserve(n);
}

void PointCloud::validate() const {
    if (has_intensity() && intensity.size() != xyz.size())
        throw InvalidArgument("point cloud: intensity has " +
                              std::to_string(intensity.size()) + " entries for " +
                              std::to_string(xyz.size()) + " points");
    if (has_label() && label.size() != xyz.size())
        throw InvalidArgument("point cloud: label has " + std::to_string(label.size()) +
                              " entries for " + std::to_string(xyz.size()) + " points");
}

PointCloud select(const PointCloud &cloud, const std::vector<std::size_t> &keep) {
    PointCloud out;
    out.xyz.reserve(keep.size());
    for (auto i : keep) out.push_from(cloud, i);
    return out;
}

RigidTransform::RigidTransform(const Mat3 &rotation, const Vec3 &translation)
    : rotation_(rotation), translation_(translation) {
    const double ortho = (rotation_ * rotation_.transpose() - Mat3::Identity()).norm();
    if (!(ortho < 1e-6) || !(rotation_.determinant() > 0.0))
        throw InvalidArgument("RigidTransform: rotation is not a proper orthonormal matrix");
}

RigidTransform RigidTransform::from_translation(const Vec3 &t) {
    RigidTransform T;
    T.translation_ = t;
    return T;
}

RigidTransform RigidTransform::from_quaternion(const std::array<double, 4> &wxyz,
                                               const Vec3 &translation) {
    Eigen::Quaterniond q(wxyz[0], wxyz[1], wxyz[2], wxyz[3]);
    const double n = q.norm();
    if (!(n > 1e-12) || !std::isfinite(n))
        throw InvalidArgument("RigidTransform: zero or non-finite quaternion");
    q.coeffs() /= n;
    RigidTransform T;
    T.rotation_ = q.toRotationMatrix();
    T.translation_ = translation;
    return T;
}

RigidTransform RigidTransform::from_axis_angle(const Vec3 &axis, double angle_rad,
                                               const Vec3 &translation) {
    const double n = axis.norm();
    if (!(n > 0.0)) throw InvalidArgument("RigidTransform: zero rotation axis");
    RigidTransform T;
    T.rotation_ = Eigen::AngleAxisd(angle_rad, axis / n).toRotationMatrix();
    T.translation_ = translation;
    return T;
}

std::array<double, 4> RigidTransform::quaternion_wxyz() const {
    Eigen::Quaterniond q(rotation_);
    q.normalize();
    if (q.w() < 0.0) q.coeffs() *= -1.0;
    return {q.w(), q.x(), q.y(), q.z()};
}

RigidTransform RigidTransform::operator*(const RigidTransform &other) const {
    RigidTransform T;
    T.rotation_ = rotation_ * other.rotation_;
    T.translation_ = rotation_ * other.translation_ + translation_;
    return T;
}

RigidTransform RigidTransform::inverse() const {
    RigidTransform T;
    T.rotation_ = rotation_.transpose();
    T.translation_ = -(T.rotation_ * translation_);
    return T;
}

double RigidTransform::rotation_angle() const {
    const double c = std::clamp((rotation_.trace() - 1.0) / 2.0, -1.0, 1.0);
    return std::acos(c);
}

Eigen::Matrix4d RigidTransform::matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.topLeftCorner<3, 3>() = rotation_;
    m.topRightCorner<3, 1>() = translation_;
    return m;
}

PointCloud transform_points(const PointCloud &points, const RigidTransform &T) {
    PointCloud out = points;
    for (auto &p : out.xyz) p = T.apply(p);
    return out;
}

} // namespace occu::geom
