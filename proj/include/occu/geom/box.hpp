// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/common.hpp"
#include "occu/geom/point_cloud.hpp"
#include "occu/geom/transform.hpp"

#include <string>

namespace occu::geom {

/// Annotated object box: center, orientation and strictly positive half
/// extents. `rotation` maps box-local axes into the enclosing frame.
class OrientedBox {
public:
    OrientedBox(const Vec3 &center, const Mat3 &rotation, const Vec3 &half_extents,
                ClassId class_id, std::string track_id);

    const Vec3 &center() const noexcept { return center_; }
    const Mat3 &rotation() const noexcept { return rotation_; }
    const Vec3 &half_extents() const noexcept { return half_extents_; }
    ClassId class_id() const noexcept { return class_id_; }
    const std::string &track_id() const noexcept { return track_id_; }

    /// Box-local -> enclosing frame.
    RigidTransform pose() const { return RigidTransform(rotation_, center_); }

    Vec3 to_local(const Vec3 &p) const { return rotation_.transpose() * (p - center_); }

    /// Inclusive containment test.
    bool contains(const Vec3 &p) const;

    /// Returns the box expressed in another frame: T maps this box's frame
    /// into the new one.
    OrientedBox transformed(const RigidTransform &T) const;

private:
    Vec3 center_;
    Mat3 rotation_;
    Vec3 half_extents_;
    ClassId class_id_;
    std::string track_id_;
};

/// p_local = R_obj^T (p - c_obj) for every point.
PointCloud to_box_frame(const PointCloud &points, const OrientedBox &box);

} // namespace occu::geom
