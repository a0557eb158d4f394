// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/geom/box.hpp"

#include <cmath>

namespace occu::geom {

OrientedBox::OrientedBox(const Vec3 &center, const Mat3 &rotation, const Vec3 &half_extents,
                         ClassId class_id, std::string track_id)
    : center_(center), rotation_(rotation), half_extents_(half_extents), class_id_(class_id),
      track_id_(std::move(track_id)) {
    if (!(half_extents_.minCoeff() > 0.0) || !half_extents_.allFinite())
        throw InvalidArgument("OrientedBox: half extents must be positive");
    // Validates orthonormality.
    (void)RigidTransform(rotation_, center_);
}

bool OrientedBox::contains(const Vec3 &p) const {
    const Vec3 local = to_local(p);
    // Slack of a few ulps at the faces keeps boundary points inclusive after
    // the rotation round-off.
    constexpr double kSlack = 1e-9;
    return std::abs(local.x()) <= half_extents_.x() + kSlack &&
           std::abs(local.y()) <= half_extents_.y() + kSlack &&
           std::abs(local.z()) <= half_extents_.z() + kSlack;
}

OrientedBox OrientedBox::transformed(const RigidTransform &T) const {
    return OrientedBox(T.apply(center_), T.rotation() * rotation_, half_extents_, class_id_,
                       track_id_);
}

PointCloud to_box_frame(const PointCloud &points, const OrientedBox &box) {
    PointCloud out = points;
    for (auto &p : out.xyz) p = box.to_local(p);
    return out;
}

} // namespace occu::geom
