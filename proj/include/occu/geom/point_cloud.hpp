// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/common.hpp"

#include <vector>

namespace occu::geom {

/// Unordered 3D points with optional per-point attributes. An attribute
/// vector is either empty (absent) or has exactly one entry per point.
struct PointCloud {
    std::vector<Vec3> xyz;
    std::vector<float> intensity;
    std::vector<ClassId> label;

    std::size_t size() const noexcept { return xyz.size(); }
    bool empty() const noexcept { return xyz.empty(); }
    bool has_intensity() const noexcept { return !intensity.empty(); }
    bool has_label() const noexcept { return !label.empty(); }

    /// Appends point i of `other`, carrying attributes present in *this.
    void push_from(const PointCloud &other, std::size_t i);
    void append(const PointCloud &other);
    void reserve(std::size_t n);

    /// Throws InvalidArgument when an attribute length disagrees with xyz.
    void validate() const;
};

/// Returns a cloud holding only the points whose index is in `keep`, with
/// matching attributes.
PointCloud select(const PointCloud &cloud, const std::vector<std::size_t> &keep);

} // namespace occu::geom
