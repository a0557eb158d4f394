// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/common.hpp"
#include "occu/geom/box.hpp"
#include "occu/geom/point_cloud.hpp"
#include "occu/geom/transform.hpp"

#include <optional>
#include <vector>

namespace occu::curation {

/// Raster of background class ids over the world xy plane. Cell (i, j)
/// covers [origin + (i, j) * cell_size, origin + (i + 1, j + 1) * cell_size);
/// i runs along x and is the fastest index: labels[j * rows + i].
struct BevMap {
    int rows = 0; // cells along x (Hb)
    int cols = 0; // cells along y (Wb)
    double cell_size = 0.25;
    Vec2 origin = Vec2::Zero();
    std::vector<ClassId> labels;

    void validate() const;
    /// Label under world (x, y); nullopt outside the map.
    std::optional<ClassId> label_at(double x, double y) const;
};

struct Frame {
    double timestamp = 0.0;
    geom::RigidTransform ego_pose; // ego -> world
    geom::PointCloud sweep;        // ego frame
    Vec3 sensor_origin = Vec3::Zero(); // ego frame, used for TSDF carving
    std::vector<geom::OrientedBox> boxes; // world frame
};

struct ScenarioClip {
    std::vector<Frame> frames;
    BevMap bev;

    /// Strictly increasing timestamps, valid sweeps, one box per track per frame.
    void validate() const;
    /// Box of `track_id` in frame `f`, or nullptr.
    const geom::OrientedBox *find_box(std::size_t f, const std::string &track_id) const;
    /// Sorted, de-duplicated track ids across all frames.
    std::vector<std::string> track_ids() const;
};

} // namespace occu::curation
