// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/curation/clip.hpp"
#include "occu/curation/icp.hpp"
#include "occu/curation/statistical_filter.hpp"

#include <map>
#include <string>

namespace occu::curation {

struct Separation {
    geom::PointCloud background;
    std::map<std::string, geom::PointCloud> per_object;
};

/// Splits points into per-box sets (inclusive; nearest box center wins on
/// overlap) and background. Points and boxes must share a frame.
Separation separate(const geom::PointCloud &points, const std::vector<geom::OrientedBox> &boxes);

struct AggregateParams {
    FilterParams filter;
    IcpParams icp;
    bool refine = true; // ICP-chain consecutive frames
};

/// Points plus, per point, the world-frame position of the sensor that saw it.
struct AggregatedCloud {
    geom::PointCloud cloud;
    std::vector<Vec3> origins;
    /// Per frame: world-frame correction applied after ego_pose (identity for frame 0).
    std::vector<geom::RigidTransform> corrections;
};

/// Filters each frame's background, moves it to the world frame, refines
/// frame k against frame k-1 with ICP and concatenates. ICP failures are
/// rethrown as StageError("icp", "frame N: ...").
AggregatedCloud aggregate_background(const ScenarioClip &clip, const AggregateParams &params = {});

/// Points of one track from every frame, expressed in the box frame.
/// Origins are the sensor positions in the same frame.
/// Throws InvalidArgument for an unknown track.
AggregatedCloud aggregate_object(const ScenarioClip &clip, const std::string &track_id);

} // namespace occu::curation
