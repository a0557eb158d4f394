// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/curation/clip.hpp"
#include "occu/grid/class_table.hpp"
#include "occu/grid/occupancy_grid.hpp"

namespace occu::curation {

/// Labels every occupied voxel: inside a box gives the box class (nearest
/// center on overlap), otherwise the BEV label under the voxel center.
/// Voxels outside the BEV map, or over an unlabelled cell, get `fallback`.
/// `grid_to_world` maps grid coordinates into the frame of boxes and BEV.
/// The occupied/empty mask is never changed.
grid::SemanticOccupancyGrid hybrid_label(const grid::SemanticOccupancyGrid &grid,
                                         const std::vector<geom::OrientedBox> &boxes,
                                         const BevMap &bev,
                                         const geom::RigidTransform &grid_to_world = {},
                                         ClassId fallback = grid::classes::kGenericObject);

enum class ScenarioKind { Spatial, Temporal, Neither };

const char *to_string(ScenarioKind k);

struct ScenarioSpeeds {
    ScenarioKind kind = ScenarioKind::Neither;
    double v_ego = 0.0;   // m/s
    double v_other = 0.0; // m/s, 0 without tracks
};

/// Spatial iff v_ego > theta_e; Temporal iff v_ego < theta_e and
/// v_other > theta_o. Throws InvalidArgument("cannot estimate speed") for
/// fewer than two frames.
ScenarioSpeeds classify_scenario(const ScenarioClip &clip, double theta_e = 0.5,
                                 double theta_o = 0.5);

} // namespace occu::curation
