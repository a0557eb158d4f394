// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/curation/aggregate.hpp"
#include "occu/curation/densify.hpp"
#include "occu/curation/labeling.hpp"

namespace occu::curation {

struct CurationConfig {
    AggregateParams aggregate;
    DensifyParams densify;      // voxel <= 0 selects half the grid voxel
    bool densify_enabled = true;
    grid::GridGeometry geometry;
    int reference_frame = -1;   // -1 selects the middle frame
    ClassId fallback_class = grid::classes::kGenericObject;
};

struct CurationStats {
    std::size_t reference_frame = 0;
    std::size_t background_points = 0;
    std::size_t background_densified = 0;
    std::size_t object_points = 0;
    std::size_t object_densified = 0;
    std::size_t objects_placed = 0;
    std::size_t out_of_bounds = 0;
    std::vector<std::string> warnings;
};

struct CurationResult {
    grid::SemanticOccupancyGrid grid; // in the reference frame's ego frame
    CurationStats stats;
};

/// Full pipeline: separate, filter and aggregate background and objects,
/// densify each, place objects at the reference frame's boxes, voxelize in
/// the reference ego frame and label. Failures are StageErrors naming the
/// stage.
CurationResult curate(const ScenarioClip &clip, const CurationConfig &config = {});

} // namespace occu::curation
