// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/splat/rasterizer.hpp"

namespace occu::splat {

struct RenderOptions {
    double scale = 0.01;
    double opacity = 0.99;
    RasterOptions raster;
};

/// Renders the grid into every camera.
std::vector<RenderedMaps> render_views(const grid::SemanticOccupancyGrid &grid,
                                       const std::vector<geom::CameraModel> &cams,
                                       const RenderOptions &options = {});

} // namespace occu::splat
