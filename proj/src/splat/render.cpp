// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/splat/render.hpp"

namespace occu::splat {

std::vector<RenderedMaps> render_views(const grid::SemanticOccupancyGrid &grid,
                                       const std::vector<geom::CameraModel> &cams,
                                       const RenderOptions &options) {
    if (cams.empty()) throw InvalidArgument("render_views: no cameras");
    const auto gaussians = occupancy_to_gaussians(grid, options.scale, options.opacity);
    std::vector<RenderedMaps> out;
    out.reserve(cams.size());
    for (const auto &cam : cams) out.push_back(rasterize(gaussians, cam, options.raster));
    return out;
}

} // namespace occu::splat
