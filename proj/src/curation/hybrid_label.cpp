// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/curation/labeling.hpp"

#include "occu/parallel.hpp"

#include <limits>

namespace occu::curation {

grid::SemanticOccupancyGrid hybrid_label(const grid::SemanticOccupancyGrid &grid,
                                         const std::vector<geom::OrientedBox> &boxes,
                                         const BevMap &bev,
                                         const geom::RigidTransform &grid_to_world,
                                         ClassId fallback) {
    const auto &geo = grid.geometry();
    std::vector<ClassId> out(grid.classes().size(), 0);
    const auto &in = grid.classes();
    parallel_for(in.size(), 4096, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            if (in[i] == 0) continue;
            const Vec3 p = grid_to_world.apply(geo.voxel_center(geo.unravel(i)));
            const geom::OrientedBox *best = nullptr;
            double best_d2 = std::numeric_limits<double>::infinity();
            for (const auto &box : boxes) {
                if (!box.contains(p)) continue;
                const double d2 = (p - box.center()).squaredNorm();
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = &box;
                }
            }
            if (best) {
                out[i] = best->class_id();
                continue;
            }
            const auto label = bev.labels.empty() ? std::nullopt : bev.label_at(p.x(), p.y());
            out[i] = (label && *label != 0) ? *label : fallback;
        }
    });
    return grid::SemanticOccupancyGrid(geo, std::move(out));
}

} // namespace occu::curation
