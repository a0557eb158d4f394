// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/curation/aggregate.hpp"

#include <limits>

namespace occu::curation {

Separation separate(const geom::PointCloud &points, const std::vector<geom::OrientedBox> &boxes) {
    points.validate();
    Separation out;
    for (const auto &b : boxes) out.per_object[b.track_id()];
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Vec3 &p = points.xyz[i];
        const geom::OrientedBox *best = nullptr;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (const auto &b : boxes) {
            if (!b.contains(p)) continue;
            const double d2 = (p - b.center()).squaredNorm();
            if (d2 < best_d2) {
                best_d2 = d2;
                best = &b;
            }
        }
        if (best)
            out.per_object[best->track_id()].push_from(points, i);
        else
            out.background.push_from(points, i);
    }
    return out;
}

} // namespace occu::curation
