// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/metrics/histogram.hpp"

#include <cmath>

namespace occu::metrics {

void BevBinning::validate() const {
    if (nx < 1 || ny < 1) throw InvalidArgument("bev binning: cell counts must be >= 1");
    if (!(x_max > x_min) || !(y_max > y_min))
        throw InvalidArgument("bev binning: empty extent");
}

BevHistogram bev_histogram(const geom::PointCloud &points, const BevBinning &binning) {
    binning.validate();
    BevHistogram h;
    h.binning = binning;
    h.mass.assign(static_cast<std::size_t>(binning.nx) * binning.ny, 0.0);
    std::size_t count = 0;
    for (const auto &p : points.xyz) {
        const double fx = std::floor((p.x() - binning.x_min) / (binning.x_max - binning.x_min) * binning.nx);
        const double fy = std::floor((p.y() - binning.y_min) / (binning.y_max - binning.y_min) * binning.ny);
        if (!(fx >= 0 && fy >= 0 && fx < binning.nx && fy < binning.ny)) {
            ++h.dropped;
            continue;
        }
        h.mass[static_cast<std::size_t>(fy) * binning.nx + static_cast<std::size_t>(fx)] += 1.0;
        ++count;
    }
    if (count > 0) {
        h.empty = false;
        for (auto &m : h.mass) m /= static_cast<double>(count);
    }
    return h;
}

} // namespace occu::metrics
