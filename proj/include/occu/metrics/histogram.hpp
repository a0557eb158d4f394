// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/point_cloud.hpp"

#include <vector>

namespace occu::metrics {

struct BevBinning {
    int nx = 100, ny = 100;
    double x_min = -50.0, x_max = 50.0;
    double y_min = -50.0, y_max = 50.0;

    void validate() const;
};

/// Normalized 2D histogram of point (x, y); cell (i, j) is mass[j * nx + i].
struct BevHistogram {
    BevBinning binning;
    std::vector<double> mass;
    std::size_t dropped = 0; // points outside the binning range
    bool empty = true;       // no point landed in range; mass is all zero
};

BevHistogram bev_histogram(const geom::PointCloud &points, const BevBinning &binning = {});

} // namespace occu::metrics
