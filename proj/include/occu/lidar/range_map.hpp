// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/lidar_rig.hpp"

#include <vector>

namespace occu::lidar {

/// Elevation x azimuth image of depths plus per-cell histogram channels.
/// depth is row-major; hist is channel-major (c, row, col).
struct RangeMap {
    int rows = 64, cols = 1024, channels = 64;
    double el_min = 0.0, el_max = 0.0; // rad, ego frame
    std::vector<double> depth;          // 0 = no return
    std::vector<double> hist;

    RangeMap() = default;
    RangeMap(int rows, int cols, int channels, double el_min, double el_max);

    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols + c; }
    double h(int ch, int r, int c) const {
        return hist[(static_cast<std::size_t>(ch) * rows + r) * cols + c];
    }
    double &h(int ch, int r, int c) {
        return hist[(static_cast<std::size_t>(ch) * rows + r) * cols + c];
    }
    /// Row and column for an ego-frame direction.
    std::pair<int, int> cell(const Vec3 &dir_ego) const;
};

/// Elevation bounds over every pattern direction of every sensor, in the
/// ego frame.
std::pair<double, double> rig_elevation_bounds(const geom::LidarRig &rig);

struct RangeReturn {
    Vec3 dir_ego;           // unit
    double depth;           // m, > 0
    const double *hist;     // `channels` values, may be null
};

/// Bins returns by (elevation, azimuth); the nearest depth wins each cell
/// and brings its histogram along.
RangeMap range_project(const std::vector<RangeReturn> &returns, const geom::LidarRig &rig,
                       int rows = 64, int cols = 1024, int channels = 64);

struct SmoothnessResult {
    double value = 0.0;
    std::size_t pairs = 0;
    bool warning = false; // no valid pairs
};

/// Mean over azimuth-neighbour pairs (with wrap-around) of
/// |d(c+1) - d(c)| exp(-|h(c+1) - h(c)|_1). Pairs where neither cell has a
/// return never count; with exclude_drops, pairs touching one are skipped.
SmoothnessResult smoothness_loss(const RangeMap &rmap, bool exclude_drops = true);

} // namespace occu::lidar
