// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/lidar/range_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace occu::lidar {

RangeMap::RangeMap(int rows_, int cols_, int channels_, double el_min_, double el_max_)
    : rows(rows_), cols(cols_), channels(channels_), el_min(el_min_), el_max(el_max_) {
    if (rows < 1 || cols < 2) throw InvalidArgument("range map: need rows >= 1 and cols >= 2");
    if (channels < 0) throw InvalidArgument("range map: channels must be >= 0");
    depth.assign(static_cast<std::size_t>(rows) * cols, 0.0);
    hist.assign(static_cast<std::size_t>(channels) * rows * cols, 0.0);
}

std::pair<int, int> RangeMap::cell(const Vec3 &d) const {
    const double el = std::asin(std::clamp(d.z() / d.norm(), -1.0, 1.0));
    const double az = std::atan2(d.y(), d.x());
    const double span = el_max - el_min;
    int r = span > 0.0 ? static_cast<int>(std::floor((el - el_min) / span * rows)) : rows / 2;
    r = std::clamp(r, 0, rows - 1);
    int c = static_cast<int>(std::floor((az + std::numbers::pi) / (2 * std::numbers::pi) * cols));
    c = std::clamp(c, 0, cols - 1);
    return {r, c};
}

std::pair<double, double> rig_elevation_bounds(const geom::LidarRig &rig) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto &s : rig.sensors())
        for (const auto &b : s.pattern) {
            const Vec3 d = s.orientation.rotate(geom::beam_direction(b));
            const double el = std::asin(std::clamp(d.z(), -1.0, 1.0));
            lo = std::min(lo, el);
            hi = std::max(hi, el);
        }
    if (!(hi >= lo)) return {0.0, 0.0};
    return {lo, hi};
}

RangeMap range_project(const std::vector<RangeReturn> &returns, const geom::LidarRig &rig,
                       int rows, int cols, int channels) {
    const auto [lo, hi] = rig_elevation_bounds(rig);
    RangeMap m(rows, cols, channels, lo, hi);
    for (const auto &ret : returns) {
        if (!(ret.depth > 0.0)) continue;
        const auto [r, c] = m.cell(ret.dir_ego);
        double &d = m.depth[m.index(r, c)];
        if (d != 0.0 && d <= ret.depth) continue;
        d = ret.depth;
        for (int ch = 0; ch < channels; ++ch) m.h(ch, r, c) = ret.hist ? ret.hist[ch] : 0.0;
    }
    return m;
}

SmoothnessResult smoothness_loss(const RangeMap &rmap, bool exclude_drops) {
    SmoothnessResult res;
    double sum = 0.0;
    for (int r = 0; r < rmap.rows; ++r)
        for (int c = 0; c < rmap.cols; ++c) {
            const int n = (c + 1) % rmap.cols;
            const double d0 = rmap.depth[rmap.index(r, c)], d1 = rmap.depth[rmap.index(r, n)];
            // Pairs without any return carry no measurement either way.
            if (d0 <= 0.0 && d1 <= 0.0) continue;
            if (exclude_drops && (d0 <= 0.0 || d1 <= 0.0)) continue;
            double dh = 0.0;
            for (int ch = 0; ch < rmap.channels; ++ch)
                dh += std::abs(rmap.h(ch, r, n) - rmap.h(ch, r, c));
            sum += std::abs(d1 - d0) * std::exp(-dh);
            ++res.pairs;
        }
    if (res.pairs == 0) {
        res.warning = true;
        return res;
    }
    res.value = sum / static_cast<double>(res.pairs);
    return res;
}

} // namespace occu::lidar
