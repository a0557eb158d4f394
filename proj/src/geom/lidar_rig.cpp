// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/geom/lidar_rig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace occu::geom {

Vec3 beam_direction(const BeamAngle &a) {
    const double ce = std::cos(a.elevation);
    return {ce * std::cos(a.azimuth), ce * std::sin(a.azimuth), std::sin(a.elevation)};
}

std::vector<BeamAngle> grid_pattern(double el_min, double el_max, int rows, double az_min,
                                    double az_max, int cols) {
    if (rows < 1 || cols < 1) throw InvalidArgument("grid_pattern: rows and cols must be >= 1");
    const bool full_turn = std::abs((az_max - az_min) - 2.0 * std::numbers::pi) < 1e-9;
    std::vector<BeamAngle> out;
    out.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        const double el = rows == 1 ? el_min : el_min + (el_max - el_min) * r / (rows - 1);
        for (int c = 0; c < cols; ++c) {
            double az;
            if (cols == 1)
                az = az_min;
            else if (full_turn)
                az = az_min + (az_max - az_min) * c / cols;
            else
                az = az_min + (az_max - az_min) * c / (cols - 1);
            out.push_back({az, el});
        }
    }
    return out;
}

LidarRig::LidarRig(std::vector<LidarSensor> sensors) : sensors_(std::move(sensors)) {
    if (sensors_.empty()) throw InvalidArgument("lidar rig: at least one sensor required");
    for (std::size_t i = 0; i < sensors_.size(); ++i) {
        if (!(sensors_[i].max_range > 0.0))
            throw InvalidArgument("lidar rig: sensor " + std::to_string(i) +
                                  " max_range must be > 0");
    }
}

std::vector<Ray> rays_world(const LidarRig &rig, const RigidTransform &ego_pose,
                            const std::vector<std::size_t> &sensor_mask) {
    if (sensor_mask.empty()) throw InvalidArgument("no sensor selected");
    std::vector<std::size_t> mask = sensor_mask;
    std::sort(mask.begin(), mask.end());
    mask.erase(std::unique(mask.begin(), mask.end()), mask.end());

    std::size_t total = 0;
    for (auto s : mask) {
        if (s >= rig.size())
            throw InvalidArgument("unknown sensor index " + std::to_string(s));
        total += rig[s].pattern.size();
    }

    std::vector<Ray> rays;
    rays.reserve(total);
    for (auto s : mask) {
        const auto &sensor = rig[s];
        const Mat3 R = ego_pose.rotation() * sensor.orientation.rotation();
        const Vec3 o = ego_pose.apply(sensor.origin);
        for (std::size_t k = 0; k < sensor.pattern.size(); ++k) {
            Vec3 v = R * beam_direction(sensor.pattern[k]);
            v.normalize();
            rays.push_back({o, v, static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(k),
                            sensor.max_range});
        }
    }
    return rays;
}

} // namespace occu::geom
