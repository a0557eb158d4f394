// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/common.hpp"
#include "occu/geom/transform.hpp"

#include <vector>

namespace occu::geom {

/// One beam direction in the sensor frame. Azimuth 0 / elevation 0 is +x,
/// azimuth grows counter-clockwise about +z, elevation grows towards +z.
struct BeamAngle {
    double azimuth;   // rad
    double elevation; // rad
};

Vec3 beam_direction(const BeamAngle &a);

/// Regular elevation x azimuth pattern. Azimuths cover [az_min, az_max)
/// when the span is a full turn, otherwise [az_min, az_max] inclusive.
std::vector<BeamAngle> grid_pattern(double el_min, double el_max, int rows, double az_min,
                                    double az_max, int cols);

struct LidarSensor {
    Vec3 origin = Vec3::Zero();                        // ego frame, m
    RigidTransform orientation;                        // rotation part used: sensor -> ego
    std::vector<BeamAngle> pattern;
    double max_range = 100.0;                          // m
};

class LidarRig {
public:
    explicit LidarRig(std::vector<LidarSensor> sensors);

    const std::vector<LidarSensor> &sensors() const noexcept { return sensors_; }
    std::size_t size() const noexcept { return sensors_.size(); }
    const LidarSensor &operator[](std::size_t i) const { return sensors_.at(i); }

private:
    std::vector<LidarSensor> sensors_;
};

struct Ray {
    Vec3 origin;
    Vec3 dir; // unit
    std::uint32_t sensor;
    std::uint32_t index; // position in the sensor's pattern
    double max_range;
};

/// One ray per pattern entry of each selected sensor, in the world frame.
/// Sensors are emitted in ascending index order. Throws when `sensor_mask`
/// is empty or names an unknown sensor.
std::vector<Ray> rays_world(const LidarRig &rig, const RigidTransform &ego_pose,
                            const std::vector<std::size_t> &sensor_mask);

} // namespace occu::geom
