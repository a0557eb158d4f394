// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/curation/clip.hpp"
#include "occu/geom/camera.hpp"
#include "occu/geom/lidar_rig.hpp"
#include "occu/grid/occupancy_grid.hpp"

#include <optional>
#include <string>

namespace occu::synth {

/// A generated scene: ground-truth grid, sensors and, when the scene is a
/// clip, the raw frames.
struct Scene {
    std::string name;
    grid::SemanticOccupancyGrid ground_truth;
    geom::LidarRig rig;
    geom::RigidTransform ego_pose; // of the ground-truth grid's frame
    std::vector<geom::CameraModel> cameras;
    curation::ScenarioClip clip;
};

struct WallParams {
    double distance = 20.0;   // near face, m along +x
    double thickness = 0.5;
    double half_width = 20.0; // along y
    grid::GridGeometry geometry;
    std::size_t rows = 64, cols = 1024;
    double max_range = 60.0;
};

/// Axis-aligned slab whose near face is the plane x = distance, seen by a
/// forward fan (azimuth +-30 deg, elevation +-8 deg) from the origin.
Scene make_wall(const WallParams &params = {});

struct BoxStreetParams {
    std::uint64_t seed = 7;
    grid::GridGeometry geometry;
    int cars = 8;
    int buildings = 10;
    std::size_t rows = 64, cols = 1024;
    double max_range = 60.0;
    double sensor_height = 1.8;
};

/// Ground (road, road lines, sidewalks), box buildings and parked cars on
/// the default grid, with a spinning LiDAR above the origin.
Scene make_box_street(const BoxStreetParams &params = {});

struct MovingBoxParams {
    std::uint64_t seed = 1;
    int frames = 5;
    double dt = 0.5;      // s
    double speed = 5.0;   // m/s along +x
    double spacing = 0.1; // surface sampling lattice, m
    double noise = 0.005; // per-axis Gaussian, m
    int outliers = 20;
};

/// Static ego, a car driving past at constant velocity and a labelled ground
/// plane. Sweeps sample every surface point visible from the sensor. The
/// ground truth is the full car surface at the middle frame plus the
/// ground, labelled with the hybrid rule.
Scene make_moving_box(const MovingBoxParams &params = {});

/// First occupied voxel along each ray by voxel traversal; hit depth is the
/// ray's entry distance into that voxel, or nullopt within max_range.
std::optional<double> cast_ray(const grid::SemanticOccupancyGrid &grid, const geom::Ray &ray);

/// Camera at `position` looking along +x of `heading` (yaw, rad), z up.
geom::CameraModel forward_camera(const Vec3 &position, double yaw, int width = 640,
                                 int height = 360, double focal = 500.0,
                                 const geom::Distortion &distortion = {});

} // namespace occu::synth
