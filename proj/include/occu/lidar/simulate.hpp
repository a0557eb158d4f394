// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/point_cloud.hpp"
#include "occu/lidar/embedding.hpp"
#include "occu/lidar/heads.hpp"
#include "occu/lidar/range_map.hpp"
#include "occu/lidar/sampling.hpp"
#include "occu/lidar/volume_render.hpp"

#include <memory>

namespace occu::lidar {

struct LidarConfig {
    SamplingParams sampling;
    VolumeRenderParams render;
    std::uint64_t seed = 0;
    int fourier_frequencies = 4;
    int range_rows = 64;
    int range_cols = 1024;
};

struct RayResult {
    std::uint32_t sensor = 0;
    std::uint32_t index = 0;
    Vec3 origin = Vec3::Zero();
    Vec3 dir = Vec3::UnitX();
    double depth = 0.0;
    bool dropped = true;
    bool dropped_by_prior = false;
    ClassId class_id = 0;
    double cos_incidence = 1.0;
    HeadOutput head;
    std::vector<double> hist; // kHistBins
};

struct SimulationResult {
    std::vector<RayResult> rays;     // every simulated ray, in rays_world order
    geom::PointCloud points;         // non-dropped rays: xyz, intensity, label
    std::vector<float> drop_prob;    // per output point
    std::vector<std::uint32_t> sensor_id, ray_id;
    RangeMap range_map;
    std::size_t dropped_by_prior = 0, dropped_by_render = 0;
};

/// Prior sampling, field evaluation, volume rendering and heads for every
/// ray of the active sensors. The field and embedder are built once and
/// reused across calls.
class Simulator {
public:
    Simulator(const grid::SemanticOccupancyGrid &grid, LidarConfig config = {},
              std::shared_ptr<const HeadModel> head = nullptr,
              HistogramEmbedder embedder = HistogramEmbedder());

    const LidarConfig &config() const noexcept { return cfg_; }
    const OccupancyField &field() const noexcept { return field_; }

    SimulationResult run(const geom::LidarRig &rig, const geom::RigidTransform &ego_pose,
                         const std::vector<std::size_t> &active) const;

    /// One ray. v_r, when requested, gets the aggregated feature of
    /// dimension 4 + 6F + kHistDim + 6.
    RayResult simulate_ray(const geom::Ray &ray, const VecX &f_r, VecX *v_r = nullptr) const;

private:
    const grid::SemanticOccupancyGrid &grid_;
    LidarConfig cfg_;
    OccupancyField field_;
    std::shared_ptr<const HeadModel> head_;
    HistogramEmbedder embedder_;
};

/// Convenience wrapper building a Simulator for one call.
SimulationResult simulate(const grid::SemanticOccupancyGrid &grid, const geom::LidarRig &rig,
                          const geom::RigidTransform &ego_pose,
                          const std::vector<std::size_t> &active, const LidarConfig &config = {});

} // namespace occu::lidar
