// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/lidar_rig.hpp"
#include "occu/grid/occupancy_grid.hpp"

#include <cstdint>
#include <vector>

namespace occu::lidar {

struct SamplingParams {
    std::size_t n_uniform = 512;
    std::size_t n_resample = 64;
    double min_range = 0.5; // m
};

struct RaySamples {
    double s_min = 0.0, s_max = 0.0;
    std::vector<double> s;           // uniform depths, ascending
    std::vector<std::uint8_t> occ;   // 1 where o + s v is in an occupied voxel
    std::vector<double> resampled;   // ascending, drawn from the occupancy prior
    bool dropped_by_prior = false;   // no uniform sample was occupied
};

/// Per-ray seed so any subset of rays reproduces the full run.
std::uint64_t ray_seed(std::uint64_t global_seed, std::uint32_t sensor, std::uint32_t index);

/// Occupancy-guided sampling. Uniform depths are evenly spaced on
/// [min_range, ray.max_range]. The prior is uniform over the union of the
/// ray's exact intersections with the occupied voxels those samples hit;
/// `n_resample` depths are drawn from it by stratified inverse CDF with one
/// jitter per stratum.
RaySamples sample_prior(const geom::Ray &ray, const grid::SemanticOccupancyGrid &grid,
                        const SamplingParams &params, std::uint64_t seed);

/// Entry and exit depth of the ray within voxel `v`; empty interval when it
/// misses. Exposed for tests.
std::pair<double, double> ray_voxel_interval(const geom::Ray &ray, const grid::GridGeometry &geo,
                                             const grid::Index3 &v);

} // namespace occu::lidar
