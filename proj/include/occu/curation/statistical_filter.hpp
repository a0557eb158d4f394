// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/point_cloud.hpp"

#include <vector>

namespace occu::curation {

enum class FilterMode {
    Knn,      // per-point mean distance to the k nearest neighbours
    Centroid, // per-point distance to the cloud centroid
};

struct FilterParams {
    FilterMode mode = FilterMode::Knn;
    std::size_t k_neighbors = 16;
    double k = 2.0;
};

struct FilterResult {
    geom::PointCloud cloud;
    std::vector<std::size_t> kept; // input indices, ascending
    bool warning = false;          // cloud too small, returned unchanged
};

/// Statistical outlier removal. With per-point score v, keeps points with
/// v < mean(v) + k * stddev(v); keeps everything when stddev < 1e-12.
/// In centroid mode the score is the distance to the centroid and the spread
/// is the RMS of those distances.
FilterResult statistical_filter(const geom::PointCloud &points, const FilterParams &params = {});

} // namespace occu::curation
