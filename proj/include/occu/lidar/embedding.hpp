// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/lidar_rig.hpp"
#include "occu/lidar/sampling.hpp"

#include <Eigen/Core>

namespace occu::lidar {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using VecX = Eigen::VectorXd;

/// (v, o x v).
Vec6 plucker(const geom::Ray &ray);

inline constexpr int kHistBins = 64;
inline constexpr int kHistDim = 16;

class HistogramEmbedder {
public:
    /// Deterministic matrix with orthonormal columns drawn from `seed`.
    explicit HistogramEmbedder(std::uint64_t seed = 42);
    /// Explicit kHistBins x kHistDim matrix.
    explicit HistogramEmbedder(const Eigen::MatrixXd &E);

    const Eigen::MatrixXd &matrix() const noexcept { return E_; }
    /// e = E^T h.
    VecX embed(const VecX &h) const;

private:
    Eigen::MatrixXd E_;
};

struct HistogramFeature {
    VecX h;   // kHistBins, sums to 1 or is all zero
    VecX e_h; // kHistDim
};

/// Normalized histogram of occupied uniform samples over [s_min, s_max].
VecX occupancy_histogram(const RaySamples &samples);
HistogramFeature histogram_embed(const RaySamples &samples, const HistogramEmbedder &embedder);

struct SensorEmbedding {
    std::vector<VecX> e_l; // per rig sensor; zero when inactive
    VecX f_r;              // mean of the active e_l
};

/// Fourier encoding (sin, cos)(2^j pi o) for j < frequencies, per origin
/// coordinate. Throws InvalidArgument for an empty or out-of-range active set.
SensorEmbedding sensor_embedding(const geom::LidarRig &rig, const std::vector<std::size_t> &active,
                                 int frequencies = 4);

} // namespace occu::lidar
