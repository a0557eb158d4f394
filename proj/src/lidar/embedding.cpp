// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/lidar/embedding.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace occu::lidar {

Vec6 plucker(const geom::Ray &ray) {
    Vec6 e;
    e << ray.dir, ray.origin.cross(ray.dir);
    return e;
}

HistogramEmbedder::HistogramEmbedder(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Eigen::MatrixXd G(kHistBins, kHistDim);
    // Box-Muller on our own uniforms keeps the matrix identical across
    // standard libraries.
    for (int c = 0; c < kHistDim; ++c)
        for (int r = 0; r < kHistBins; ++r) {
            const double u1 = 1.0 - to_unit_double(rng()), u2 = to_unit_double(rng());
            G(r, c) = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
    E_ = qr.householderQ() * Eigen::MatrixXd::Identity(kHistBins, kHistDim);
}

HistogramEmbedder::HistogramEmbedder(const Eigen::MatrixXd &E) : E_(E) {
    if (E_.rows() != kHistBins || E_.cols() != kHistDim)
        throw InvalidArgument("histogram embedder: matrix must be 64 x 16");
    if (!E_.allFinite()) throw InvalidArgument("histogram embedder: non-finite entry");
}

VecX HistogramEmbedder::embed(const VecX &h) const {
    if (h.size() != kHistBins) throw InvalidArgument("histogram embedder: h must have 64 bins");
    return E_.transpose() * h;
}

VecX occupancy_histogram(const RaySamples &samples) {
    VecX h = VecX::Zero(kHistBins);
    const double span = samples.s_max - samples.s_min;
    double total = 0.0;
    for (std::size_t k = 0; k < samples.s.size(); ++k) {
        if (!samples.occ[k]) continue;
        int b = span > 0.0 ? static_cast<int>(std::floor((samples.s[k] - samples.s_min) / span *
                                                         kHistBins))
                           : 0;
        b = std::clamp(b, 0, kHistBins - 1);
        h[b] += 1.0;
        total += 1.0;
    }
    if (total > 0.0) h /= total;
    return h;
}

HistogramFeature histogram_embed(const RaySamples &samples, const HistogramEmbedder &embedder) {
    HistogramFeature f;
    f.h = occupancy_histogram(samples);
    f.e_h = embedder.embed(f.h);
    return f;
}

SensorEmbedding sensor_embedding(const geom::LidarRig &rig, const std::vector<std::size_t> &active,
                                 int frequencies) {
    if (active.empty()) throw InvalidArgument("no sensor selected");
    if (frequencies < 1) throw InvalidArgument("sensor_embedding: frequencies must be >= 1");
    const int dim = 6 * frequencies;
    SensorEmbedding out;
    out.e_l.assign(rig.size(), VecX::Zero(dim));
    std::vector<bool> on(rig.size(), false);
    for (auto i : active) {
        if (i >= rig.size())
            throw InvalidArgument("unknown sensor index " + std::to_string(i));
        on[i] = true;
    }
    out.f_r = VecX::Zero(dim);
    int count = 0;
    for (std::size_t i = 0; i < rig.size(); ++i) {
        if (!on[i]) continue;
        const Vec3 &o = rig[i].origin;
        VecX e(dim);
        int k = 0;
        for (int a = 0; a < 3; ++a)
            for (int j = 0; j < frequencies; ++j) {
                const double x = std::ldexp(std::numbers::pi, j) * o[a];
                e[k++] = std::sin(x);
                e[k++] = std::cos(x);
            }
        out.e_l[i] = e;
        out.f_r += e;
        ++count;
    }
    out.f_r /= count;
    return out;
}

} // namespace occu::lidar
