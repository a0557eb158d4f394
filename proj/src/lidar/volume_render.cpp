// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/lidar/volume_render.hpp"

#include <algorithm>
#include <cmath>

namespace occu::lidar {

double logistic(double x, double s) {
    const double z = s * x;
    // Stable for large |z|.
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

VolumeRenderResult volume_render(std::span<const double> s, std::span<const double> f,
                                 const VolumeRenderParams &params) {
    if (s.size() != f.size()) throw InvalidArgument("volume_render: depth/value length mismatch");
    if (!(params.sharpness > 0.0)) throw InvalidArgument("volume_render: sharpness must be > 0");
    VolumeRenderResult r;
    r.weights.assign(s.size(), 0.0);
    if (s.size() < 2) return r;

    double trans = 1.0, wsum = 0.0, wdepth = 0.0;
    double phi = std::max(logistic(f[0], params.sharpness), 1e-12);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double next = std::max(logistic(f[i + 1], params.sharpness), 1e-12);
        const double beta = std::clamp((phi - next) / phi, 0.0, 1.0);
        const double w = trans * beta;
        r.weights[i] = w;
        wsum += w;
        wdepth += w * s[i];
        trans *= 1.0 - beta;
        phi = next;
    }
    r.weight_sum = wsum;
    r.transmittance = trans;
    if (wsum > params.w_min) {
        r.dropped = false;
        r.depth = params.normalize_depth ? wdepth / wsum : wdepth;
    }
    return r;
}

VolumeRenderResult volume_render(const geom::Ray &ray, const OccupancyField &field,
                                 std::span<const double> s, const VolumeRenderParams &params) {
    std::vector<double> f(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) f[i] = field.value(ray.origin + s[i] * ray.dir);
    return volume_render(s, f, params);
}

Eigen::VectorXd ray_feature(std::span<const double> weights,
                            const std::vector<Eigen::VectorXd> &features) {
    if (weights.size() != features.size())
        throw InvalidArgument("ray_feature: weights and features differ in length");
    if (features.empty()) return {};
    Eigen::VectorXd v = Eigen::VectorXd::Zero(features[0].size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (features[i].size() != v.size()) throw InvalidArgument("ray_feature: ragged features");
        v += weights[i] * features[i];
    }
    return v;
}

} // namespace occu::lidar
