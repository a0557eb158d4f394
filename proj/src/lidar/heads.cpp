// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/lidar/heads.hpp"

#include <algorithm>
#include <cmath>

namespace occu::lidar {

HeadOutput analytic_head(double reflectivity, const HitInfo &hit, double attenuation,
                         double p_graze) {
    HeadOutput out;
    if (hit.dropped) {
        out.drop_prob = 1.0;
        return out;
    }
    const double c = std::min(std::abs(hit.cos_incidence), 1.0);
    out.intensity =
        std::clamp(reflectivity * c * std::exp(-std::max(hit.depth, 0.0) / attenuation), 0.0, 1.0);
    out.drop_prob = std::clamp(std::clamp(1.0 - c, 0.0, 1.0) * p_graze, 0.0, 1.0);
    return out;
}

AnalyticHead::AnalyticHead(grid::ClassTable table, double attenuation, double p_graze)
    : table_(std::move(table)), attenuation_(attenuation), p_graze_(p_graze) {
    if (!(attenuation_ > 0.0)) throw InvalidArgument("analytic head: attenuation must be > 0");
    if (!(p_graze_ >= 0.0 && p_graze_ <= 1.0))
        throw InvalidArgument("analytic head: p_graze must be in [0, 1]");
}

HeadOutput AnalyticHead::evaluate(const Eigen::VectorXd &, const HitInfo &hit) const {
    const double rho = hit.class_id < table_.size() ? table_[hit.class_id].reflectivity : 0.0;
    return analytic_head(rho, hit, attenuation_, p_graze_);
}

} // namespace occu::lidar
