// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/grid/class_table.hpp"

#include <Eigen/Core>

namespace occu::lidar {

struct HitInfo {
    Vec3 position = Vec3::Zero();
    ClassId class_id = 0;
    double cos_incidence = 1.0;
    double depth = 0.0;
    bool dropped = false;
};

struct HeadOutput {
    double intensity = 0.0; // [0, 1]
    double drop_prob = 0.0; // [0, 1]
};

/// Maps a ray feature and hit description to intensity and drop
/// probability. Implementations must be pure and thread-safe.
class HeadModel {
public:
    virtual ~HeadModel() = default;
    virtual HeadOutput evaluate(const Eigen::VectorXd &v_r, const HitInfo &hit) const = 0;
};

/// intensity = rho(class) |cos| exp(-depth / attenuation);
/// drop = p_graze (1 - |cos|), or 1 for dropped rays.
class AnalyticHead final : public HeadModel {
public:
    explicit AnalyticHead(grid::ClassTable table = grid::ClassTable::driving_default(),
                          double attenuation = 80.0, double p_graze = 0.3);
    HeadOutput evaluate(const Eigen::VectorXd &v_r, const HitInfo &hit) const override;

    double attenuation() const noexcept { return attenuation_; }
    double p_graze() const noexcept { return p_graze_; }

private:
    grid::ClassTable table_;
    double attenuation_;
    double p_graze_;
};

/// Evaluates the analytic formulas for an explicit reflectivity.
HeadOutput analytic_head(double reflectivity, const HitInfo &hit, double attenuation = 80.0,
                         double p_graze = 0.3);

} // namespace occu::lidar
