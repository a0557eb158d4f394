// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/point_cloud.hpp"
#include "occu/metrics/histogram.hpp"

#include <span>
#include <vector>

namespace occu::metrics {

struct MmdResult {
    double value = 0.0;
    double sigma = 0.0; // kernel bandwidth actually used
};

/// Squared MMD with k(x, y) = exp(-|x - y|^2 / (2 sigma^2)) over flattened
/// histograms. sigma <= 0 selects the median pairwise distance of A and B
/// pooled. The default biased estimator is exactly 0 for A = B and never
/// negative; `unbiased` drops the diagonal kernel terms.
/// Throws InvalidArgument when a set has fewer than two members or the
/// histograms differ in size.
MmdResult mmd(const std::vector<BevHistogram> &a, const std::vector<BevHistogram> &b,
              double sigma = 0.0, bool unbiased = false);

/// Jensen-Shannon divergence, natural log, in [0, ln 2]. Throws
/// InvalidArgument unless both inputs are non-negative and sum to 1 within
/// 1e-6.
double jsd(std::span<const double> a, std::span<const double> b);
inline double jsd(const BevHistogram &a, const BevHistogram &b) { return jsd(a.mass, b.mass); }

/// Symmetric Chamfer distance: half the sum of the mean nearest-neighbour
/// distances A -> B and B -> A. Throws InvalidArgument for empty input.
double chamfer(const geom::PointCloud &a, const geom::PointCloud &b);

} // namespace occu::metrics
