// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/curation/statistical_filter.hpp"

#include "occu/kdtree.hpp"
#include "occu/parallel.hpp"

#include <cmath>
#include <numeric>

namespace occu::curation {

FilterResult statistical_filter(const geom::PointCloud &points, const FilterParams &params) {
    points.validate();
    if (params.k_neighbors < 1) throw InvalidArgument("statistical_filter: k_neighbors must be >= 1");
    if (!(params.k > 0.0)) throw InvalidArgument("statistical_filter: k must be > 0");

    FilterResult res;
    const std::size_t n = points.size();
    auto keep_all = [&] {
        res.cloud = points;
        res.kept.resize(n);
        std::iota(res.kept.begin(), res.kept.end(), std::size_t{0});
    };
    if (n == 0) return res;
    if (n < params.k_neighbors + 1) {
        keep_all();
        res.warning = true;
        return res;
    }

    std::vector<double> score(n);
    double mean = 0.0, spread = 0.0;
    if (params.mode == FilterMode::Knn) {
        const KdTree tree(points.xyz);
        parallel_for(n, 256, [&](std::size_t b, std::size_t e) {
            std::vector<KdTree::Neighbor> nb;
            for (std::size_t i = b; i < e; ++i) {
                // k+1 because the query point is its own nearest neighbour.
                tree.knn(points.xyz[i], params.k_neighbors + 1, nb);
                double s = 0.0;
                std::size_t used = 0;
                bool skipped_self = false;
                for (const auto &x : nb) {
                    if (!skipped_self && x.index == i) {
                        skipped_self = true;
                        continue;
                    }
                    if (used == params.k_neighbors) break;
                    s += std::sqrt(x.dist2);
                    ++used;
                }
                score[i] = s / static_cast<double>(used);
            }
        });
        for (double v : score) mean += v;
        mean /= static_cast<double>(n);
        for (double v : score) spread += (v - mean) * (v - mean);
        spread = std::sqrt(spread / static_cast<double>(n));
    } else {
        Vec3 c = Vec3::Zero();
        for (const auto &p : points.xyz) c += p;
        c /= static_cast<double>(n);
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            score[i] = (points.xyz[i] - c).norm();
            mean += score[i];
            ss += score[i] * score[i];
        }
        mean /= static_cast<double>(n);
        spread = std::sqrt(ss / static_cast<double>(n));
        // Literal rule: ||p - mu|| < k * sigma.
        mean = 0.0;
    }

    if (spread < 1e-12) {
        keep_all();
        return res;
    }
    const double limit = mean + params.k * spread;
    for (std::size_t i = 0; i < n; ++i)
        if (score[i] < limit) res.kept.push_back(i);
    res.cloud = select(points, res.kept);
    return res;
}

} // namespace occu::curation
