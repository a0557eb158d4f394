// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/lidar/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace occu::lidar {

std::uint64_t ray_seed(std::uint64_t global_seed, std::uint32_t sensor, std::uint32_t index) {
    std::uint64_t h = splitmix64(global_seed);
    h = splitmix64(h ^ (static_cast<std::uint64_t>(sensor) << 32 | index));
    return h;
}

std::pair<double, double> ray_voxel_interval(const geom::Ray &ray, const grid::GridGeometry &geo,
                                             const grid::Index3 &v) {
    const Vec3 lo = geo.origin + v.cast<double>().cwiseProduct(geo.voxel_size);
    const Vec3 hi = lo + geo.voxel_size;
    double t0 = -std::numeric_limits<double>::infinity();
    double t1 = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 3; ++a) {
        const double d = ray.dir[a];
        if (d == 0.0) {
            if (ray.origin[a] < lo[a] || ray.origin[a] > hi[a]) return {1.0, 0.0};
            continue;
        }
        double ta = (lo[a] - ray.origin[a]) / d, tb = (hi[a] - ray.origin[a]) / d;
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
    }
    return {t0, t1};
}

RaySamples sample_prior(const geom::Ray &ray, const grid::SemanticOccupancyGrid &grid,
                        const SamplingParams &params, std::uint64_t seed) {
    if (params.n_uniform < 2) throw InvalidArgument("sample_prior: n_uniform must be >= 2");
    if (params.n_resample < 1) throw InvalidArgument("sample_prior: n_resample must be >= 1");
    if (!(ray.max_range > params.min_range))
        throw InvalidArgument("sample_prior: max_range must exceed min_range");

    RaySamples rs;
    rs.s_min = params.min_range;
    rs.s_max = ray.max_range;
    const std::size_t n = params.n_uniform;
    rs.s.resize(n);
    rs.occ.resize(n);
    const auto &geo = grid.geometry();
    const double step = (rs.s_max - rs.s_min) / static_cast<double>(n - 1);

    // Occupied voxels hit by the uniform samples, in ray order.
    std::vector<std::pair<double, double>> segs;
    std::size_t last_voxel = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < n; ++k) {
        const double s = k + 1 == n ? rs.s_max : rs.s_min + step * static_cast<double>(k);
        rs.s[k] = s;
        const auto v = geo.world_to_voxel(ray.origin + s * ray.dir);
        if (!geo.in_bounds(v)) continue;
        const auto lin = geo.linear(v);
        if (grid.classes()[lin] == 0) continue;
        rs.occ[k] = 1;
        if (lin == last_voxel) continue;
        last_voxel = lin;
        auto [a, b] = ray_voxel_interval(ray, geo, v);
        a = std::max(a, rs.s_min);
        b = std::min(b, rs.s_max);
        if (b > a) segs.emplace_back(a, b);
    }
    if (segs.empty()) {
        rs.dropped_by_prior = true;
        return rs;
    }

    // Union of the intervals.
    std::sort(segs.begin(), segs.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto &sg : segs) {
        if (!merged.empty() && sg.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, sg.second);
        else
            merged.push_back(sg);
    }
    std::vector<double> cum(merged.size() + 1, 0.0);
    for (std::size_t i = 0; i < merged.size(); ++i)
        cum[i + 1] = cum[i] + (merged[i].second - merged[i].first);
    const double total = cum.back();

    std::mt19937_64 rng(seed);
    const std::size_t m = params.n_resample;
    rs.resampled.resize(m);
    std::size_t seg = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const double u = (static_cast<double>(j) + to_unit_double(rng())) / static_cast<double>(m);
        const double target = u * total;
        while (seg + 1 < merged.size() && cum[seg + 1] <= target) ++seg;
        const double s = merged[seg].first + (target - cum[seg]);
        rs.resampled[j] = std::clamp(s, merged[seg].first, merged[seg].second);
    }
    // Strata are ordered, but guard against ties from clamping.
    std::sort(rs.resampled.begin(), rs.resampled.end());
    return rs;
}

} // namespace occu::lidar
