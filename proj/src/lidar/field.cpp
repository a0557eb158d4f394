// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/lidar/field.hpp"

#include "occu/grid/distance_field.hpp"

#include <algorithm>
#include <cmath>

namespace occu::lidar {

OccupancyField::OccupancyField(const grid::SemanticOccupancyGrid &grid) : geo_(grid.geometry()) {
    const auto &cls = grid.classes();
    std::vector<bool> occupied(cls.size()), empty(cls.size());
    bool any_occ = false, any_empty = false;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        occupied[i] = cls[i] != 0;
        empty[i] = !occupied[i];
        any_occ = any_occ || occupied[i];
        any_empty = any_empty || empty[i];
    }
    if (!any_occ) throw InvalidArgument("no occupied voxels");

    const auto d_occ = grid::euclidean_distance_transform(geo_, occupied);
    f_.resize(cls.size());
    if (any_empty) {
        const auto d_empty = grid::euclidean_distance_transform(geo_, empty);
        for (std::size_t i = 0; i < cls.size(); ++i)
            f_[i] = static_cast<float>(occupied[i] ? -d_empty[i] : d_occ[i]);
    } else {
        // Solid grid: nothing to be outside of inside the volume.
        const float depth = static_cast<float>((geo_.max_corner() - geo_.origin).norm());
        std::fill(f_.begin(), f_.end(), -depth);
    }
}

double OccupancyField::value(const Vec3 &p) const {
    Vec3 g;
    return value_grad(p, g);
}

double OccupancyField::value_grad(const Vec3 &p, Vec3 &grad) const {
    const auto &dims = geo_.dims;
    // Continuous index in voxel-center coordinates, clamped to the center box.
    Vec3 c = (p - geo_.origin).cwiseQuotient(geo_.voxel_size) - Vec3::Constant(0.5);
    Vec3 cc;
    int i0[3];
    double t[3];
    for (int a = 0; a < 3; ++a) {
        const double hi = dims[a] - 1;
        cc[a] = std::clamp(c[a], 0.0, hi);
        int i = static_cast<int>(std::floor(cc[a]));
        i = std::clamp(i, 0, std::max(dims[a] - 2, 0));
        i0[a] = i;
        t[a] = dims[a] > 1 ? cc[a] - i : 0.0;
    }
    const int step[3] = {dims[0] > 1 ? 1 : 0, dims[1] > 1 ? 1 : 0, dims[2] > 1 ? 1 : 0};

    auto F = [&](int dx, int dy, int dz) -> double {
        return f_[geo_.linear(i0[0] + dx * step[0], i0[1] + dy * step[1], i0[2] + dz * step[2])];
    };
    const double c000 = F(0, 0, 0), c100 = F(1, 0, 0), c010 = F(0, 1, 0), c110 = F(1, 1, 0);
    const double c001 = F(0, 0, 1), c101 = F(1, 0, 1), c011 = F(0, 1, 1), c111 = F(1, 1, 1);
    const double tx = t[0], ty = t[1], tz = t[2];

    const double c00 = c000 + tx * (c100 - c000), c10 = c010 + tx * (c110 - c010);
    const double c01 = c001 + tx * (c101 - c001), c11 = c011 + tx * (c111 - c011);
    const double c0 = c00 + ty * (c10 - c00), c1 = c01 + ty * (c11 - c01);
    double f = c0 + tz * (c1 - c0);

    // d/dt per axis, then chain to world units. Zero along a clamped axis.
    const double dx0 = (c100 - c000) + ty * ((c110 - c010) - (c100 - c000));
    const double dx1 = (c101 - c001) + ty * ((c111 - c011) - (c101 - c001));
    const double dfx = dx0 + tz * (dx1 - dx0);
    const double dfy = (c10 - c00) + tz * ((c11 - c01) - (c10 - c00));
    const double dfz = c1 - c0;
    grad = Vec3(dfx, dfy, dfz).cwiseQuotient(geo_.voxel_size);
    for (int a = 0; a < 3; ++a)
        if (step[a] == 0 || c[a] != cc[a]) grad[a] = 0.0;

    // Outside the center box: add the distance to it.
    const Vec3 inside = geo_.origin + (cc + Vec3::Constant(0.5)).cwiseProduct(geo_.voxel_size);
    const Vec3 off = p - inside;
    const double d = off.norm();
    if (d > 0.0) {
        f += d;
        grad += off / d;
    }
    return f;
}

} // namespace occu::lidar
