// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/grid/distance_field.hpp"

#include "occu/parallel.hpp"

#include <cmath>
#include <limits>

namespace occu::grid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lower envelope of parabolas f(p) + ((q - p) h)^2 over one strided line.
// Infinite samples contribute no parabola.
struct Envelope {
    std::vector<int> v;
    std::vector<double> z;
    std::vector<double> f;

    explicit Envelope(int n) : v(n), z(n + 1), f(n) {}

    void run(double *data, int n, std::size_t stride, double h) {
        for (int q = 0; q < n; ++q) f[q] = data[q * stride];

        int k = -1;
        for (int q = 0; q < n; ++q) {
            if (f[q] == kInf) continue;
            const double fq = f[q] + (q * h) * (q * h);
            for (;;) {
                if (k < 0) {
                    k = 0;
                    v[0] = q;
                    z[0] = -kInf;
                    z[1] = kInf;
                    break;
                }
                const int p = v[k];
                const double s = (fq - (f[p] + (p * h) * (p * h))) / (2.0 * h * (q - p));
                if (s <= z[k]) {
                    --k;
                    continue;
                }
                ++k;
                v[k] = q;
                z[k] = s;
                z[k + 1] = kInf;
                break;
            }
        }

        if (k < 0) {
            for (int q = 0; q < n; ++q) data[q * stride] = kInf;
            return;
        }
        int j = 0;
        for (int q = 0; q < n; ++q) {
            while (z[j + 1] < q * h) ++j;
            const double d = static_cast<double>(q - v[j]) * h;
            data[q * stride] = d * d + f[v[j]];
        }
    }
};

} // namespace

std::vector<double> euclidean_distance_transform(const GridGeometry &geometry,
                                                 const std::vector<bool> &feature) {
    geometry.validate();
    if (feature.size() != geometry.voxel_count())
        throw InvalidArgument("distance transform: mask size mismatch");

    const int H = geometry.dims.x(), W = geometry.dims.y(), D = geometry.dims.z();
    std::vector<double> d2(feature.size());
    for (std::size_t i = 0; i < feature.size(); ++i) d2[i] = feature[i] ? 0.0 : kInf;

    const std::size_t sx = 1, sy = static_cast<std::size_t>(H),
                      sz = static_cast<std::size_t>(H) * W;

    // x lines: one per (y, z)
    parallel_for(static_cast<std::size_t>(W) * D, 64, [&](std::size_t b, std::size_t e) {
        Envelope env(H);
        for (std::size_t l = b; l < e; ++l) {
            const std::size_t y = l % W, z = l / W;
            env.run(d2.data() + y * sy + z * sz, H, sx, geometry.voxel_size.x());
        }
    });
    // y lines: one per (x, z)
    parallel_for(static_cast<std::size_t>(H) * D, 64, [&](std::size_t b, std::size_t e) {
        Envelope env(W);
        for (std::size_t l = b; l < e; ++l) {
            const std::size_t x = l % H, z = l / H;
            env.run(d2.data() + x * sx + z * sz, W, sy, geometry.voxel_size.y());
        }
    });
    // z lines: one per (x, y)
    parallel_for(static_cast<std::size_t>(H) * W, 64, [&](std::size_t b, std::size_t e) {
        Envelope env(D);
        for (std::size_t l = b; l < e; ++l) {
            env.run(d2.data() + l, D, sz, geometry.voxel_size.z());
        }
    });

    for (auto &v : d2) v = std::sqrt(v);
    return d2;
}

std::vector<double> unsigned_distance_field(const SemanticOccupancyGrid &grid) {
    std::vector<bool> occupied(grid.classes().size());
    bool any = false;
    for (std::size_t i = 0; i < occupied.size(); ++i) {
        occupied[i] = grid.classes()[i] != 0;
        any = any || occupied[i];
    }
    if (!any) throw InvalidArgument("no occupied voxels");
    return euclidean_distance_transform(grid.geometry(), occupied);
}

} // namespace occu::grid
