// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/curation/densify.hpp"

#include "occu/kdtree.hpp"
#include "occu/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace occu::curation {

namespace {

constexpr int kBits = 21;
constexpr std::int64_t kBias = std::int64_t{1} << (kBits - 1);

std::int64_t pack(std::int64_t i, std::int64_t j, std::int64_t k) {
    return ((k + kBias) << (2 * kBits)) | ((j + kBias) << kBits) | (i + kBias);
}
Eigen::Vector3<std::int64_t> unpack(std::int64_t key) {
    const std::int64_t m = (std::int64_t{1} << kBits) - 1;
    return {(key & m) - kBias, ((key >> kBits) & m) - kBias, ((key >> (2 * kBits)) & m) - kBias};
}

struct Cell {
    double w = 0.0;
    double wsdf = 0.0;
};

std::vector<Vec3> estimate_normals(const std::vector<Vec3> &pts, std::span<const Vec3> origins,
                                   std::size_t k) {
    const KdTree tree(pts);
    Vec3 centroid = Vec3::Zero();
    for (const auto &p : pts) centroid += p;
    centroid /= static_cast<double>(pts.size());

    std::vector<Vec3> normals(pts.size());
    parallel_for(pts.size(), 256, [&](std::size_t b, std::size_t e) {
        std::vector<KdTree::Neighbor> nb;
        for (std::size_t i = b; i < e; ++i) {
            tree.knn(pts[i], k, nb);
            Vec3 mean = Vec3::Zero();
            for (const auto &x : nb) mean += pts[x.index];
            mean /= static_cast<double>(nb.size());
            Mat3 C = Mat3::Zero();
            for (const auto &x : nb) {
                const Vec3 d = pts[x.index] - mean;
                C += d * d.transpose();
            }
            Eigen::SelfAdjointEigenSolver<Mat3> es(C);
            Vec3 n = es.eigenvectors().col(0).normalized();
            const Vec3 toward = origins.empty() ? Vec3(pts[i] - centroid) : Vec3(origins[i] - pts[i]);
            const double s = n.dot(toward);
            if (s < 0.0 || (std::abs(s) < 1e-12 && n.z() < 0.0)) n = -n;
            normals[i] = n;
        }
    });
    return normals;
}

} // namespace

DensifyResult densify(const geom::PointCloud &points, std::span<const Vec3> origins,
                      const DensifyParams &params) {
    points.validate();
    if (!(params.voxel > 0.0) || params.truncation_voxels < 1 || params.normal_neighbors < 3)
        throw InvalidArgument("densify: invalid parameters");
    if (!origins.empty() && origins.size() != points.size())
        throw InvalidArgument("densify: origins must be empty or one per point");

    DensifyResult res;
    if (points.size() < 50) {
        res.cloud = points;
        res.warning = true;
        return res;
    }

    const auto &pts = points.xyz;
    const auto normals =
        estimate_normals(pts, origins, std::min(params.normal_neighbors, pts.size()));

    const double h = params.voxel;
    const double trunc = params.truncation_voxels * h;
    const double sigma2 = (trunc / 2) * (trunc / 2);
    const int r = params.truncation_voxels + 1;

    std::unordered_map<std::int64_t, Cell> cells;
    cells.reserve(pts.size() * 8);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec3 rel = (pts[i] - params.anchor) / h;
        const std::int64_t ci = static_cast<std::int64_t>(std::floor(rel.x()));
        const std::int64_t cj = static_cast<std::int64_t>(std::floor(rel.y()));
        const std::int64_t ck = static_cast<std::int64_t>(std::floor(rel.z()));
        for (std::int64_t k = ck - r; k <= ck + r; ++k)
            for (std::int64_t j = cj - r; j <= cj + r; ++j)
                for (std::int64_t a = ci - r; a <= ci + r; ++a) {
                    const Vec3 c = params.anchor + Vec3(a + 0.5, j + 0.5, k + 0.5) * h;
                    const Vec3 d = c - pts[i];
                    const double dist2 = d.squaredNorm();
                    if (dist2 > trunc * trunc) continue;
                    const double sd = d.dot(normals[i]);
                    const double lat2 = std::max(dist2 - sd * sd, 0.0);
                    const double w = std::exp(-lat2 / (2 * sigma2));
                    auto &cell = cells[pack(a, j, k)];
                    cell.w += w;
                    cell.wsdf += w * sd;
                }
    }

    std::vector<std::int64_t> surface;
    const double min_w = std::max(params.min_weight, 1e-12);
    for (const auto &[key, cell] : cells) {
        if (cell.w < min_w) continue;
        const double s0 = cell.wsdf / cell.w;
        const auto idx = unpack(key);
        for (int axis = 0; axis < 3; ++axis) {
            auto nidx = idx;
            ++nidx[axis];
            const auto it = cells.find(pack(nidx[0], nidx[1], nidx[2]));
            if (it == cells.end() || it->second.w < min_w) continue;
            const double s1 = it->second.wsdf / it->second.w;
            if ((s0 < 0.0) == (s1 < 0.0)) continue;
            surface.push_back(std::abs(s0) <= std::abs(s1) ? key : it->first);
        }
    }
    std::sort(surface.begin(), surface.end());
    surface.erase(std::unique(surface.begin(), surface.end()), surface.end());

    res.cloud.xyz.reserve(surface.size());
    for (auto key : surface) {
        const auto idx = unpack(key);
        res.cloud.xyz.push_back(params.anchor +
                                Vec3(idx[0] + 0.5, idx[1] + 0.5, idx[2] + 0.5) * h);
    }
    return res;
}

} // namespace occu::curation
