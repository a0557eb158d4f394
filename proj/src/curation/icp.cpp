// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/curation/icp.hpp"

#include "occu/kdtree.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace occu::curation {

std::vector<Vec3> voxel_downsample(std::span<const Vec3> points, double cell) {
    if (!(cell > 0.0)) return {points.begin(), points.end()};
    std::map<std::tuple<long long, long long, long long>, std::pair<Vec3, int>> cells;
    for (const auto &p : points) {
        const auto key = std::make_tuple(static_cast<long long>(std::floor(p.x() / cell)),
                                         static_cast<long long>(std::floor(p.y() / cell)),
                                         static_cast<long long>(std::floor(p.z() / cell)));
        auto it = cells.try_emplace(key, Vec3::Zero(), 0).first;
        auto &acc = it->second;
        acc.first += p;
        ++acc.second;
    }
    std::vector<Vec3> out;
    out.reserve(cells.size());
    for (auto &[key, acc] : cells) out.push_back(acc.first / acc.second);
    return out;
}

namespace {

struct Pairs {
    std::vector<Vec3> src, dst;
    double sq_sum = 0.0;
};

Pairs correspond(const std::vector<Vec3> &src, const geom::RigidTransform &T, const KdTree &tree,
                 const std::vector<Vec3> &target, double radius) {
    Pairs p;
    const double r2 = radius * radius;
    for (const auto &s : src) {
        const Vec3 x = T.apply(s);
        const auto nb = tree.nearest(x, r2);
        if (nb.index == KdTree::npos) continue;
        p.src.push_back(x);
        p.dst.push_back(target[nb.index]);
        p.sq_sum += nb.dist2;
    }
    return p;
}

// Least-squares rigid motion taking a onto b (Kabsch).
geom::RigidTransform kabsch(const std::vector<Vec3> &a, const std::vector<Vec3> &b) {
    Vec3 ca = Vec3::Zero(), cb = Vec3::Zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        ca += a[i];
        cb += b[i];
    }
    ca /= static_cast<double>(a.size());
    cb /= static_cast<double>(b.size());
    Mat3 H = Mat3::Zero();
    for (std::size_t i = 0; i < a.size(); ++i) H += (a[i] - ca) * (b[i] - cb).transpose();
    Eigen::JacobiSVD<Mat3> svd(H, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Mat3 U = svd.matrixU(), V = svd.matrixV();
    Mat3 S = Mat3::Identity();
    if ((V * U.transpose()).determinant() < 0.0) S(2, 2) = -1.0;
    Mat3 R = V * S * U.transpose();
    // Re-orthonormalize against round-off.
    Eigen::JacobiSVD<Mat3> clean(R, Eigen::ComputeFullU | Eigen::ComputeFullV);
    R = clean.matrixU() * clean.matrixV().transpose();
    return geom::RigidTransform(R, cb - R * ca);
}

} // namespace

IcpResult icp_register(const geom::PointCloud &source, const geom::PointCloud &target,
                       const geom::RigidTransform &init, const IcpParams &params) {
    if (source.size() < 10 || target.size() < 10)
        throw InvalidArgument("icp_register: both clouds need at least 10 points");
    if (params.max_iterations < 1) throw InvalidArgument("icp_register: max_iterations must be >= 1");

    const auto src = voxel_downsample(source.xyz, params.downsample);
    const auto dst = voxel_downsample(target.xyz, params.downsample);
    const KdTree tree(dst);

    IcpResult res;
    res.T = init;
    double radius = params.initial_radius;
    for (int it = 0; it < params.max_iterations; ++it) {
        const auto pairs = correspond(src, res.T, tree, dst, radius);
        if (pairs.src.size() < 3) throw Error("registration diverged");
        const auto dT = kabsch(pairs.src, pairs.dst);
        res.T = dT * res.T;
        res.iterations = it + 1;
        radius = std::max(radius * params.radius_decay, params.min_radius);
        if (dT.rotation_angle() + dT.translation().norm() < params.convergence) {
            res.converged = true;
            break;
        }
    }
    const auto final_pairs = correspond(src, res.T, tree, dst, radius);
    res.rmse = final_pairs.src.empty()
                   ? 0.0
                   : std::sqrt(final_pairs.sq_sum / static_cast<double>(final_pairs.src.size()));
    return res;
}

} // namespace occu::curation
