// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/lidar/simulate.hpp"

#include "occu/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace occu::lidar {

Simulator::Simulator(const grid::SemanticOccupancyGrid &grid, LidarConfig config,
                     std::shared_ptr<const HeadModel> head, HistogramEmbedder embedder)
    : grid_(grid), cfg_(std::move(config)), field_(grid), head_(std::move(head)),
      embedder_(std::move(embedder)) {
    if (!head_) head_ = std::make_shared<AnalyticHead>();
    if (cfg_.fourier_frequencies < 1)
        throw InvalidArgument("lidar: fourier_frequencies must be >= 1");
}

RayResult Simulator::simulate_ray(const geom::Ray &ray, const VecX &f_r, VecX *v_r_out) const {
    RayResult rr;
    rr.sensor = ray.sensor;
    rr.index = ray.index;
    rr.origin = ray.origin;
    rr.dir = ray.dir;

    const auto samples =
        sample_prior(ray, grid_, cfg_.sampling, ray_seed(cfg_.seed, ray.sensor, ray.index));
    const VecX h = occupancy_histogram(samples);
    rr.hist.assign(h.data(), h.data() + h.size());

    const std::size_t n = samples.resampled.size();
    std::vector<double> f(n);
    std::vector<Vec3> grad(n);
    for (std::size_t i = 0; i < n; ++i)
        f[i] = field_.value_grad(ray.origin + samples.resampled[i] * ray.dir, grad[i]);
    const auto vr = volume_render(samples.resampled, f, cfg_.render);

    // Weighted feature sum with u_i = (f, grad f, f_r, e_h, e_p); the last three are per ray.
    const VecX e_h = embedder_.embed(h);
    const Vec6 e_p = plucker(ray);
    const Eigen::Index dim = 4 + f_r.size() + e_h.size() + 6;
    VecX v_r = VecX::Zero(dim);
    for (std::size_t i = 0; i < n; ++i) {
        const double w = vr.weights[i];
        if (w == 0.0) continue;
        v_r[0] += w * f[i];
        v_r.segment<3>(1) += w * grad[i];
    }
    v_r.segment(4, f_r.size()) = vr.weight_sum * f_r;
    v_r.segment(4 + f_r.size(), e_h.size()) = vr.weight_sum * e_h;
    v_r.tail<6>() = vr.weight_sum * e_p;

    HitInfo hit;
    rr.dropped_by_prior = samples.dropped_by_prior;
    rr.dropped = samples.dropped_by_prior || vr.dropped;
    hit.dropped = rr.dropped;
    if (!rr.dropped) {
        rr.depth = vr.depth;
        hit.depth = vr.depth;
        hit.position = ray.origin + vr.depth * ray.dir;

        // Class of the heaviest sample's voxel; fall back to lighter ones.
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return vr.weights[a] > vr.weights[b];
        });
        for (auto i : order) {
            if (vr.weights[i] == 0.0) break;
            const ClassId c = grid_.lookup(ray.origin + samples.resampled[i] * ray.dir);
            if (c != 0) {
                hit.class_id = c;
                break;
            }
        }

        Vec3 g;
        field_.value_grad(hit.position, g);
        const double gn = g.norm();
        hit.cos_incidence = gn > 0.0 ? std::abs(ray.dir.dot(g) / gn) : 1.0;
        rr.class_id = hit.class_id;
        rr.cos_incidence = hit.cos_incidence;
    }
    rr.head = head_->evaluate(v_r, hit);
    if (v_r_out) *v_r_out = std::move(v_r);
    return rr;
}

SimulationResult Simulator::run(const geom::LidarRig &rig, const geom::RigidTransform &ego_pose,
                                const std::vector<std::size_t> &active) const {
    const auto rays = geom::rays_world(rig, ego_pose, active);
    const auto emb = sensor_embedding(rig, active, cfg_.fourier_frequencies);

    SimulationResult out;
    out.rays.resize(rays.size());
    parallel_for(rays.size(), 64, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) out.rays[i] = simulate_ray(rays[i], emb.f_r);
    });

    std::vector<RangeReturn> returns;
    for (const auto &r : out.rays) {
        if (r.dropped) {
            if (r.dropped_by_prior)
                ++out.dropped_by_prior;
            else
                ++out.dropped_by_render;
            continue;
        }
        out.points.xyz.push_back(r.origin + r.depth * r.dir);
        out.points.intensity.push_back(static_cast<float>(r.head.intensity));
        out.points.label.push_back(r.class_id);
        out.drop_prob.push_back(static_cast<float>(r.head.drop_prob));
        out.sensor_id.push_back(r.sensor);
        out.ray_id.push_back(r.index);
        returns.push_back({ego_pose.rotation().transpose() * r.dir, r.depth, r.hist.data()});
    }
    out.range_map = range_project(returns, rig, cfg_.range_rows, cfg_.range_cols, kHistBins);
    return out;
}

SimulationResult simulate(const grid::SemanticOccupancyGrid &grid, const geom::LidarRig &rig,
                          const geom::RigidTransform &ego_pose,
                          const std::vector<std::size_t> &active, const LidarConfig &config) {
    return Simulator(grid, config).run(rig, ego_pose, active);
}

} // namespace occu::lidar
