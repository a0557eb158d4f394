// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/common.hpp"
#include "occu/geom/point_cloud.hpp"
#include "occu/geom/camera.hpp"
#include "occu/geom/transform.hpp"
#include "occu/splat/gaussian.hpp"
#include "occu/splat/projection.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#include <unistd.h>

namespace occu::test {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string &tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("occu_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    const std::filesystem::path &path() const { return path_; }
    std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline double uniform(std::mt19937_64 &rng, double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
}

inline Vec3 random_unit(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vec3 v(n(rng), n(rng), n(rng));
    return v.normalized();
}

/// Structured scene for registration tests: a ground patch, two walls and
/// three boxes, sampled on jittered lattices around the origin.
inline geom::PointCloud structured_scan(std::mt19937_64 &rng, double spacing = 0.2) {
    geom::PointCloud pc;
    auto jitter = [&] { return uniform(rng, -0.3, 0.3) * spacing; };
    for (double x = -15; x <= 15; x += spacing)
        for (double y = -10; y <= 10; y += spacing) pc.xyz.emplace_back(x + jitter(), y + jitter(), 0.0);
    for (double x = -15; x <= 15; x += spacing)
        for (double z = 0; z <= 4; z += spacing) {
            pc.xyz.emplace_back(x + jitter(), 10.0, z + jitter());
            pc.xyz.emplace_back(x + jitter(), -10.0, z + jitter());
        }
    for (double y = -10; y <= 10; y += spacing)
        for (double z = 0; z <= 4; z += spacing) pc.xyz.emplace_back(15.0, y + jitter(), z + jitter());
    const Vec3 boxes[3][2] = {{{-6, -4, 0}, {-3, -2, 2}}, {{2, 3, 0}, {4, 7, 3}}, {{7, -6, 0}, {9, -5, 1.5}}};
    for (const auto &b : boxes) {
        const Vec3 lo = b[0], hi = b[1];
        for (double u = lo.x(); u <= hi.x(); u += spacing)
            for (double z = lo.z(); z <= hi.z(); z += spacing) {
                pc.xyz.emplace_back(u, lo.y(), z);
                pc.xyz.emplace_back(u, hi.y(), z);
            }
        for (double v = lo.y(); v <= hi.y(); v += spacing)
            for (double z = lo.z(); z <= hi.z(); z += spacing) {
                pc.xyz.emplace_back(lo.x(), v, z);
                pc.xyz.emplace_back(hi.x(), v, z);
            }
        for (double u = lo.x(); u <= hi.x(); u += spacing)
            for (double v = lo.y(); v <= hi.y(); v += spacing) pc.xyz.emplace_back(u, v, hi.z());
    }
    return pc;
}

/// Random rigid motion with rotation <= max_deg about a random axis and
/// translation norm <= max_t.
inline geom::RigidTransform random_motion(std::mt19937_64 &rng, double max_deg, double max_t) {
    const double ang = uniform(rng, 0.0, max_deg) * M_PI / 180.0;
    const Vec3 t = random_unit(rng) * uniform(rng, 0.0, max_t);
    return geom::RigidTransform::from_axis_angle(random_unit(rng), ang, t);
}

/// Random symmetric positive definite matrix with eigenvalues in
/// [lo^2, hi^2] and a random orientation.
inline Mat3 random_spd(std::mt19937_64 &rng, double lo, double hi) {
    const auto R = geom::RigidTransform::from_axis_angle(random_unit(rng), uniform(rng, 0, M_PI)).rotation();
    Vec3 s(uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi));
    Mat3 S = R * s.cwiseProduct(s).asDiagonal() * R.transpose();
    return 0.5 * (S + S.transpose());
}

/// Square pinhole camera at the origin looking down +z.
inline geom::CameraModel square_camera(int size, double focal, const geom::Distortion &d = {}) {
    geom::CameraModel::Params p;
    p.fx = p.fy = focal;
    p.cx = p.cy = (size - 1) / 2.0;
    p.width = p.height = size;
    p.distortion = d;
    return geom::CameraModel(p);
}

/// Random Gaussians inside the camera frustum (depth 2-20 m) with mixed
/// sizes, opacities and labels 1..10.
inline std::vector<splat::GaussianPrimitive> random_gaussian_scene(std::mt19937_64 &rng,
                                                                   const geom::CameraModel &cam,
                                                                   std::size_t n) {
    std::vector<splat::GaussianPrimitive> out;
    const auto &p = cam.params();
    while (out.size() < n) {
        const double z = uniform(rng, 2.0, 20.0);
        const double u = uniform(rng, -8.0, p.width + 8.0), v = uniform(rng, -8.0, p.height + 8.0);
        splat::GaussianPrimitive g;
        g.mu = Vec3((u - p.cx) / p.fx * z, (v - p.cy) / p.fy * z, z);
        g.sigma = random_spd(rng, 0.01, 0.06 * z);
        g.alpha = uniform(rng, 0.05, 0.99);
        g.label = static_cast<ClassId>(1 + rng() % 10);
        out.push_back(g);
    }
    return out;
}

/// Per-pixel reference compositing: every Gaussian is tested against every
/// pixel, front to back by (depth, input index), without tiles, bounds or
/// early termination.
struct ReferencePixel {
    double depth = 0.0;
    double coverage = 0.0;
    std::array<double, 256> class_w{};
};

inline std::vector<ReferencePixel> reference_composite(const std::vector<splat::GaussianPrimitive> &gs,
                                                       const geom::CameraModel &cam, bool use_ut,
                                                       double alpha_min) {
    struct P {
        splat::Projected2D p;
        Mat2 conic;
        double alpha;
        ClassId label;
        std::size_t order;
    };
    std::vector<P> ps;
    const double no_cull = 1e300;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const auto pr = use_ut ? splat::project_ut(gs[i], cam, {}, no_cull) : splat::project_ewa(gs[i], cam, no_cull);
        if (!pr) continue;
        ps.push_back({*pr, pr->cov.inverse(), gs[i].alpha, gs[i].label, i});
    }
    std::sort(ps.begin(), ps.end(), [](const P &a, const P &b) {
        return a.p.depth < b.p.depth || (a.p.depth == b.p.depth && a.order < b.order);
    });
    std::vector<ReferencePixel> out(static_cast<std::size_t>(cam.width()) * cam.height());
    for (int v = 0; v < cam.height(); ++v)
        for (int u = 0; u < cam.width(); ++u) {
            auto &px = out[static_cast<std::size_t>(v) * cam.width() + u];
            double T = 1.0, d = 0.0;
            for (const auto &g : ps) {
                const Vec2 x(u - g.p.mean.x(), v - g.p.mean.y());
                const double a = g.alpha * std::exp(-0.5 * x.dot(g.conic * x));
                if (a < alpha_min) continue;
                d += T * a * g.p.depth;
                px.class_w[g.label] += T * a;
                T *= 1.0 - a;
            }
            px.coverage = 1.0 - T;
            px.depth = px.coverage > 0.0 ? d / px.coverage : 0.0;
        }
    return out;
}

} // namespace occu::test
