// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/parallel.hpp"
#include "occu/splat/gaussian.hpp"
#include "occu/splat/projection.hpp"
#include "occu/splat/rasterizer.hpp"
#include "occu/splat/render.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace occu {
namespace {

using splat::GaussianPrimitive;

TEST(UtParams, WeightsAreNormalised) {
    for (double alpha : {0.5, 1.0, 1.7}) {
        splat::UtParams ut;
        ut.alpha = alpha;
        const auto w = ut.weights();
        double s = 0.0;
        for (double v : w.mean) s += v;
        EXPECT_NEAR(s, 1.0, 1e-12);
        EXPECT_NEAR(w.cov[0] - w.mean[0], 1.0 - alpha * alpha + ut.beta, 1e-12);
    }
    splat::UtParams bad;
    bad.alpha = 0.1;
    bad.kappa = -3.5; // 3 + lambda = alpha^2 (3 + kappa) < 0
    EXPECT_THROW(bad.validate(), InvalidArgument);
}

geom::CameraModel random_affine_camera(std::mt19937_64 &rng) {
    geom::CameraModel::Params p;
    p.kind = geom::ProjectionKind::Orthographic;
    p.fx = test::uniform(rng, 0.5, 3.0);
    p.fy = test::uniform(rng, 0.5, 3.0);
    p.cx = test::uniform(rng, -5, 5);
    p.cy = test::uniform(rng, -5, 5);
    p.width = p.height = 64;
    p.world_to_camera = test::random_motion(rng, 180.0, 1.0);
    return geom::CameraModel(p);
}

// Closed-form pushforward through u = A (R x + t) + c.
std::pair<Vec2, Mat2> affine_pushforward(const GaussianPrimitive &g, const geom::CameraModel &cam) {
    const auto &p = cam.params();
    Eigen::Matrix<double, 2, 3> A = Eigen::Matrix<double, 2, 3>::Zero();
    A(0, 0) = p.fx;
    A(1, 1) = p.fy;
    const Mat3 &R = p.world_to_camera.rotation();
    const Vec3 xc = R * g.mu + p.world_to_camera.translation();
    const Vec2 mean(p.fx * xc.x() + p.cx, p.fy * xc.y() + p.cy);
    const Eigen::Matrix<double, 2, 3> M = A * R;
    return {mean, M * g.sigma * M.transpose()};
}

TEST(ProjectUt, ExactForAffineCameras) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const auto cam = random_affine_camera(rng);
        GaussianPrimitive g;
        g.sigma = test::random_spd(rng, 0.1, 1.5);
        // Keep the mean in front of the camera.
        g.mu = cam.world_to_camera().inverse().apply(Vec3(test::uniform(rng, -2, 2), test::uniform(rng, -2, 2),
                                                          test::uniform(rng, 20, 30)));
        const auto got = splat::project_ut(g, cam, {}, 1e300);
        ASSERT_TRUE(got);
        const auto [mean, cov] = affine_pushforward(g, cam);
        EXPECT_LT((got->mean - mean).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_LT((got->cov - cov).cwiseAbs().maxCoeff(), 1e-9);
        const auto ewa = splat::project_ewa(g, cam, 1e300);
        ASSERT_TRUE(ewa);
        EXPECT_LT((ewa->cov - cov).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(ProjectUt, CloserToMonteCarloThanEwaUnderDistortion) {
    geom::Distortion d;
    d.k1 = -0.3;
    const auto cam = test::square_camera(640, 500.0, d);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n01;
    int ut_better = 0, total = 0;
    for (int i = 0; i < 20; ++i) {
        const double z = test::uniform(rng, 3, 20);
        GaussianPrimitive g;
        g.mu = Vec3(test::uniform(rng, 0.3, 0.6) * z, test::uniform(rng, -0.4, 0.4) * z, z);
        g.sigma = 0.05 * 0.05 * Mat3::Identity();
        const auto ut = splat::project_ut(g, cam, {}, 1e300);
        const auto ewa = splat::project_ewa(g, cam, 1e300);
        ASSERT_TRUE(ut && ewa);
        Vec2 acc = Vec2::Zero();
        const int pairs = 100000;
        for (int k = 0; k < pairs; ++k) {
            const Vec3 e(n01(rng), n01(rng), n01(rng));
            acc += cam.project_camera(g.mu + 0.05 * e) + cam.project_camera(g.mu - 0.05 * e);
        }
        const Vec2 mc = acc / (2.0 * pairs);
        const double e_ut = (ut->mean - mc).norm(), e_ewa = (ewa->mean - mc).norm();
        EXPECT_LT(e_ut, 0.5);
        ut_better += e_ut < e_ewa;
        ++total;
    }
    EXPECT_GE(ut_better, total * 8 / 10);
}

TEST(ProjectUt, RejectsIndefiniteCovariance) {
    GaussianPrimitive g;
    g.mu = Vec3(0, 0, 5);
    g.sigma = Mat3::Identity();
    g.sigma(2, 2) = -1;
    EXPECT_THROW(splat::project_ut(g, test::square_camera(32, 30)), InvalidArgument);
}

TEST(Projection, CullsBehindCameraAndOffImage) {
    const auto cam = test::square_camera(32, 30);
    GaussianPrimitive g;
    g.sigma = 0.01 * Mat3::Identity();
    g.mu = Vec3(0, 0, -3);
    EXPECT_FALSE(splat::project_ewa(g, cam));
    EXPECT_FALSE(splat::project_ut(g, cam));
    g.mu = Vec3(50, 0, 3);
    EXPECT_FALSE(splat::project_ewa(g, cam));
    EXPECT_FALSE(splat::project_ut(g, cam));
    g.mu = Vec3(0, 0, 3);
    EXPECT_TRUE(splat::project_ut(g, cam));
}

void expect_matches_reference(const std::vector<GaussianPrimitive> &gs, const geom::CameraModel &cam,
                              splat::Backend backend) {
    splat::RasterOptions opt;
    opt.backend = backend;
    const auto maps = splat::rasterize(gs, cam, opt);
    const auto ref = test::reference_composite(gs, cam, backend == splat::Backend::Ut, opt.alpha_min);
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const auto &r = ref[i];
        if (r.coverage == 0.0) {
            EXPECT_EQ(maps.coverage[i], 0.0);
            continue;
        }
        ASSERT_GT(maps.coverage[i], 0.0) << i;
        EXPECT_LT(std::abs(maps.depth[i] - r.depth) / r.depth, 1e-5) << i;
        // Compare labels only where the reference winner is unambiguous.
        std::array<double, 256> w = r.class_w;
        const auto best = std::max_element(w.begin(), w.end()) - w.begin();
        const double top = w[best];
        w[best] = -1.0;
        if (top - *std::max_element(w.begin(), w.end()) > 1e-6) EXPECT_EQ(maps.semantic[i], best) << i;
    }
}

TEST(Rasterize, MatchesReferenceCompositing) {
    std::mt19937_64 rng(31);
    const auto cam = test::square_camera(48, 40.0);
    for (int s = 0; s < 6; ++s) {
        const auto gs = test::random_gaussian_scene(rng, cam, 50 + 60 * s);
        expect_matches_reference(gs, cam, s % 2 ? splat::Backend::Ewa : splat::Backend::Ut);
    }
}

TEST(Rasterize, TileSizeAndThreadsDoNotChangeOutput) {
    std::mt19937_64 rng(32);
    const auto cam = test::square_camera(50, 40.0);
    const auto gs = test::random_gaussian_scene(rng, cam, 300);
    splat::RasterOptions base;
    const auto ref = splat::rasterize(gs, cam, base);
    for (int tile : {1, 7, 16, 64}) {
        for (std::size_t threads : {1u, 3u}) {
            set_num_threads(threads);
            auto opt = base;
            opt.tile = tile;
            const auto m = splat::rasterize(gs, cam, opt);
            EXPECT_EQ(m.depth, ref.depth);
            EXPECT_EQ(m.semantic, ref.semantic);
        }
    }
    set_num_threads(0);
}

TEST(Rasterize, DiagnosticsCountFaintCulledAndSingular) {
    const auto cam = test::square_camera(32, 30);
    std::vector<GaussianPrimitive> gs(4);
    for (auto &g : gs) {
        g.mu = Vec3(0, 0, 4);
        g.sigma = 0.01 * Mat3::Identity();
        g.alpha = 0.9;
        g.label = 2;
    }
    gs[1].alpha = 1e-3;                           // faint
    gs[2].mu = Vec3(0, 0, -4);                    // behind
    gs[3].sigma = Vec3(1e-20, 1, 1).asDiagonal(); // edge-on sheet
    splat::RasterOptions opt;
    opt.backend = splat::Backend::Ewa;
    const auto m = splat::rasterize(gs, cam, opt);
    EXPECT_EQ(m.diagnostics.input, 4u);
    EXPECT_EQ(m.diagnostics.faint, 1u);
    EXPECT_EQ(m.diagnostics.culled, 1u);
    EXPECT_EQ(m.diagnostics.singular, 1u);
    EXPECT_EQ(m.diagnostics.splatted, 1u);
}

TEST(Rasterize, EmptySceneHasNoCoverage) {
    const auto m = splat::rasterize({}, test::square_camera(16, 10));
    EXPECT_EQ(m.covered_pixels(), 0u);
    EXPECT_EQ(m.depth, std::vector<double>(256, 0.0));
}

TEST(Rasterize, OpaqueFrontSplatHidesBack) {
    const auto cam = test::square_camera(9, 8);
    GaussianPrimitive front, back;
    front.mu = Vec3(0, 0, 2);
    front.sigma = 0.5 * Mat3::Identity();
    front.alpha = 1.0;
    front.label = 3;
    back = front;
    back.mu.z() = 5;
    back.label = 7;
    const auto m = splat::rasterize({back, front}, cam);
    const auto c = m.index(4, 4);
    EXPECT_EQ(m.semantic[c], 3);
    EXPECT_NEAR(m.depth[c], 2.0, 1e-12);
}

TEST(OccupancyToGaussians, OnePrimitivePerOccupiedVoxel) {
    grid::GridGeometry g;
    g.dims = {4, 4, 4};
    grid::SemanticOccupancyGrid grid(g);
    grid.set({1, 2, 3}, 5);
    grid.set({0, 0, 0}, 2);
    const auto gs = splat::occupancy_to_gaussians(grid, 0.02, 0.9);
    ASSERT_EQ(gs.size(), 2u);
    EXPECT_EQ(gs[0].label, 2);
    EXPECT_EQ(gs[1].mu, g.voxel_center({1, 2, 3}));
    EXPECT_DOUBLE_EQ(gs[1].sigma(0, 0), 0.02 * 0.02);
    EXPECT_DOUBLE_EQ(gs[1].alpha, 0.9);
    EXPECT_THROW(splat::occupancy_to_gaussians(grid, 0.0), InvalidArgument);
}

TEST(RenderViews, RequiresCameras) {
    grid::GridGeometry g;
    g.dims = {2, 2, 2};
    EXPECT_THROW(splat::render_views(grid::SemanticOccupancyGrid(g), {}), InvalidArgument);
}

} // namespace
} // namespace occu
