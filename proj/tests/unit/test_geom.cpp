// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/geom/box.hpp"
#include "occu/geom/camera.hpp"
#include "occu/geom/lidar_rig.hpp"
#include "occu/geom/transform.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace occu {
namespace {

using geom::RigidTransform;

TEST(RigidTransform, ComposeWithInverseIsIdentity) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto T = test::random_motion(rng, 170.0, 20.0);
        const auto I = T * T.inverse();
        EXPECT_LT((I.rotation() - Mat3::Identity()).norm(), 1e-12);
        EXPECT_LT(I.translation().norm(), 1e-12);
        const Vec3 p(1.0, -2.0, 0.5);
        EXPECT_LT((T.inverse().apply(T.apply(p)) - p).norm(), 1e-12);
    }
}

TEST(RigidTransform, CompositionOrderMatchesMatrices) {
    std::mt19937_64 rng(4);
    const auto A = test::random_motion(rng, 90.0, 5.0), B = test::random_motion(rng, 90.0, 5.0);
    EXPECT_LT(((A * B).matrix() - A.matrix() * B.matrix()).norm(), 1e-12);
}

TEST(RigidTransform, QuaternionRoundTrip) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto T = test::random_motion(rng, 179.0, 3.0);
        const auto back = RigidTransform::from_quaternion(T.quaternion_wxyz(), T.translation());
        EXPECT_LT((back.rotation() - T.rotation()).norm(), 1e-12);
    }
}

TEST(RigidTransform, AxisAngleReportsAngle) {
    const auto T = RigidTransform::from_axis_angle(Vec3(0, 0, 1), 0.3);
    EXPECT_NEAR(T.rotation_angle(), 0.3, 1e-12);
    EXPECT_LT((T.apply(Vec3(1, 0, 0)) - Vec3(std::cos(0.3), std::sin(0.3), 0)).norm(), 1e-12);
}

TEST(OrientedBox, ContainmentIsInclusive) {
    const Mat3 R = RigidTransform::from_axis_angle(Vec3(0, 0, 1), std::numbers::pi / 2).rotation();
    const geom::OrientedBox box(Vec3(1, 2, 0), R, Vec3(2, 1, 0.5), 2, "a");
    // Local x maps to world y after the quarter turn.
    EXPECT_TRUE(box.contains(Vec3(1, 4, 0)));
    EXPECT_TRUE(box.contains(Vec3(2, 2, 0.5)));
    EXPECT_FALSE(box.contains(Vec3(3, 2, 0)));
    EXPECT_FALSE(box.contains(Vec3(1, 2, 0.51)));
}

TEST(OrientedBox, RejectsNonPositiveExtents) {
    EXPECT_THROW(geom::OrientedBox(Vec3::Zero(), Mat3::Identity(), Vec3(1, 0, 1), 2, "a"), InvalidArgument);
}

TEST(OrientedBox, TransformedKeepsContainment) {
    const geom::OrientedBox box(Vec3(1, 0, 0), Mat3::Identity(), Vec3(1, 1, 1), 2, "a");
    const auto T = RigidTransform::from_axis_angle(Vec3(1, 1, 0).normalized(), 0.7, Vec3(3, -1, 2));
    const auto moved = box.transformed(T);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const Vec3 p(test::uniform(rng, -1, 3), test::uniform(rng, -2, 2), test::uniform(rng, -2, 2));
        EXPECT_EQ(box.contains(p), moved.contains(T.apply(p)));
    }
}

geom::CameraModel make_camera(const geom::Distortion &d = {}) {
    geom::CameraModel::Params p;
    p.fx = 400;
    p.fy = 380;
    p.cx = 320;
    p.cy = 240;
    p.width = 640;
    p.height = 480;
    p.distortion = d;
    return geom::CameraModel(p);
}

TEST(CameraModel, PinholeProjection) {
    const auto cam = make_camera();
    const auto px = cam.project(Vec3(1.0, -0.5, 4.0));
    ASSERT_TRUE(px);
    EXPECT_DOUBLE_EQ(px->uv.x(), 400 * 0.25 + 320);
    EXPECT_DOUBLE_EQ(px->uv.y(), 380 * -0.125 + 240);
    EXPECT_DOUBLE_EQ(px->depth, 4.0);
    EXPECT_FALSE(cam.project(Vec3(0, 0, -1)));
}

TEST(CameraModel, RadialDistortionByHand) {
    geom::Distortion d;
    d.k1 = -0.3;
    const auto cam = make_camera(d);
    // r^2 = 0.25: scale 1 - 0.3 * 0.25.
    const Vec2 xy = cam.distort(Vec2(0.5, 0.0));
    EXPECT_DOUBLE_EQ(xy.x(), 0.5 * 0.925);
    EXPECT_DOUBLE_EQ(xy.y(), 0.0);
}

TEST(CameraModel, JacobianMatchesFiniteDifferences) {
    geom::Distortion d;
    d.k1 = -0.3;
    d.k2 = 0.08;
    d.k3 = -0.01;
    d.p1 = 0.002;
    d.p2 = -0.003;
    for (auto kind : {geom::ProjectionKind::Pinhole, geom::ProjectionKind::Orthographic}) {
        auto p = make_camera(d).params();
        p.kind = kind;
        const geom::CameraModel cam(p);
        std::mt19937_64 rng(11);
        for (int i = 0; i < 50; ++i) {
            const Vec3 x(test::uniform(rng, -2, 2), test::uniform(rng, -1.5, 1.5), test::uniform(rng, 2, 8));
            const auto J = cam.jacobian_camera(x);
            for (int a = 0; a < 3; ++a) {
                const double h = 1e-6;
                Vec3 xp = x, xm = x;
                xp[a] += h;
                xm[a] -= h;
                const Vec2 fd = (cam.project_camera(xp) - cam.project_camera(xm)) / (2 * h);
                EXPECT_NEAR(J(0, a), fd.x(), 1e-4 * (1 + std::abs(fd.x())));
                EXPECT_NEAR(J(1, a), fd.y(), 1e-4 * (1 + std::abs(fd.y())));
            }
        }
    }
}

TEST(CameraModel, RejectsBadIntrinsics) {
    geom::CameraModel::Params p;
    p.fx = 0;
    EXPECT_THROW(geom::CameraModel{p}, InvalidArgument);
}

TEST(LidarRig, GridPatternSpansRequestedAngles) {
    const auto pat = geom::grid_pattern(-0.2, 0.1, 4, -1.0, 1.0, 5);
    ASSERT_EQ(pat.size(), 20u);
    double emin = 1e9, emax = -1e9, amin = 1e9, amax = -1e9;
    for (const auto &b : pat) {
        emin = std::min(emin, b.elevation);
        emax = std::max(emax, b.elevation);
        amin = std::min(amin, b.azimuth);
        amax = std::max(amax, b.azimuth);
    }
    EXPECT_DOUBLE_EQ(emin, -0.2);
    EXPECT_DOUBLE_EQ(emax, 0.1);
    EXPECT_DOUBLE_EQ(amin, -1.0);
    EXPECT_DOUBLE_EQ(amax, 1.0);
}

TEST(LidarRig, FullTurnDoesNotRepeatAzimuth) {
    const auto pat = geom::grid_pattern(0, 0, 1, -std::numbers::pi, std::numbers::pi, 8);
    for (std::size_t i = 1; i < pat.size(); ++i)
        EXPECT_NEAR(pat[i].azimuth - pat[i - 1].azimuth, std::numbers::pi / 4, 1e-12);
}

TEST(LidarRig, BeamDirectionConvention) {
    EXPECT_LT((geom::beam_direction({0.0, 0.0}) - Vec3::UnitX()).norm(), 1e-15);
    EXPECT_LT((geom::beam_direction({std::numbers::pi / 2, 0.0}) - Vec3::UnitY()).norm(), 1e-15);
    EXPECT_LT((geom::beam_direction({0.0, std::numbers::pi / 2}) - Vec3::UnitZ()).norm(), 1e-15);
}

TEST(LidarRig, RaysFollowEgoAndSensorPoses) {
    geom::LidarSensor s;
    s.origin = Vec3(1, 0, 2);
    s.orientation = RigidTransform::from_axis_angle(Vec3::UnitZ(), std::numbers::pi / 2);
    s.pattern = {{0.0, 0.0}};
    s.max_range = 30;
    const geom::LidarRig rig({s, s});
    const auto ego = RigidTransform::from_axis_angle(Vec3::UnitZ(), std::numbers::pi / 2, Vec3(10, 0, 0));
    const auto rays = geom::rays_world(rig, ego, {1});
    ASSERT_EQ(rays.size(), 1u);
    EXPECT_EQ(rays[0].sensor, 1u);
    EXPECT_LT((rays[0].origin - Vec3(10, 1, 2)).norm(), 1e-12);
    EXPECT_LT((rays[0].dir - Vec3(-1, 0, 0)).norm(), 1e-12);
    EXPECT_DOUBLE_EQ(rays[0].max_range, 30);
    EXPECT_THROW(geom::rays_world(rig, ego, {2}), InvalidArgument);
    EXPECT_THROW(geom::rays_world(rig, ego, {}), InvalidArgument);
}

} // namespace
} // namespace occu
