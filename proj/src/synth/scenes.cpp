// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/synth/scenes.hpp"

#include "occu/curation/labeling.hpp"
#include "occu/grid/class_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace occu::synth {

namespace cls = grid::classes;
constexpr double kDeg = std::numbers::pi / 180.0;

std::optional<double> cast_ray(const grid::SemanticOccupancyGrid &grid, const geom::Ray &ray) {
    const auto &g = grid.geometry();
    const Vec3 lo = g.origin, hi = g.max_corner();
    double t0 = 0.0, t1 = ray.max_range;
    for (int a = 0; a < 3; ++a) {
        const double d = ray.dir[a];
        if (d == 0.0) {
            if (ray.origin[a] < lo[a] || ray.origin[a] >= hi[a]) return std::nullopt;
            continue;
        }
        double ta = (lo[a] - ray.origin[a]) / d, tb = (hi[a] - ray.origin[a]) / d;
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
    }
    if (t0 > t1) return std::nullopt;

    const Vec3 p = ray.origin + t0 * ray.dir;
    grid::Index3 v = g.world_to_voxel(p);
    for (int a = 0; a < 3; ++a) v[a] = std::clamp(v[a], 0, g.dims[a] - 1);

    int step[3];
    double t_max[3], t_delta[3];
    for (int a = 0; a < 3; ++a) {
        const double d = ray.dir[a];
        if (d > 0) {
            step[a] = 1;
            t_max[a] = (g.origin[a] + (v[a] + 1) * g.voxel_size[a] - ray.origin[a]) / d;
            t_delta[a] = g.voxel_size[a] / d;
        } else if (d < 0) {
            step[a] = -1;
            t_max[a] = (g.origin[a] + v[a] * g.voxel_size[a] - ray.origin[a]) / d;
            t_delta[a] = -g.voxel_size[a] / d;
        } else {
            step[a] = 0;
            t_max[a] = t_delta[a] = std::numeric_limits<double>::infinity();
        }
    }
    double t_enter = t0;
    while (g.in_bounds(v) && t_enter <= t1) {
        if (grid.at(v) != 0) return t_enter;
        int a = 0;
        if (t_max[1] < t_max[a]) a = 1;
        if (t_max[2] < t_max[a]) a = 2;
        t_enter = t_max[a];
        t_max[a] += t_delta[a];
        v[a] += step[a];
    }
    return std::nullopt;
}

geom::CameraModel forward_camera(const Vec3 &position, double yaw, int width, int height,
                                 double focal, const geom::Distortion &distortion) {
    // Camera axes: z forward, x right, y down.
    const Vec3 fwd(std::cos(yaw), std::sin(yaw), 0.0);
    const Vec3 right(std::sin(yaw), -std::cos(yaw), 0.0);
    const Vec3 down(0.0, 0.0, -1.0);
    Mat3 R;
    R.row(0) = right;
    R.row(1) = down;
    R.row(2) = fwd;
    geom::CameraModel::Params p;
    p.name = "front";
    p.fx = p.fy = focal;
    p.cx = (width - 1) / 2.0;
    p.cy = (height - 1) / 2.0;
    p.width = width;
    p.height = height;
    p.distortion = distortion;
    p.world_to_camera = geom::RigidTransform(R, -(R * position));
    return geom::CameraModel(p);
}

namespace {

// Marks every voxel whose center lies in [lo, hi] (inclusive).
void fill_box(grid::SemanticOccupancyGrid &grid, const Vec3 &lo, const Vec3 &hi, ClassId c) {
    const auto &g = grid.geometry();
    grid::Index3 a, b;
    for (int k = 0; k < 3; ++k) {
        const double fa = std::ceil((lo[k] - g.origin[k]) / g.voxel_size[k] - 0.5);
        const double fb = std::floor((hi[k] - g.origin[k]) / g.voxel_size[k] - 0.5);
        a[k] = static_cast<int>(std::clamp(fa, 0.0, static_cast<double>(g.dims[k])));
        b[k] = static_cast<int>(std::clamp(fb, -1.0, static_cast<double>(g.dims[k] - 1)));
    }
    for (int z = a.z(); z <= b.z(); ++z)
        for (int y = a.y(); y <= b.y(); ++y)
            for (int x = a.x(); x <= b.x(); ++x) grid.set({x, y, z}, c);
}

double gauss(std::mt19937_64 &rng) {
    const double u1 = 1.0 - to_unit_double(rng()), u2 = to_unit_double(rng());
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace

Scene make_wall(const WallParams &p) {
    p.geometry.validate();
    grid::SemanticOccupancyGrid grid(p.geometry);
    const double eps = 1e-9;
    fill_box(grid, Vec3(p.distance + eps, -p.half_width, -1e9),
             Vec3(p.distance + p.thickness - eps, p.half_width, 1e9), cls::kBarrier);

    geom::LidarSensor s;
    s.pattern = geom::grid_pattern(-8 * kDeg, 8 * kDeg, static_cast<int>(p.rows), -30 * kDeg,
                                   30 * kDeg, static_cast<int>(p.cols));
    s.max_range = p.max_range;
    Scene sc{"wall", std::move(grid), geom::LidarRig({s}), {}, {}, {}};
    sc.cameras.push_back(forward_camera(Vec3::Zero(), 0.0));
    return sc;
}

Scene make_box_street(const BoxStreetParams &p) {
    p.geometry.validate();
    const auto &g = p.geometry;
    grid::SemanticOccupancyGrid grid(g);
    const Vec3 lo = g.origin, hi = g.max_corner();

    // Ground: one voxel layer whose top face is z = 0.
    const double gz = -g.voxel_size.z() / 2;
    const double eps = 1e-9;
    fill_box(grid, Vec3(lo.x(), lo.y(), gz - eps), Vec3(hi.x(), hi.y(), gz + eps), cls::kOtherGround);
    fill_box(grid, Vec3(lo.x(), -6.0, gz - eps), Vec3(hi.x(), 6.0, gz + eps), cls::kRoad);
    for (double x = std::ceil(lo.x() / 6.0) * 6.0; x < hi.x(); x += 6.0)
        fill_box(grid, Vec3(x, -0.125, gz - eps), Vec3(x + 3.0, 0.125, gz + eps), cls::kRoadLine);

    std::mt19937_64 rng(p.seed);
    auto uni = [&](double a, double b) { return a + (b - a) * to_unit_double(rng()); };
    auto snap = [&](double v) { return std::round(v / 0.25) * 0.25; };

    // Buildings along both sides of the street.
    for (int i = 0; i < p.buildings; ++i) {
        const double side = i % 2 == 0 ? 1.0 : -1.0;
        const double x0 = snap(uni(lo.x() + 2, hi.x() - 15));
        const double y0 = side * snap(uni(10.0, 16.0));
        const double len = snap(uni(6.0, 14.0)), depth = snap(uni(5.0, 10.0));
        const double height = snap(uni(3.0, std::min(10.0, hi.z() - 0.5)));
        const double ya = side > 0 ? y0 : y0 - depth, yb = side > 0 ? y0 + depth : y0;
        fill_box(grid, Vec3(x0, ya, 0.0), Vec3(x0 + len, yb, height), cls::kGenericObject);
    }
    // Parked cars on the road edges.
    for (int i = 0; i < p.cars; ++i) {
        const double side = i % 2 == 0 ? 1.0 : -1.0;
        const double x0 = snap(uni(-30.0, 30.0));
        if (std::abs(x0) < 4.0) continue; // keep the sensor clear
        const double y0 = side * 4.5;
        fill_box(grid, Vec3(x0 - 2.25, y0 - 1.0, 0.25), Vec3(x0 + 2.25, y0 + 1.0, 1.5),
                 cls::kVehicle);
    }

    geom::LidarSensor s;
    s.origin = Vec3(0.0, 0.0, p.sensor_height);
    s.pattern = geom::grid_pattern(-25 * kDeg, 10 * kDeg, static_cast<int>(p.rows),
                                   -std::numbers::pi, std::numbers::pi, static_cast<int>(p.cols));
    s.max_range = p.max_range;
    Scene sc{"box-street", std::move(grid), geom::LidarRig({s}), {}, {}, {}};
    sc.cameras.push_back(forward_camera(Vec3(0.0, 0.0, p.sensor_height), 0.0));
    return sc;
}

Scene make_moving_box(const MovingBoxParams &p) {
    if (p.frames < 2) throw InvalidArgument("moving-box: need at least 2 frames");
    if (!(p.spacing > 0.0) || !(p.dt > 0.0)) throw InvalidArgument("moving-box: invalid params");

    // Voxel centers fall on integer multiples of 0.25, so the ground (z = 0)
    // and car faces lie on center planes.
    grid::GridGeometry geo;
    geo.dims = {160, 160, 20};
    geo.voxel_size = Vec3::Constant(0.25);
    geo.origin = Vec3(-20.125, -20.125, -2.125);

    const Vec3 sensor(0.0, 0.0, 1.8);
    const Vec3 car_half(2.25, 1.0, 0.75);
    const double car_y = 6.0, car_z = 1.0;
    const double margin = 0.1;
    const int ref = p.frames / 2;
    auto car_center = [&](int f) {
        return Vec3(p.speed * p.dt * (f - ref), car_y, car_z);
    };

    // BEV: road band, a dashed centre line, sidewalks elsewhere.
    curation::BevMap bev;
    bev.rows = geo.dims.x();
    bev.cols = geo.dims.y();
    bev.cell_size = 0.25;
    bev.origin = geo.origin.head<2>();
    bev.labels.resize(static_cast<std::size_t>(bev.rows) * bev.cols);
    for (int j = 0; j < bev.cols; ++j)
        for (int i = 0; i < bev.rows; ++i) {
            const double x = bev.origin.x() + (i + 0.5) * bev.cell_size;
            const double y = bev.origin.y() + (j + 0.5) * bev.cell_size;
            ClassId c = std::abs(y) <= 8.0 ? cls::kRoad : cls::kOtherGround;
            if (std::abs(y) < 0.125 && std::fmod(x + 40.0, 3.0) < 1.5) c = cls::kRoadLine;
            bev.labels[static_cast<std::size_t>(j) * bev.rows + i] = c;
        }

    std::mt19937_64 rng(p.seed);
    auto noisy = [&](const Vec3 &v) {
        return Vec3(v.x() + p.noise * gauss(rng), v.y() + p.noise * gauss(rng),
                    v.z() + p.noise * gauss(rng));
    };

    // Surface lattices (world frame at the reference pose for the car).
    const double ext = 20.0;
    const int n_ground = static_cast<int>(std::floor(2 * ext / p.spacing));
    auto occluded = [&](const Vec3 &pt, const Vec3 &cc) {
        // Segment sensor -> pt against the car's solid box (slab test).
        const Vec3 d = pt - sensor;
        double t0 = 0.0, t1 = 1.0 - 1e-6;
        for (int a = 0; a < 3; ++a) {
            const double lo = cc[a] - car_half[a], hi = cc[a] + car_half[a];
            if (d[a] == 0.0) {
                if (sensor[a] < lo || sensor[a] > hi) return false;
                continue;
            }
            double ta = (lo - sensor[a]) / d[a], tb = (hi - sensor[a]) / d[a];
            if (ta > tb) std::swap(ta, tb);
            t0 = std::max(t0, ta);
            t1 = std::min(t1, tb);
        }
        return t0 < t1;
    };

    curation::ScenarioClip clip;
    clip.bev = bev;
    for (int f = 0; f < p.frames; ++f) {
        curation::Frame fr;
        fr.timestamp = f * p.dt;
        fr.sensor_origin = sensor;
        const Vec3 cc = car_center(f);
        fr.boxes.emplace_back(cc, Mat3::Identity(), car_half + Vec3::Constant(margin),
                              cls::kVehicle, "car-0");

        for (int j = 0; j < n_ground; ++j)
            for (int i = 0; i < n_ground; ++i) {
                const Vec3 pt(-ext + (i + 0.5) * p.spacing, -ext + (j + 0.5) * p.spacing, 0.0);
                if (occluded(pt, cc)) continue;
                fr.sweep.xyz.push_back(noisy(pt));
            }
        // Car faces visible from the sensor.
        for (int axis = 0; axis < 3; ++axis)
            for (int sgn = -1; sgn <= 1; sgn += 2) {
                const double face = cc[axis] + sgn * car_half[axis];
                if ((sensor[axis] - face) * sgn <= 0.0) continue;
                const int u = (axis + 1) % 3, v = (axis + 2) % 3;
                const int nu = static_cast<int>(std::round(2 * car_half[u] / p.spacing));
                const int nv = static_cast<int>(std::round(2 * car_half[v] / p.spacing));
                for (int b = 0; b <= nv; ++b)
                    for (int a = 0; a <= nu; ++a) {
                        Vec3 pt;
                        pt[axis] = face;
                        pt[u] = cc[u] - car_half[u] + a * 2 * car_half[u] / nu;
                        pt[v] = cc[v] - car_half[v] + b * 2 * car_half[v] / nv;
                        fr.sweep.xyz.push_back(noisy(pt));
                    }
            }
        // Spurious returns well away from any surface.
        for (int k = 0; k < p.outliers; ++k)
            fr.sweep.xyz.emplace_back(-ext + 2 * ext * to_unit_double(rng()),
                                      -ext + 2 * ext * to_unit_double(rng()),
                                      3.0 + 1.5 * to_unit_double(rng()));
        clip.frames.push_back(std::move(fr));
    }

    // Ground truth: ground layer plus the full car surface at the reference pose.
    grid::SemanticOccupancyGrid gt(geo);
    const double eps = 1e-9;
    fill_box(gt, Vec3(-ext, -ext, -eps), Vec3(ext, ext, eps), 1);
    const Vec3 cc = car_center(ref);
    for (int axis = 0; axis < 3; ++axis)
        for (int sgn = -1; sgn <= 1; sgn += 2) {
            Vec3 lo = cc - car_half, hi = cc + car_half;
            const double face = cc[axis] + sgn * car_half[axis];
            lo[axis] = face - eps;
            hi[axis] = face + eps;
            fill_box(gt, lo - Vec3::Constant(eps), hi + Vec3::Constant(eps), 1);
        }
    gt = curation::hybrid_label(gt, clip.frames[ref].boxes, bev);

    geom::LidarSensor s;
    s.origin = sensor;
    s.pattern = geom::grid_pattern(-25 * kDeg, 10 * kDeg, 32, -std::numbers::pi, std::numbers::pi,
                                   1024);
    s.max_range = 40.0;
    Scene sc{"moving-box", std::move(gt), geom::LidarRig({s}), {}, {}, std::move(clip)};
    sc.cameras.push_back(forward_camera(sensor, std::numbers::pi / 2));
    return sc;
}

} // namespace occu::synth
