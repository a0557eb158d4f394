// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// non-zero when any criterion fails.

#include "commands.hpp"
#include "occu/curation/icp.hpp"
#include "occu/curation/labeling.hpp"
#include "occu/io/json_io.hpp"
#include "occu/io/occg.hpp"
#include "occu/lidar/range_map.hpp"
#include "occu/lidar/simulate.hpp"
#include "occu/lidar/volume_render.hpp"
#include "occu/metrics/distances.hpp"
#include "occu/metrics/histogram.hpp"
#include "occu/parallel.hpp"
#include "occu/splat/projection.hpp"
#include "occu/splat/rasterizer.hpp"
#include "occu/splat/render.hpp"
#include "occu/synth/scenes.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

namespace occu {
namespace {

namespace fs = std::filesystem;
namespace cls = grid::classes;
using io::Json;

struct Outcome {
    bool pass = true;
    std::string detail;
    bool partial = false; // some part could not be measured on this machine
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int occuforge(const std::vector<std::string> &args, std::string *err = nullptr) {
    std::ostringstream out, e;
    const int code = cli::run_cli(args, out, e);
    if (err) *err = e.str();
    return code;
}

std::map<std::string, std::string> snapshot(const fs::path &path) {
    std::map<std::string, std::string> files;
    if (fs::is_regular_file(path)) {
        files[path.filename().string()] = io::read_file(path);
        return files;
    }
    for (const auto &e : fs::recursive_directory_iterator(path))
        if (e.is_regular_file()) files[fs::relative(e.path(), path).generic_string()] = io::read_file(e.path());
    return files;
}

// 1. Unscented projection is exact for affine cameras.
Outcome ut_affine_exactness() {
    Stopwatch sw;
    std::mt19937_64 rng(1001);
    double worst_mean = 0.0, worst_cov = 0.0;
    for (int i = 0; i < 1000; ++i) {
        geom::CameraModel::Params p;
        p.kind = geom::ProjectionKind::Orthographic;
        p.fx = test::uniform(rng, 0.5, 3.0);
        p.fy = test::uniform(rng, 0.5, 3.0);
        p.cx = test::uniform(rng, -5, 5);
        p.cy = test::uniform(rng, -5, 5);
        p.width = p.height = 64;
        p.world_to_camera = test::random_motion(rng, 180.0, 1.0);
        const geom::CameraModel cam(p);
        splat::GaussianPrimitive g;
        g.sigma = test::random_spd(rng, 1e-3, 2.0);
        g.mu = cam.world_to_camera().inverse().apply(
            Vec3(test::uniform(rng, -2, 2), test::uniform(rng, -2, 2), test::uniform(rng, 20, 30)));
        const auto got = splat::project_ut(g, cam, {}, 1e300);
        if (!got) return {false, fmt("case %d was culled", i)};
        // Closed form: u = A (R x + t) + c with A = diag(fx, fy) on the first two rows.
        const Mat3 &R = p.world_to_camera.rotation();
        const Vec3 xc = R * g.mu + p.world_to_camera.translation();
        Eigen::Matrix<double, 2, 3> M;
        M.row(0) = p.fx * R.row(0);
        M.row(1) = p.fy * R.row(1);
        const Vec2 mean(p.fx * xc.x() + p.cx, p.fy * xc.y() + p.cy);
        const Mat2 cov = M * g.sigma * M.transpose();
        worst_mean = std::max(worst_mean, (got->mean - mean).cwiseAbs().maxCoeff());
        worst_cov = std::max(worst_cov, (got->cov - cov).cwiseAbs().maxCoeff());
    }
    const double t = sw.seconds();
    return {worst_mean < 1e-9 && worst_cov < 1e-9 && t < 5.0,
            fmt("1000 cases, max |mean err| %.2e, max |cov err| %.2e (limit 1e-9), %.2f s (limit 5 s)", worst_mean,
                worst_cov, t)};
}

// 2. Unscented projection against Monte Carlo under k1 = -0.3.
Outcome ut_vs_monte_carlo() {
    Stopwatch sw;
    geom::Distortion d;
    d.k1 = -0.3;
    const auto cam = test::square_camera(640, 500.0, d);
    std::mt19937_64 rng(1002);
    std::normal_distribution<double> n01;
    const double scale = 0.05;
    int ut_better = 0, ut_within = 0;
    double worst_ut = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double z = test::uniform(rng, 3, 20);
        splat::GaussianPrimitive g;
        // Off-axis: normalized radius between 0.3 and 0.72.
        g.mu = Vec3(test::uniform(rng, 0.3, 0.6) * z, test::uniform(rng, -0.4, 0.4) * z, z);
        g.sigma = scale * scale * Mat3::Identity();
        const auto ut = splat::project_ut(g, cam, {}, 1e300);
        const auto ewa = splat::project_ewa(g, cam, 1e300);
        if (!ut || !ewa) return {false, fmt("case %d was culled", i)};
        // 10^6 samples as 5 * 10^5 antithetic pairs.
        Vec2 acc = Vec2::Zero();
        for (int k = 0; k < 500000; ++k) {
            const Vec3 e(n01(rng), n01(rng), n01(rng));
            acc += cam.project_camera(g.mu + scale * e) + cam.project_camera(g.mu - scale * e);
        }
        const Vec2 mc = acc / 1e6;
        const double e_ut = (ut->mean - mc).norm(), e_ewa = (ewa->mean - mc).norm();
        worst_ut = std::max(worst_ut, e_ut);
        ut_within += e_ut < 0.5;
        ut_better += e_ut < e_ewa;
    }
    const double t = sw.seconds();
    return {ut_within == 100 && ut_better >= 80 && t < 60.0,
            fmt("UT error < 0.5 px in %d/100 (max %.4f px), UT closer than EWA in %d/100 (need 80), %.1f s "
                "(limit 60 s)",
                ut_within, worst_ut, ut_better, t)};
}

// 3. Tile rasterizer against brute-force compositing.
Outcome rasterizer_equivalence() {
    Stopwatch sw;
    std::mt19937_64 rng(1003);
    const auto cam = test::square_camera(64, 50.0);
    double worst_rel = 0.0;
    long label_checked = 0, label_bad = 0, coverage_bad = 0;
    for (int s = 0; s < 50; ++s) {
        const int n = 1 + static_cast<int>(rng() % 500);
        const auto gs = test::random_gaussian_scene(rng, cam, n);
        const bool use_ut = s % 2 == 0;
        splat::RasterOptions opt;
        opt.backend = use_ut ? splat::Backend::Ut : splat::Backend::Ewa;
        const auto maps = splat::rasterize(gs, cam, opt);
        const auto ref = test::reference_composite(gs, cam, use_ut, opt.alpha_min);
        for (std::size_t i = 0; i < ref.size(); ++i) {
            const auto &r = ref[i];
            if (r.coverage == 0.0) {
                coverage_bad += maps.coverage[i] != 0.0;
                continue;
            }
            if (!(maps.coverage[i] > 0.0)) {
                ++coverage_bad;
                continue;
            }
            worst_rel = std::max(worst_rel, std::abs(maps.depth[i] - r.depth) / r.depth);
            std::array<double, 256> w = r.class_w;
            const auto best = std::max_element(w.begin(), w.end()) - w.begin();
            const double top = w[best];
            w[best] = -1.0;
            if (top - *std::max_element(w.begin(), w.end()) > 1e-6) {
                ++label_checked;
                label_bad += maps.semantic[i] != best;
            }
        }
    }
    const double t = sw.seconds();
    return {worst_rel < 1e-5 && label_bad == 0 && coverage_bad == 0 && t < 30.0,
            fmt("50 scenes, max depth rel err %.2e (limit 1e-5), label mismatches %ld of %ld, coverage "
                "mismatches %ld, %.1f s (limit 30 s)",
                worst_rel, label_bad, label_checked, coverage_bad, t)};
}

// March to the first occupied voxel, then take that voxel's exact slab entry.
double march_oracle(const grid::SemanticOccupancyGrid &g, const geom::Ray &r) {
    const auto &G = g.geometry();
    for (double t = 0.0; t <= r.max_range; t += 0.01) {
        const auto v = G.world_to_voxel(r.origin + t * r.dir);
        if (!G.in_bounds(v) || g.at(v) == 0) continue;
        const Vec3 lo = G.origin + v.cast<double>().cwiseProduct(G.voxel_size), hi = lo + G.voxel_size;
        double t0 = 0.0;
        for (int a = 0; a < 3; ++a) {
            if (r.dir[a] == 0.0) continue;
            double ta = (lo[a] - r.origin[a]) / r.dir[a], tb = (hi[a] - r.origin[a]) / r.dir[a];
            if (ta > tb) std::swap(ta, tb);
            t0 = std::max(t0, ta);
        }
        return t0;
    }
    return -1.0;
}

// 4. Simulated depth against the ray-intersection oracle.
Outcome lidar_depth_fidelity() {
    bool pass = true;
    std::string detail;
    for (const auto &sc : {synth::make_wall(), synth::make_box_street()}) {
        Stopwatch sw;
        const lidar::Simulator sim(sc.ground_truth);
        const auto res = sim.run(sc.rig, sc.ego_pose, {0});
        const double t = sw.seconds();
        const auto rays = geom::rays_world(sc.rig, sc.ego_pose, {0});
        long kept = 0, ok = 0;
        for (std::size_t i = 0; i < res.rays.size(); ++i) {
            if (res.rays[i].dropped) continue;
            ++kept;
            const double o = march_oracle(sc.ground_truth, rays[i]);
            ok += o >= 0.0 && std::abs(res.rays[i].depth - o) <= 0.25;
        }
        const double frac = kept ? static_cast<double>(ok) / kept : 0.0;
        const double per_65k = t * 65536.0 / static_cast<double>(res.rays.size());
        pass = pass && frac >= 0.95 && per_65k < 60.0;
        detail += fmt("%s%s: %.2f%% of %ld kept rays within 0.25 m (need 95%%), %zu rays in %.2f s", detail.empty() ? "" : "; ",
                      sc.name.c_str(), 100.0 * frac, kept, res.rays.size(), t);
    }
    return {pass, detail + " (limit 60 s per 65,536 rays)"};
}

// 5. Volume-render weight invariants.
Outcome volume_render_invariants() {
    std::mt19937_64 rng(1005);
    long bad_weight = 0, bad_sum = 0, not_dropped = 0;
    double worst_sum = 0.0;
    for (int r = 0; r < 10000; ++r) {
        const int n = 2 + static_cast<int>(rng() % 128);
        std::vector<double> s(n), f(n);
        double acc = test::uniform(rng, 0.1, 2);
        const double amp = std::pow(10.0, test::uniform(rng, -2, 2));
        for (int i = 0; i < n; ++i) {
            acc += test::uniform(rng, 1e-4, 1.0);
            s[i] = acc;
            f[i] = test::uniform(rng, -amp, amp);
        }
        lidar::VolumeRenderParams p;
        p.sharpness = std::pow(10.0, test::uniform(rng, -1, 4));
        const auto res = lidar::volume_render(s, f, p);
        double sum = 0.0;
        for (double w : res.weights) {
            bad_weight += !(w >= 0.0);
            sum += w;
        }
        bad_sum += !(sum <= 1.0 + 1e-9);
        worst_sum = std::max(worst_sum, sum);
        // The same ray with a constant field must be dropped.
        std::fill(f.begin(), f.end(), test::uniform(rng, -amp, amp));
        not_dropped += !lidar::volume_render(s, f, p).dropped;
    }
    return {bad_weight == 0 && bad_sum == 0 && not_dropped == 0,
            fmt("10^4 rays: negative weights %ld, sums above 1+1e-9 %ld (max sum %.12f), constant-field rays "
                "not dropped %ld of 10^4",
                bad_weight, bad_sum, worst_sum, not_dropped)};
}

// 6. ICP recovers ground-truth motions between independent scans.
Outcome icp_recovery() {
    Stopwatch sw;
    std::mt19937_64 rng(1006);
    int ok = 0, failed = 0;
    double worst_rot = 0.0, worst_t = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto target = test::structured_scan(rng);
        const auto T = test::random_motion(rng, 10.0, 0.5);
        const auto source = geom::transform_points(test::structured_scan(rng), T.inverse());
        try {
            const auto r = curation::icp_register(source, target);
            const auto err = r.T * T.inverse();
            const double rot = err.rotation_angle() * 180.0 / std::numbers::pi, tr = err.translation().norm();
            worst_rot = std::max(worst_rot, rot);
            worst_t = std::max(worst_t, tr);
            ok += rot < 1.0 && tr < 0.05;
        } catch (const Error &) {
            ++failed;
        }
    }
    const double t = sw.seconds();
    return {ok >= 95 && t < 60.0,
            fmt("%d/100 within 1 deg and 0.05 m (need 95), %d raised, worst %.3f deg / %.3f m, %.1f s (limit 60 s)",
                ok, failed, worst_rot, worst_t, t)};
}

// Labeling cases with hand-derived answers.
int hybrid_label_cases(std::string &why) {
    grid::GridGeometry geo;
    geo.dims = {6, 4, 2};
    geo.voxel_size = Vec3::Constant(1.0);
    geo.origin = Vec3::Zero();
    curation::BevMap bev;
    bev.rows = bev.cols = 4;
    bev.cell_size = 1.0;
    bev.origin = Vec2::Zero();
    bev.labels.assign(16, cls::kRoad);
    bev.labels[1] = cls::kRoadLine; // x in [1, 2), y in [0, 1)
    bev.labels[15] = 0;             // unlabelled
    grid::SemanticOccupancyGrid g(geo);
    g.set({0, 0, 1}, 1);
    g.set({0, 0, 0}, 1);
    g.set({1, 0, 0}, 1);
    g.set({3, 3, 0}, 1);
    g.set({5, 0, 0}, 1);
    const geom::OrientedBox car(Vec3(0.5, 0.5, 1.5), Mat3::Identity(), Vec3(0.6, 0.6, 0.6), cls::kVehicle, "c");
    const auto out = curation::hybrid_label(g, {car}, bev);
    const auto shifted = curation::hybrid_label(g, {}, bev, geom::RigidTransform::from_translation(Vec3(1, 0, 0)));
    const std::vector<std::tuple<const char *, ClassId, ClassId>> cases{
        {"voxel inside a box takes the box class", out.at(0, 0, 1), cls::kVehicle},
        {"voxel outside boxes takes the BEV class", out.at(0, 0, 0), cls::kRoad},
        {"BEV road-line cell", out.at(1, 0, 0), cls::kRoadLine},
        {"unlabelled BEV cell falls back", out.at(3, 3, 0), cls::kGenericObject},
        {"outside the BEV extent falls back", out.at(5, 0, 0), cls::kGenericObject},
        {"grid-to-world transform is applied", shifted.at(0, 0, 0), cls::kRoadLine},
        {"empty voxel stays empty", out.at(2, 2, 0), cls::kEmpty},
    };
    int bad = 0;
    for (const auto &[name, got, want] : cases)
        if (got != want) {
            ++bad;
            why += std::string(" [") + name + "]";
        }
    return bad;
}

// 7. End-to-end curation through the CLI on the moving-box clip.
Outcome end_to_end_curation(const fs::path &work) {
    if (occuforge({"synth", "moving-box", "-o", (work / "mb").string()}) != 0) return {false, "synth failed"};
    Stopwatch sw;
    std::string err;
    const int code = occuforge({"curate", (work / "mb/manifest.json").string(), "--config",
                                (work / "mb/config.json").string(), "-o", (work / "curated.occg").string()},
                               &err);
    const double t = sw.seconds();
    if (code != 0) return {false, "curate exited with " + std::to_string(code) + ": " + err};
    const auto pred = io::read_occg(work / "curated.occg");
    const auto gt = io::read_occg(work / "mb/ground_truth.occg");
    const auto m = grid::iou_miou(pred, gt);
    std::string why;
    const int bad = hybrid_label_cases(why);
    return {m.miou >= 0.8 && bad == 0 && t < 120.0,
            fmt("mIoU %.4f (need 0.8), occupancy IoU %.4f, curate %.1f s (limit 120 s), labeling cases failed: %d%s",
                m.miou, m.iou_occupied, t, bad, why.c_str())};
}

// 8. Smoothness on constant and ramp range maps.
Outcome smoothness_fixtures() {
    lidar::RangeMap flat(3, 16, 4, -0.1, 0.1);
    std::fill(flat.depth.begin(), flat.depth.end(), 7.5);
    const double v_flat = lidar::smoothness_loss(flat).value;

    // Depth rises by 0.1 per column; the last column has no return so no pair wraps around.
    lidar::RangeMap same(2, 10, 4, -0.1, 0.1), ortho(2, 10, 4, -0.1, 0.1);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 9; ++c) {
            same.depth[same.index(r, c)] = ortho.depth[ortho.index(r, c)] = 5.0 + 0.1 * c;
            same.h(1, r, c) = 1.0;
            ortho.h(c % 2, r, c) = 1.0;
        }
    const double v_same = lidar::smoothness_loss(same).value, v_ortho = lidar::smoothness_loss(ortho).value;
    const double want_ortho = 0.1 * std::exp(-2.0);
    return {v_flat == 0.0 && std::abs(v_same - 0.1) < 1e-9 && std::abs(v_ortho - want_ortho) < 1e-9,
            fmt("constant %.3g (want 0), identical-histogram ramp %.12f (want 0.1), orthogonal-histogram ramp "
                "%.12f (want %.12f)",
                v_flat, v_same, v_ortho, want_ortho)};
}

geom::PointCloud random_cloud(std::mt19937_64 &rng, std::size_t n, double spread) {
    geom::PointCloud pc;
    for (std::size_t i = 0; i < n; ++i)
        pc.xyz.emplace_back(test::uniform(rng, -spread, spread), test::uniform(rng, -spread, spread),
                            test::uniform(rng, -1, 1));
    return pc;
}

double brute_mean_nn(const geom::PointCloud &from, const geom::PointCloud &to) {
    double sum = 0.0;
    for (const auto &p : from.xyz) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto &q : to.xyz) best = std::min(best, (q - p).squaredNorm());
        sum += std::sqrt(best);
    }
    return sum / static_cast<double>(from.size());
}

// 9. Distribution and point-set distances against oracles.
Outcome metric_oracles() {
    std::mt19937_64 rng(1009);
    metrics::BevBinning bin;
    bin.nx = bin.ny = 16;
    bin.x_min = bin.y_min = -8;
    bin.x_max = bin.y_max = 8;
    std::vector<metrics::BevHistogram> A;
    for (int i = 0; i < 8; ++i) A.push_back(metrics::bev_histogram(random_cloud(rng, 300, 6.0), bin));
    const double mmd_aa = metrics::mmd(A, A).value;

    int jsd_bad = 0;
    for (int i = 0; i < 1000; ++i) {
        std::vector<double> p(8), q(8);
        double sp = 0, sq = 0;
        for (int k = 0; k < 8; ++k) {
            p[k] = test::uniform(rng, 0, 1) * (rng() % 3 != 0);
            q[k] = test::uniform(rng, 0, 1) * (rng() % 3 != 0);
            sp += p[k];
            sq += q[k];
        }
        if (sp == 0 || sq == 0) continue;
        for (int k = 0; k < 8; ++k) {
            p[k] /= sp;
            q[k] /= sq;
        }
        const double d = metrics::jsd(p, q);
        jsd_bad += !(d >= 0.0 && d <= std::numbers::ln2 && d == metrics::jsd(q, p));
    }
    const double disjoint = metrics::jsd(std::vector<double>{1, 0}, std::vector<double>{0, 1});
    jsd_bad += std::abs(disjoint - std::numbers::ln2) > 1e-12;

    // h_A = (1, 0), h_B = (0.5, 0.5), m = (0.75, 0.25), transcribed term by term:
    //   1/2 (1 ln(1/0.75)) + 1/2 (0.5 ln(0.5/0.75) + 0.5 ln(0.5/0.25)) = 0.215762...
    // The value 0.1438 often quoted next to this expression is its first term alone.
    const double fixture = 0.5 * (1.0 * std::log(1.0 / 0.75)) +
                           0.5 * (0.5 * std::log(0.5 / 0.75) + 0.5 * std::log(0.5 / 0.25));
    const double got = metrics::jsd(std::vector<double>{1, 0}, std::vector<double>{0.5, 0.5});

    int chamfer_bad = 0;
    for (std::size_t n : {1u, 10u, 100u, 1000u}) {
        const auto a = random_cloud(rng, n, 10.0), b = random_cloud(rng, n / 3 + 1, 10.0);
        chamfer_bad += metrics::chamfer(a, b) != 0.5 * (brute_mean_nn(a, b) + brute_mean_nn(b, a));
    }
    return {mmd_aa < 1e-9 && jsd_bad == 0 && std::abs(got - fixture) < 1e-6 && chamfer_bad == 0,
            fmt("mmd(A,A) %.2e, jsd bound/symmetry violations %d, fixture jsd %.6f vs term-by-term %.6f "
                "(0.1438 is the first term only), chamfer mismatches %d of 4 sizes up to 1000",
                mmd_aa, jsd_bad, got, fixture, chamfer_bad)};
}

// 10. Determinism of every command, and the performance envelope.
Outcome determinism_and_performance(const fs::path &work) {
    std::string detail;
    bool pass = true;

    const auto mb = (work / "mb").string(), wall = (work / "wall").string(), street = (work / "street").string();
    const std::vector<std::pair<std::string, std::vector<std::string>>> commands{
        {"synth wall", {"synth", "wall", "-o", wall}},
        {"synth box-street", {"synth", "box-street", "-o", street}},
        {"synth moving-box", {"synth", "moving-box", "-o", mb}},
        {"curate",
         {"curate", mb + "/manifest.json", "--config", mb + "/config.json", "-o", (work / "curated.occg").string()}},
        {"render", {"render", street + "/ground_truth.occg", street + "/cameras.json", "-o", (work / "render").string()}},
        {"lidar", {"lidar", wall + "/ground_truth.occg", wall + "/rig.json", "-o", (work / "lidar").string()}},
        {"eval occ",
         {"eval", "occ", "--pred", (work / "curated.occg").string(), "--gt", mb + "/ground_truth.occg", "-o",
          (work / "eval_occ.json").string()}},
        {"eval pc",
         {"eval", "pc", "--a", mb + "/sweep_000.ply", mb + "/sweep_001.ply", "--b", mb + "/sweep_002.ply",
          mb + "/sweep_003.ply", "-o", (work / "eval_pc.json").string()}},
        {"filter-scenarios", {"filter-scenarios", mb, "-o", (work / "scenarios.json").string()}},
    };
    auto outputs_of = [&](const std::vector<std::string> &args) {
        std::map<std::string, std::string> all;
        for (std::size_t i = 0; i + 1 < args.size(); ++i)
            if (args[i] == "-o") {
                all = snapshot(args[i + 1]);
                if (fs::exists(args[i + 1] + ".json")) all["report"] = io::read_file(args[i + 1] + ".json");
            }
        return all;
    };
    std::vector<std::string> differing;
    for (const auto &[name, args] : commands) {
        std::string err;
        if (occuforge(args, &err) != 0) return {false, name + " failed: " + err};
        const auto first = outputs_of(args);
        if (occuforge(args, &err) != 0) return {false, name + " failed on rerun: " + err};
        if (first.empty() || first != outputs_of(args)) differing.push_back(name);
    }
    pass = differing.empty();
    detail += fmt("%zu commands rerun, byte-identical: %s", commands.size(), differing.empty() ? "all" : "NOT");
    for (const auto &d : differing) detail += " [" + d + "]";

    set_num_threads(1);
    const auto sc = synth::make_box_street();
    const auto &dims = sc.ground_truth.geometry().dims;
    Stopwatch sw_render;
    const auto maps = splat::render_views(sc.ground_truth, {sc.cameras.at(0)});
    const double t_render = sw_render.seconds();
    const auto wall_scene = synth::make_wall();
    auto time_lidar = [&] {
        Stopwatch sw;
        const lidar::Simulator sim(wall_scene.ground_truth);
        const auto res = sim.run(wall_scene.rig, wall_scene.ego_pose, {0});
        return std::make_pair(sw.seconds(), res.rays.size());
    };
    const auto [t_lidar, n_rays] = time_lidar();
    pass = pass && t_render < 2.0 && t_lidar < 5.0 && n_rays == 65536;
    detail += fmt("; one core: render %dx%dx%d grid to %dx%d in %.2f s (limit 2 s), %zu rays in %.2f s (limit 5 s)",
                  dims[0], dims[1], dims[2], maps.at(0).width, maps.at(0).height, t_render, n_rays, t_lidar);

    const unsigned hw = std::thread::hardware_concurrency();
    if (hw >= 2) {
        const std::size_t n = std::min(hw, 8u);
        set_num_threads(n);
        const double t_par = time_lidar().first;
        const double speedup = t_lidar / t_par;
        const bool near_linear = speedup >= 0.7 * static_cast<double>(n);
        pass = pass && near_linear;
        detail += fmt("; lidar speedup on %zu threads %.2fx (need %.2fx)", n, speedup, 0.7 * static_cast<double>(n));
    } else {
        detail += "; multi-core scaling NOT VERIFIED: this machine exposes 1 hardware thread";
        set_num_threads(0);
        return {pass, detail, true};
    }
    set_num_threads(0);
    return {pass, detail};
}

} // namespace
} // namespace occu

int main() {
    using namespace occu;
    test::TempDir work("acceptance");
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"UT affine exactness", ut_affine_exactness},
        {"UT vs Monte Carlo under distortion", ut_vs_monte_carlo},
        {"rasterizer equals brute-force compositing", rasterizer_equivalence},
        {"LiDAR depth fidelity", lidar_depth_fidelity},
        {"volume-render weight invariants", volume_render_invariants},
        {"ICP recovery", icp_recovery},
        {"end-to-end curation", [&] { return end_to_end_curation(work.path()); }},
        {"smoothness metric", smoothness_fixtures},
        {"metric oracles", metric_oracles},
        {"determinism and performance", [&] { return determinism_and_performance(work.path()); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += !o.pass;
        const char *status = !o.pass ? "FAIL" : o.partial ? "PASS (PARTIAL)" : "PASS";
        std::printf("criterion %2zu %s: %s: %s\n", i + 1, status, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
