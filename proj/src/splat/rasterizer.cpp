// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/splat/rasterizer.hpp"

#include "occu/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace occu::splat {

std::size_t RenderedMaps::covered_pixels() const {
    return static_cast<std::size_t>(
        std::count_if(coverage.begin(), coverage.end(), [](double c) { return c > 0.0; }));
}

namespace {

struct Splat {
    Vec2 mean;
    Mat2 conic; // inverse covariance
    double depth;
    double alpha;
    ClassId label;
    std::size_t order; // input index
    int u0, u1, v0, v1; // inclusive pixel bounds
};

} // namespace

RenderedMaps rasterize(const std::vector<GaussianPrimitive> &gaussians,
                       const geom::CameraModel &cam, const RasterOptions &opt) {
    if (opt.tile < 1) throw InvalidArgument("rasterize: tile must be >= 1");
    if (!(opt.alpha_min > 0.0 && opt.alpha_min < 1.0))
        throw InvalidArgument("rasterize: alpha_min must be in (0, 1)");
    if (!(opt.transmittance_min >= 0.0 && opt.transmittance_min < 1.0))
        throw InvalidArgument("rasterize: transmittance_min must be in [0, 1)");
    if (opt.backend == Backend::Ut) opt.ut.validate();

    const int W = cam.width(), H = cam.height();
    RenderedMaps maps;
    maps.width = W;
    maps.height = H;
    const std::size_t npix = static_cast<std::size_t>(W) * H;
    maps.depth.assign(npix, 0.0);
    maps.semantic.assign(npix, 0);
    maps.coverage.assign(npix, 0.0);
    auto &diag = maps.diagnostics;
    diag.input = gaussians.size();

    // Project. A Gaussian reaches alpha_min inside q <= 2 ln(alpha / alpha_min),
    // so that ellipse (never smaller than the 3-sigma one) bounds its pixels.
    enum Status : unsigned char { kOk, kCulled, kFaint, kSingular };
    std::vector<Splat> splats(gaussians.size());
    std::vector<Status> status(gaussians.size(), kCulled);
    parallel_for(gaussians.size(), 256, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            const auto &g = gaussians[i];
            if (!(g.alpha > 0.0 && g.alpha <= 1.0))
                throw InvalidArgument("rasterize: gaussian alpha must be in (0, 1]");
            if (g.alpha < opt.alpha_min) {
                status[i] = kFaint;
                continue;
            }
            const double q_max = std::max(2.0 * std::log(g.alpha / opt.alpha_min), kDefaultCullQ);
            const auto p = opt.backend == Backend::Ut ? project_ut(g, cam, opt.ut, q_max)
                                                      : project_ewa(g, cam, q_max);
            if (!p) continue;
            Eigen::SelfAdjointEigenSolver<Mat2> es(p->cov, Eigen::EigenvaluesOnly);
            const double lo = es.eigenvalues()(0), hi = es.eigenvalues()(1);
            if (!(lo > 0.0) || hi > 1e12 * lo) {
                status[i] = kSingular;
                continue;
            }
            const double rx = std::sqrt(q_max * p->cov(0, 0));
            const double ry = std::sqrt(q_max * p->cov(1, 1));
            Splat s;
            s.mean = p->mean;
            s.conic = p->cov.inverse();
            s.depth = p->depth;
            s.alpha = g.alpha;
            s.label = g.label;
            s.order = i;
            s.u0 = static_cast<int>(std::max(std::ceil(p->mean.x() - rx), 0.0));
            s.u1 = static_cast<int>(std::min(std::floor(p->mean.x() + rx), W - 1.0));
            s.v0 = static_cast<int>(std::max(std::ceil(p->mean.y() - ry), 0.0));
            s.v1 = static_cast<int>(std::min(std::floor(p->mean.y() + ry), H - 1.0));
            if (s.u0 > s.u1 || s.v0 > s.v1) continue;
            splats[i] = s;
            status[i] = kOk;
        }
    });

    std::vector<Splat> live;
    for (std::size_t i = 0; i < gaussians.size(); ++i) {
        switch (status[i]) {
        case kOk: live.push_back(splats[i]); break;
        case kCulled: ++diag.culled; break;
        case kFaint: ++diag.faint; break;
        case kSingular: ++diag.singular; break;
        }
    }
    splats.clear();
    diag.splatted = live.size();
    std::sort(live.begin(), live.end(), [](const Splat &a, const Splat &b) {
        return a.depth < b.depth || (a.depth == b.depth && a.order < b.order);
    });

    // Bin to tiles; lists inherit the global depth order.
    const int T = opt.tile;
    const int tiles_x = (W + T - 1) / T, tiles_y = (H + T - 1) / T;
    std::vector<std::vector<std::uint32_t>> bins(static_cast<std::size_t>(tiles_x) * tiles_y);
    for (std::size_t s = 0; s < live.size(); ++s) {
        const auto &sp = live[s];
        for (int ty = sp.v0 / T; ty <= sp.v1 / T; ++ty)
            for (int tx = sp.u0 / T; tx <= sp.u1 / T; ++tx)
                bins[static_cast<std::size_t>(ty) * tiles_x + tx].push_back(
                    static_cast<std::uint32_t>(s));
    }

    std::vector<std::size_t> stops(bins.size(), 0);
    parallel_for(bins.size(), 1, [&](std::size_t b, std::size_t e) {
        std::array<double, 256> class_w{};
        std::vector<ClassId> touched;
        for (std::size_t t = b; t < e; ++t) {
            const auto &list = bins[t];
            if (list.empty()) continue;
            const int tx = static_cast<int>(t % tiles_x), ty = static_cast<int>(t / tiles_x);
            for (int v = ty * T; v < std::min((ty + 1) * T, H); ++v) {
                for (int u = tx * T; u < std::min((tx + 1) * T, W); ++u) {
                    double trans = 1.0, depth = 0.0;
                    touched.clear();
                    for (auto s : list) {
                        const auto &sp = live[s];
                        if (u < sp.u0 || u > sp.u1 || v < sp.v0 || v > sp.v1) continue;
                        const Vec2 d(u - sp.mean.x(), v - sp.mean.y());
                        const double q = d.dot(sp.conic * d);
                        const double a = sp.alpha * std::exp(-0.5 * q);
                        if (a < opt.alpha_min) continue;
                        const double w = a * trans;
                        depth += w * sp.depth;
                        if (class_w[sp.label] == 0.0) touched.push_back(sp.label);
                        class_w[sp.label] += w;
                        trans *= 1.0 - a;
                        if (trans < opt.transmittance_min) {
                            ++stops[t];
                            break;
                        }
                    }
                    const double cov = 1.0 - trans;
                    if (touched.empty() || !(cov > 0.0)) {
                        for (auto c : touched) class_w[c] = 0.0;
                        continue;
                    }
                    ClassId best = 0;
                    double best_w = -1.0;
                    for (auto c : touched) {
                        if (class_w[c] > best_w || (class_w[c] == best_w && c < best)) {
                            best_w = class_w[c];
                            best = c;
                        }
                        class_w[c] = 0.0;
                    }
                    const auto idx = maps.index(u, v);
                    maps.coverage[idx] = cov;
                    maps.depth[idx] = opt.normalize_depth ? depth / cov : depth;
                    maps.semantic[idx] = best;
                }
            }
        }
    });
    diag.early_stops = std::accumulate(stops.begin(), stops.end(), std::size_t{0});
    return maps;
}

} // namespace occu::splat
