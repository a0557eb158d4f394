// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/metrics/distances.hpp"

#include "occu/kdtree.hpp"
#include "occu/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace occu::metrics {

namespace {

double sqdist(const std::vector<double> &x, const std::vector<double> &y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

double mean_nn(const std::vector<Vec3> &from, const KdTree &to) {
    std::vector<double> d(from.size());
    parallel_for(from.size(), 512, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) d[i] = std::sqrt(to.nearest(from[i]).dist2);
    });
    double s = 0.0;
    for (double x : d) s += x;
    return s / static_cast<double>(from.size());
}

} // namespace

MmdResult mmd(const std::vector<BevHistogram> &a, const std::vector<BevHistogram> &b, double sigma,
              bool unbiased) {
    if (a.size() < 2 || b.size() < 2) throw InvalidArgument("mmd: each set needs >= 2 histograms");
    const std::size_t dim = a[0].mass.size();
    for (const auto *set : {&a, &b})
        for (const auto &h : *set)
            if (h.mass.size() != dim) throw InvalidArgument("mmd: histogram sizes differ");

    std::vector<const std::vector<double> *> all;
    for (const auto &h : a) all.push_back(&h.mass);
    for (const auto &h : b) all.push_back(&h.mass);
    const std::size_t n = all.size(), na = a.size();
    std::vector<double> d2(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d2[i * n + j] = d2[j * n + i] = sqdist(*all[i], *all[j]);

    MmdResult r;
    if (!(sigma > 0.0)) {
        std::vector<double> dist;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) dist.push_back(std::sqrt(d2[i * n + j]));
        const auto mid = dist.begin() + static_cast<std::ptrdiff_t>(dist.size() / 2);
        std::nth_element(dist.begin(), mid, dist.end());
        double med = *mid;
        if (dist.size() % 2 == 0) med = 0.5 * (med + *std::max_element(dist.begin(), mid));
        sigma = med > 0.0 ? med : 1.0;
    }
    r.sigma = sigma;
    const double g = 1.0 / (2.0 * sigma * sigma);
    auto k = [&](std::size_t i, std::size_t j) { return std::exp(-g * d2[i * n + j]); };

    // Each block summed in a fixed order so mmd(a, b) == mmd(b, a) exactly.
    auto block = [&](std::size_t lo, std::size_t hi, bool skip_diag) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = lo; j < hi; ++j)
                if (!(skip_diag && i == j)) s += k(i, j);
        return s;
    };
    const double ma = static_cast<double>(na), mb = static_cast<double>(n - na);
    const double kaa = block(0, na, unbiased) / (unbiased ? ma * (ma - 1) : ma * ma);
    const double kbb = block(na, n, unbiased) / (unbiased ? mb * (mb - 1) : mb * mb);
    // The cross block transposes under a swap, so sum its sorted terms.
    std::vector<double> cross;
    cross.reserve(na * (n - na));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = na; j < n; ++j) cross.push_back(k(i, j));
    std::sort(cross.begin(), cross.end());
    double kab = 0.0;
    for (double v : cross) kab += v;
    kab /= ma * mb;
    r.value = kaa + kbb - 2.0 * kab;
    if (!unbiased) r.value = std::max(r.value, 0.0);
    return r;
}

double jsd(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InvalidArgument("jsd: histogram sizes differ");
    double sa = 0.0, sb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] >= 0.0) || !(b[i] >= 0.0)) throw InvalidArgument("jsd: negative mass");
        sa += a[i];
        sb += b[i];
    }
    if (std::abs(sa - 1.0) > 1e-6 || std::abs(sb - 1.0) > 1e-6)
        throw InvalidArgument("jsd: histograms must be normalized");
    double kl_a = 0.0, kl_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double m = 0.5 * (a[i] + b[i]);
        if (a[i] > 0.0) kl_a += a[i] * std::log(a[i] / m);
        if (b[i] > 0.0) kl_b += b[i] * std::log(b[i] / m);
    }
    return std::clamp(0.5 * kl_a + 0.5 * kl_b, 0.0, std::log(2.0));
}

double chamfer(const geom::PointCloud &a, const geom::PointCloud &b) {
    if (a.empty() || b.empty()) throw InvalidArgument("chamfer: empty point cloud");
    const KdTree ta(a.xyz), tb(b.xyz);
    return 0.5 * (mean_nn(a.xyz, tb) + mean_nn(b.xyz, ta));
}

} // namespace occu::metrics
