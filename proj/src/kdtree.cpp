// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/kdtree.hpp"

#include <algorithm>
#include <numeric>

namespace occu {

namespace {
bool better(const KdTree::Neighbor &a, const KdTree::Neighbor &b) {
    return a.dist2 < b.dist2 || (a.dist2 == b.dist2 && a.index < b.index);
}
} // namespace

KdTree::KdTree(std::span<const Vec3> points, std::size_t leaf_size) {
    if (points.size() >= std::numeric_limits<std::uint32_t>::max())
        throw InvalidArgument("KdTree: too many points");
    std::vector<std::uint32_t> order(points.size());
    std::iota(order.begin(), order.end(), 0u);
    points_.assign(points.begin(), points.end());
    original_.assign(order.begin(), order.end());
    if (points_.empty()) return;
    nodes_.reserve(2 * points_.size() / std::max<std::size_t>(leaf_size, 1) + 1);
    build(0, static_cast<std::uint32_t>(points_.size()), std::max<std::size_t>(leaf_size, 1));
}

std::uint32_t KdTree::build(std::uint32_t begin, std::uint32_t end, std::size_t leaf_size) {
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back({begin, end, 0, 0, 0, 0.0});
    if (end - begin <= leaf_size) return id;

    Vec3 lo = points_[begin], hi = points_[begin];
    for (auto i = begin; i < end; ++i) {
        lo = lo.cwiseMin(points_[i]);
        hi = hi.cwiseMax(points_[i]);
    }
    int axis;
    (hi - lo).maxCoeff(&axis);
    if (hi[axis] == lo[axis]) return id; // all coincident: keep as leaf

    const std::uint32_t mid = begin + (end - begin) / 2;
    // Sort a permutation so points_ and original_ move together.
    std::vector<std::uint32_t> perm(end - begin);
    std::iota(perm.begin(), perm.end(), begin);
    std::nth_element(perm.begin(), perm.begin() + (mid - begin), perm.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                         return points_[a][axis] < points_[b][axis];
                     });
    std::vector<Vec3> pts(perm.size());
    std::vector<std::size_t> orig(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        pts[i] = points_[perm[i]];
        orig[i] = original_[perm[i]];
    }
    std::copy(pts.begin(), pts.end(), points_.begin() + begin);
    std::copy(orig.begin(), orig.end(), original_.begin() + begin);

    nodes_[id].axis = axis;
    nodes_[id].split = points_[mid][axis];
    const auto left = build(begin, mid, leaf_size);
    const auto right = build(mid, end, leaf_size);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
}

KdTree::Neighbor KdTree::nearest(const Vec3 &q, double max_dist2) const {
    // Seed with an index larger than any real one so ties at exactly
    // max_dist2 are accepted.
    Neighbor best{npos, max_dist2};
    if (!points_.empty()) nearest_rec(0, q, best);
    return best;
}

void KdTree::nearest_rec(std::uint32_t node, const Vec3 &q, Neighbor &best) const {
    const Node &n = nodes_[node];
    if (n.left == 0) {
        for (auto i = n.begin; i < n.end; ++i) {
            const Neighbor cand{original_[i], (points_[i] - q).squaredNorm()};
            if (better(cand, best)) best = cand;
        }
        return;
    }
    const double diff = q[n.axis] - n.split;
    const auto near = diff < 0 ? n.left : n.right;
    const auto far = diff < 0 ? n.right : n.left;
    nearest_rec(near, q, best);
    if (diff * diff <= best.dist2) nearest_rec(far, q, best);
}

void KdTree::knn(const Vec3 &q, std::size_t k, std::vector<Neighbor> &out) const {
    out.clear();
    if (k == 0 || points_.empty()) return;
    out.reserve(k + 1);
    knn_rec(0, q, k, out);
    std::sort_heap(out.begin(), out.end(), better);
}

void KdTree::knn_rec(std::uint32_t node, const Vec3 &q, std::size_t k,
                     std::vector<Neighbor> &heap) const {
    const Node &n = nodes_[node];
    if (n.left == 0) {
        for (auto i = n.begin; i < n.end; ++i) {
            const Neighbor cand{original_[i], (points_[i] - q).squaredNorm()};
            if (heap.size() < k) {
                heap.push_back(cand);
                std::push_heap(heap.begin(), heap.end(), better);
            } else if (better(cand, heap.front())) {
                std::pop_heap(heap.begin(), heap.end(), better);
                heap.back() = cand;
                std::push_heap(heap.begin(), heap.end(), better);
            }
        }
        return;
    }
    const double diff = q[n.axis] - n.split;
    const auto near = diff < 0 ? n.left : n.right;
    const auto far = diff < 0 ? n.right : n.left;
    knn_rec(near, q, k, heap);
    if (heap.size() < k || diff * diff <= heap.front().dist2) knn_rec(far, q, k, heap);
}

} // namespace occu
