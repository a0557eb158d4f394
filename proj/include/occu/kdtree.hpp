// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/common.hpp"

#include <limits>
#include <span>
#include <vector>

namespace occu {

/// Static 3D k-d tree over a copy of the input points. Queries are exact;
/// equal distances resolve to the smaller input index so results do not
/// depend on tree shape.
class KdTree {
public:
    struct Neighbor {
        std::size_t index;
        double dist2;
    };

    explicit KdTree(std::span<const Vec3> points, std::size_t leaf_size = 8);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }

    /// Nearest point with squared distance <= max_dist2. index == npos when none.
    Neighbor nearest(const Vec3 &q,
                     double max_dist2 = std::numeric_limits<double>::infinity()) const;

    /// The k nearest points, ascending by (dist2, index). `out` is overwritten.
    void knn(const Vec3 &q, std::size_t k, std::vector<Neighbor> &out) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    struct Node {
        // Leaf when left == 0 (root is never a child).
        std::uint32_t begin, end;
        std::uint32_t left, right;
        int axis;
        double split;
    };

    std::uint32_t build(std::uint32_t begin, std::uint32_t end, std::size_t leaf_size);
    void nearest_rec(std::uint32_t node, const Vec3 &q, Neighbor &best) const;
    void knn_rec(std::uint32_t node, const Vec3 &q, std::size_t k,
                 std::vector<Neighbor> &heap) const;

    std::vector<Vec3> points_;          // reordered
    std::vector<std::size_t> original_; // reordered -> input index
    std::vector<Node> nodes_;
};

} // namespace occu
