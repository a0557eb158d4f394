// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/grid/occupancy_grid.hpp"

#include "occu/grid/class_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace occu::grid {

void GridGeometry::validate() const {
    if (dims.minCoeff() < 1) throw InvalidArgument("grid: dims must be >= 1");
    if (!(voxel_size.minCoeff() > 0.0) || !voxel_size.allFinite())
        throw InvalidArgument("grid: voxel_size must be positive");
    if (!origin.allFinite()) throw InvalidArgument("grid: origin must be finite");
    const double count = static_cast<double>(dims.x()) * dims.y() * dims.z();
    if (count > 4.0e9) throw InvalidArgument("grid: too many voxels");
}

Index3 GridGeometry::unravel(std::size_t idx) const {
    const auto H = static_cast<std::size_t>(dims.x());
    const auto W = static_cast<std::size_t>(dims.y());
    return {static_cast<int>(idx % H), static_cast<int>((idx / H) % W),
            static_cast<int>(idx / (H * W))};
}

Index3 GridGeometry::world_to_voxel(const Vec3 &p) const {
    const Vec3 q = (p - origin).cwiseQuotient(voxel_size);
    // Clamp before the int conversion so far-away points stay well defined.
    auto cell = [](double v) {
        return static_cast<int>(std::floor(std::clamp(v, -1.0e9, 1.0e9)));
    };
    return {cell(q.x()), cell(q.y()), cell(q.z())};
}

SemanticOccupancyGrid::SemanticOccupancyGrid(const GridGeometry &geometry) : geom_(geometry) {
    geom_.validate();
    classes_.assign(geom_.voxel_count(), 0);
}

SemanticOccupancyGrid::SemanticOccupancyGrid(const GridGeometry &geometry,
                                             std::vector<ClassId> classes)
    : geom_(geometry), classes_(std::move(classes)) {
    geom_.validate();
    if (classes_.size() != geom_.voxel_count())
        throw InvalidArgument("grid: payload has " + std::to_string(classes_.size()) +
                              " voxels, expected " + std::to_string(geom_.voxel_count()));
}

ClassId SemanticOccupancyGrid::lookup(const Vec3 &p) const {
    const Index3 i = geom_.world_to_voxel(p);
    return geom_.in_bounds(i) ? at(i) : ClassId{0};
}

std::size_t SemanticOccupancyGrid::occupied_count() const {
    return static_cast<std::size_t>(
        std::count_if(classes_.begin(), classes_.end(), [](ClassId c) { return c != 0; }));
}

void SemanticOccupancyGrid::validate(const ClassTable &table) const {
    for (ClassId c : classes_)
        if (c >= table.size())
            throw InvalidArgument("grid: class id " + std::to_string(c) +
                                  " not in class table of size " + std::to_string(table.size()));
}

VoxelizeResult voxelize(const geom::PointCloud &points, const GridGeometry &geometry) {
    points.validate();
    VoxelizeResult result{SemanticOccupancyGrid(geometry), 0};

    // (voxel, label) pairs; sorting makes the majority vote order-free.
    std::vector<std::pair<std::size_t, ClassId>> hits;
    hits.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Index3 v = geometry.world_to_voxel(points.xyz[i]);
        if (!geometry.in_bounds(v)) {
            ++result.out_of_bounds;
            continue;
        }
        ClassId label = points.has_label() ? points.label[i] : ClassId{1};
        if (label == 0) label = 1; // a hit voxel is never empty
        hits.emplace_back(geometry.linear(v), label);
    }
    std::sort(hits.begin(), hits.end());

    auto &cells = result.grid.mutable_classes();
    std::size_t i = 0;
    while (i < hits.size()) {
        const std::size_t voxel = hits[i].first;
        ClassId best = 0;
        std::size_t best_count = 0;
        while (i < hits.size() && hits[i].first == voxel) {
            const ClassId label = hits[i].second;
            std::size_t run = 0;
            while (i < hits.size() && hits[i].first == voxel && hits[i].second == label) {
                ++run;
                ++i;
            }
            // Labels arrive ascending, so strict > keeps the smaller id on ties.
            if (run > best_count) {
                best_count = run;
                best = label;
            }
        }
        cells[voxel] = best;
    }
    return result;
}

} // namespace occu::grid
