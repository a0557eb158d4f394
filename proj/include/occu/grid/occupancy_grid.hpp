// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/common.hpp"
#include "occu/geom/point_cloud.hpp"

#include <optional>
#include <vector>

namespace occu::grid {

class ClassTable;

using Index3 = Eigen::Vector3i;

/// Grid geometry. dims = (H, W, D) voxel counts along x, y, z; `origin` is
/// the world position of the min corner of voxel (0, 0, 0).
///
/// Linear layout is x-fastest: index = (z * W + y) * H + x.
struct GridGeometry {
    Index3 dims{400, 400, 32};
    Vec3 voxel_size{0.25, 0.25, 0.25};
    Vec3 origin{-50.0, -50.0, -3.0};

    void validate() const;
    std::size_t voxel_count() const {
        return static_cast<std::size_t>(dims.x()) * dims.y() * dims.z();
    }
    bool in_bounds(const Index3 &i) const {
        return i.x() >= 0 && i.y() >= 0 && i.z() >= 0 && i.x() < dims.x() && i.y() < dims.y() &&
               i.z() < dims.z();
    }
    std::size_t linear(int x, int y, int z) const {
        return (static_cast<std::size_t>(z) * dims.y() + y) * dims.x() + x;
    }
    std::size_t linear(const Index3 &i) const { return linear(i.x(), i.y(), i.z()); }
    Index3 unravel(std::size_t idx) const;

    Vec3 voxel_center(const Index3 &i) const {
        return origin + (i.cast<double>().array() + 0.5).matrix().cwiseProduct(voxel_size);
    }
    /// Voxel containing p (floor of the continuous index); may be out of bounds.
    Index3 world_to_voxel(const Vec3 &p) const;
    /// World-space max corner.
    Vec3 max_corner() const { return origin + dims.cast<double>().cwiseProduct(voxel_size); }

    bool operator==(const GridGeometry &o) const {
        return dims == o.dims && voxel_size == o.voxel_size && origin == o.origin;
    }
};

/// Dense H x W x D grid of class ids (0 = empty).
class SemanticOccupancyGrid {
public:
    SemanticOccupancyGrid() : SemanticOccupancyGrid(GridGeometry{}) {}
    explicit SemanticOccupancyGrid(const GridGeometry &geometry);
    SemanticOccupancyGrid(const GridGeometry &geometry, std::vector<ClassId> classes);

    const GridGeometry &geometry() const noexcept { return geom_; }
    const Index3 &dims() const noexcept { return geom_.dims; }
    const std::vector<ClassId> &classes() const noexcept { return classes_; }
    std::vector<ClassId> &mutable_classes() noexcept { return classes_; }

    ClassId at(const Index3 &i) const { return classes_[geom_.linear(i)]; }
    ClassId at(int x, int y, int z) const { return classes_[geom_.linear(x, y, z)]; }
    void set(const Index3 &i, ClassId c) { classes_[geom_.linear(i)] = c; }

    /// Class of the voxel containing p, 0 outside the grid.
    ClassId lookup(const Vec3 &p) const;

    std::size_t occupied_count() const;
    /// Throws InvalidArgument when a class id is outside the table.
    void validate(const ClassTable &table) const;

    bool operator==(const SemanticOccupancyGrid &o) const {
        return geom_ == o.geom_ && classes_ == o.classes_;
    }

private:
    GridGeometry geom_;
    std::vector<ClassId> classes_;
};

struct VoxelizeResult {
    SemanticOccupancyGrid grid;
    std::size_t out_of_bounds = 0;
};

/// A voxel is occupied iff at least one point falls in it; its class is the
/// majority label of its points with ties going to the smaller id. Points
/// without a label, or labelled 0, count as class 1. Independent of point
/// order.
VoxelizeResult voxelize(const geom::PointCloud &points, const GridGeometry &geometry);

struct IouResult {
    double iou_occupied = 0.0;
    /// (class id, IoU) for every non-empty class present in pred or gt.
    std::vector<std::pair<ClassId, double>> per_class;
    double miou = 0.0; // mean over classes present in gt
};

/// Occupancy IoU and per-class IoU. Throws InvalidArgument on dims mismatch.
IouResult iou_miou(const SemanticOccupancyGrid &pred, const SemanticOccupancyGrid &gt);

} // namespace occu::grid
