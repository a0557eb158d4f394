// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/point_cloud.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace occu::io {

enum class PlyFormat { Ascii, BinaryLittleEndian };

/// Extra per-vertex scalar written after x, y, z[, intensity][, label].
struct PlyProperty {
    std::string name;
    std::string type; // PLY scalar type: float, double, uchar, uint, int, ...
    std::vector<double> values;
};

/// Reads ascii or binary_little_endian vertex elements. Recognizes x, y, z,
/// optional intensity and optional label (or class); other properties are
/// skipped. Throws IoError on malformed input.
geom::PointCloud read_ply(const std::filesystem::path &path);

void write_ply(const std::filesystem::path &path, const geom::PointCloud &cloud,
               PlyFormat format = PlyFormat::BinaryLittleEndian,
               const std::vector<PlyProperty> &extra = {});

} // namespace occu::io
