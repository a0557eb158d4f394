// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/grid/occupancy_grid.hpp"

#include <filesystem>
#include <string>

namespace occu::io {

/// OCCG little-endian layout: "OCCG", u32 version (1), u32 H, W, D,
/// f32 voxel_size[3], f32 origin[3], u8 layout (0 = x fastest), 3 reserved
/// bytes, then H*W*D class ids.
std::string encode_occg(const grid::SemanticOccupancyGrid &grid);
grid::SemanticOccupancyGrid decode_occg(const std::string &bytes);

void write_occg(const std::filesystem::path &path, const grid::SemanticOccupancyGrid &grid);
grid::SemanticOccupancyGrid read_occg(const std::filesystem::path &path);

/// Whole-file helpers shared by the binary formats.
std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, const std::string &bytes);

} // namespace occu::io
