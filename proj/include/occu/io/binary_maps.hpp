// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/lidar/range_map.hpp"

#include <filesystem>
#include <vector>

namespace occu::io {

/// "DPTH", u32 H, u32 W, then H*W row-major f32 meters.
void write_depth_bin(const std::filesystem::path &path, const std::vector<double> &depth,
                     int width, int height);
std::vector<float> read_depth_bin(const std::filesystem::path &path, int &width, int &height);

/// "RMAP", u32 H_d, W_d, C_h, f32 depth plane, then C_h f32 histogram planes.
void write_rmap(const std::filesystem::path &path, const lidar::RangeMap &rmap);
lidar::RangeMap read_rmap(const std::filesystem::path &path);

} // namespace occu::io
