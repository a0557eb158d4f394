// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/grid/class_table.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace occu::io {

/// Grey image, row-major, 8 or 16 bits per sample.
struct GrayImage {
    int width = 0, height = 0;
    int max_value = 255;
    std::vector<std::uint16_t> pixels;
};

/// Binary PGM (P5). 16-bit samples are big-endian as the format requires.
void write_pgm(const std::filesystem::path &path, const GrayImage &img);
GrayImage read_pgm(const std::filesystem::path &path);

/// Depth in meters to millimetres, saturating at 65535; 0 stays 0.
GrayImage depth_to_pgm16(const std::vector<double> &depth, int width, int height);
GrayImage labels_to_pgm8(const std::vector<std::uint8_t> &labels, int width, int height);

/// Binary PPM (P6) colouring class ids with the table palette.
void write_semantic_ppm(const std::filesystem::path &path, const std::vector<std::uint8_t> &labels,
                        int width, int height, const grid::ClassTable &table);

} // namespace occu::io
