// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/io/image.hpp"

#include "occu/io/occg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace occu::io {

void write_pgm(const std::filesystem::path &path, const GrayImage &img) {
    if (img.width < 1 || img.height < 1 || img.max_value < 1 || img.max_value > 65535)
        throw InvalidArgument("write_pgm: invalid image");
    if (img.pixels.size() != static_cast<std::size_t>(img.width) * img.height)
        throw InvalidArgument("write_pgm: pixel count does not match size");
    std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                      "\n" + std::to_string(img.max_value) + "\n";
    const bool wide = img.max_value > 255;
    for (auto v : img.pixels) {
        v = std::min<std::uint16_t>(v, static_cast<std::uint16_t>(img.max_value));
        if (wide) out.push_back(static_cast<char>(v >> 8));
        out.push_back(static_cast<char>(v & 0xff));
    }
    write_file(path, out);
}

GrayImage read_pgm(const std::filesystem::path &path) {
    const std::string s = read_file(path);
    const std::string where = "PGM '" + path.string() + "': ";
    std::size_t pos = 0;
    auto token = [&]() -> long {
        for (;;) {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos < s.size() && s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n') ++pos;
                continue;
            }
            break;
        }
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw IoError(where + "malformed header");
        return std::stol(s.substr(start, pos - start));
    };
    if (s.size() < 2 || s[0] != 'P' || s[1] != '5') throw IoError(where + "not a binary PGM");
    pos = 2;
    GrayImage img;
    img.width = static_cast<int>(token());
    img.height = static_cast<int>(token());
    img.max_value = static_cast<int>(token());
    if (img.width < 1 || img.height < 1 || img.max_value < 1 || img.max_value > 65535)
        throw IoError(where + "invalid header values");
    ++pos; // single whitespace before the raster
    const bool wide = img.max_value > 255;
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    if (s.size() < pos + n * (wide ? 2 : 1)) throw IoError(where + "truncated raster");
    img.pixels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (wide)
            img.pixels[i] = static_cast<std::uint16_t>(
                (static_cast<unsigned char>(s[pos + 2 * i]) << 8) |
                static_cast<unsigned char>(s[pos + 2 * i + 1]));
        else
            img.pixels[i] = static_cast<unsigned char>(s[pos + i]);
    }
    return img;
}

GrayImage depth_to_pgm16(const std::vector<double> &depth, int width, int height) {
    GrayImage img{width, height, 65535, {}};
    img.pixels.resize(depth.size());
    for (std::size_t i = 0; i < depth.size(); ++i) {
        const double mm = std::round(depth[i] * 1000.0);
        img.pixels[i] = static_cast<std::uint16_t>(std::clamp(mm, 0.0, 65535.0));
    }
    return img;
}

GrayImage labels_to_pgm8(const std::vector<std::uint8_t> &labels, int width, int height) {
    GrayImage img{width, height, 255, {}};
    img.pixels.assign(labels.begin(), labels.end());
    return img;
}

void write_semantic_ppm(const std::filesystem::path &path, const std::vector<std::uint8_t> &labels,
                        int width, int height, const grid::ClassTable &table) {
    if (labels.size() != static_cast<std::size_t>(width) * height)
        throw InvalidArgument("write_semantic_ppm: pixel count does not match size");
    std::string out =
        "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    for (auto l : labels) {
        const auto rgb = l < table.size() ? table[l].rgb : std::array<std::uint8_t, 3>{255, 0, 255};
        out.append(reinterpret_cast<const char *>(rgb.data()), 3);
    }
    write_file(path, out);
}

} // namespace occu::io
