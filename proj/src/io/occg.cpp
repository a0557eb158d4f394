// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/io/occg.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

namespace occu::io {

static_assert(std::endian::native == std::endian::little, "little-endian host required");

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failed for '" + path.string() + "'");
    return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &bytes) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

namespace {

template <class T>
void put(std::string &s, T v) {
    char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    s.append(b, sizeof(T));
}

template <class T>
T get(const std::string &s, std::size_t &pos) {
    if (pos + sizeof(T) > s.size()) throw IoError("OCCG: truncated header");
    T v;
    std::memcpy(&v, s.data() + pos, sizeof(T));
    pos += sizeof(T);
    return v;
}

} // namespace

std::string encode_occg(const grid::SemanticOccupancyGrid &grid) {
    const auto &g = grid.geometry();
    std::string s = "OCCG";
    put<std::uint32_t>(s, 1);
    for (int a = 0; a < 3; ++a) put<std::uint32_t>(s, static_cast<std::uint32_t>(g.dims[a]));
    for (int a = 0; a < 3; ++a) put<float>(s, static_cast<float>(g.voxel_size[a]));
    for (int a = 0; a < 3; ++a) put<float>(s, static_cast<float>(g.origin[a]));
    put<std::uint8_t>(s, 0);
    s.append(3, '\0');
    s.append(reinterpret_cast<const char *>(grid.classes().data()), grid.classes().size());
    return s;
}

grid::SemanticOccupancyGrid decode_occg(const std::string &s) {
    if (s.size() < 4 || s.compare(0, 4, "OCCG") != 0) throw IoError("OCCG: bad magic");
    std::size_t pos = 4;
    const auto version = get<std::uint32_t>(s, pos);
    if (version != 1) throw IoError("OCCG: unsupported version " + std::to_string(version));
    grid::GridGeometry g;
    for (int a = 0; a < 3; ++a) {
        const auto d = get<std::uint32_t>(s, pos);
        if (d < 1 || d > (1u << 20)) throw IoError("OCCG: implausible dimension");
        g.dims[a] = static_cast<int>(d);
    }
    for (int a = 0; a < 3; ++a) g.voxel_size[a] = get<float>(s, pos);
    for (int a = 0; a < 3; ++a) g.origin[a] = get<float>(s, pos);
    const auto layout = get<std::uint8_t>(s, pos);
    if (layout != 0) throw IoError("OCCG: unknown layout tag " + std::to_string(layout));
    pos += 3;
    try {
        g.validate();
    } catch (const InvalidArgument &e) {
        throw IoError(std::string("OCCG: ") + e.what());
    }
    if (s.size() != pos + g.voxel_count())
        throw IoError("OCCG: payload size does not match dims");
    std::vector<ClassId> cls(s.begin() + static_cast<std::ptrdiff_t>(pos), s.end());
    return grid::SemanticOccupancyGrid(g, std::move(cls));
}

void write_occg(const std::filesystem::path &path, const grid::SemanticOccupancyGrid &grid) {
    write_file(path, encode_occg(grid));
}

grid::SemanticOccupancyGrid read_occg(const std::filesystem::path &path) {
    try {
        return decode_occg(read_file(path));
    } catch (const IoError &e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

} // namespace occu::io
