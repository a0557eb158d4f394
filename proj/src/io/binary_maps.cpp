// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/io/binary_maps.hpp"

#include "occu/io/occg.hpp"

#include <cstring>

namespace occu::io {

namespace {

void put_u32(std::string &s, std::uint32_t v) { s.append(reinterpret_cast<const char *>(&v), 4); }
void put_f32(std::string &s, double v) {
    const float f = static_cast<float>(v);
    s.append(reinterpret_cast<const char *>(&f), 4);
}

template <class T>
T get(const std::string &s, std::size_t &pos, const std::string &where) {
    if (pos + sizeof(T) > s.size()) throw IoError(where + "truncated");
    T v;
    std::memcpy(&v, s.data() + pos, sizeof(T));
    pos += sizeof(T);
    return v;
}

} // namespace

void write_depth_bin(const std::filesystem::path &path, const std::vector<double> &depth,
                     int width, int height) {
    if (depth.size() != static_cast<std::size_t>(width) * height)
        throw InvalidArgument("write_depth_bin: size mismatch");
    std::string s = "DPTH";
    put_u32(s, static_cast<std::uint32_t>(height));
    put_u32(s, static_cast<std::uint32_t>(width));
    for (double d : depth) put_f32(s, d);
    write_file(path, s);
}

std::vector<float> read_depth_bin(const std::filesystem::path &path, int &width, int &height) {
    const std::string s = read_file(path);
    const std::string where = "DPTH '" + path.string() + "': ";
    if (s.compare(0, 4, "DPTH") != 0) throw IoError(where + "bad magic");
    std::size_t pos = 4;
    height = static_cast<int>(get<std::uint32_t>(s, pos, where));
    width = static_cast<int>(get<std::uint32_t>(s, pos, where));
    const std::size_t n = static_cast<std::size_t>(width) * height;
    if (s.size() != pos + 4 * n) throw IoError(where + "payload size mismatch");
    std::vector<float> out(n);
    std::memcpy(out.data(), s.data() + pos, 4 * n);
    return out;
}

void write_rmap(const std::filesystem::path &path, const lidar::RangeMap &m) {
    std::string s = "RMAP";
    put_u32(s, static_cast<std::uint32_t>(m.rows));
    put_u32(s, static_cast<std::uint32_t>(m.cols));
    put_u32(s, static_cast<std::uint32_t>(m.channels));
    s.reserve(s.size() + 4 * (m.depth.size() + m.hist.size()));
    for (double d : m.depth) put_f32(s, d);
    for (double h : m.hist) put_f32(s, h);
    write_file(path, s);
}

lidar::RangeMap read_rmap(const std::filesystem::path &path) {
    const std::string s = read_file(path);
    const std::string where = "RMAP '" + path.string() + "': ";
    if (s.compare(0, 4, "RMAP") != 0) throw IoError(where + "bad magic");
    std::size_t pos = 4;
    const auto rows = get<std::uint32_t>(s, pos, where);
    const auto cols = get<std::uint32_t>(s, pos, where);
    const auto ch = get<std::uint32_t>(s, pos, where);
    if (rows < 2 || cols < 2 || rows > 65536 || cols > 65536 || ch > 4096)
        throw IoError(where + "implausible dimensions");
    lidar::RangeMap m(static_cast<int>(rows), static_cast<int>(cols), static_cast<int>(ch), 0, 0);
    if (s.size() != pos + 4 * (m.depth.size() + m.hist.size()))
        throw IoError(where + "payload size mismatch");
    for (auto &d : m.depth) d = get<float>(s, pos, where);
    for (auto &h : m.hist) h = get<float>(s, pos, where);
    return m;
}

} // namespace occu::io
