// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/io/ply.hpp"

#include "occu/io/occg.hpp"

#include <cmath>
#include <cstring>
#include <iomanip>
#include <map>
#include <sstream>

namespace occu::io {

namespace {

std::size_t type_size(const std::string &t) {
    static const std::map<std::string, std::size_t> sizes = {
        {"char", 1},   {"uchar", 1},   {"int8", 1},   {"uint8", 1},   {"short", 2},
        {"ushort", 2}, {"int16", 2},   {"uint16", 2}, {"int", 4},     {"uint", 4},
        {"int32", 4},  {"uint32", 4},  {"float", 4},  {"float32", 4}, {"double", 8},
        {"float64", 8}};
    const auto it = sizes.find(t);
    if (it == sizes.end()) throw IoError("PLY: unsupported property type '" + t + "'");
    return it->second;
}

double decode(const char *p, const std::string &t) {
    auto as = [p]<class T>(T) {
        T v;
        std::memcpy(&v, p, sizeof(T));
        return static_cast<double>(v);
    };
    if (t == "char" || t == "int8") return as(std::int8_t{});
    if (t == "uchar" || t == "uint8") return as(std::uint8_t{});
    if (t == "short" || t == "int16") return as(std::int16_t{});
    if (t == "ushort" || t == "uint16") return as(std::uint16_t{});
    if (t == "int" || t == "int32") return as(std::int32_t{});
    if (t == "uint" || t == "uint32") return as(std::uint32_t{});
    if (t == "float" || t == "float32") return as(float{});
    return as(double{});
}

void encode(std::string &out, double v, const std::string &t) {
    auto put = [&out]<class T>(T x) {
        char b[sizeof(T)];
        std::memcpy(b, &x, sizeof(T));
        out.append(b, sizeof(T));
    };
    if (t == "char" || t == "int8") return put(static_cast<std::int8_t>(v));
    if (t == "uchar" || t == "uint8") return put(static_cast<std::uint8_t>(v));
    if (t == "short" || t == "int16") return put(static_cast<std::int16_t>(v));
    if (t == "ushort" || t == "uint16") return put(static_cast<std::uint16_t>(v));
    if (t == "int" || t == "int32") return put(static_cast<std::int32_t>(v));
    if (t == "uint" || t == "uint32") return put(static_cast<std::uint32_t>(v));
    if (t == "float" || t == "float32") return put(static_cast<float>(v));
    if (t == "double" || t == "float64") return put(v);
    throw IoError("PLY: unsupported property type '" + t + "'");
}

bool is_integer(const std::string &t) { return t != "float" && t != "float32" && t != "double" && t != "float64"; }

struct Prop {
    std::string type, name;
};

} // namespace

geom::PointCloud read_ply(const std::filesystem::path &path) {
    const std::string data = read_file(path);
    const std::string where = "PLY '" + path.string() + "': ";
    std::size_t pos = 0;
    auto next_line = [&]() -> std::string {
        const auto nl = data.find('\n', pos);
        if (nl == std::string::npos) throw IoError(where + "truncated header");
        std::string line = data.substr(pos, nl - pos);
        pos = nl + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
    };

    if (next_line() != "ply") throw IoError(where + "missing 'ply' magic");
    bool binary = false;
    std::size_t n_vertex = 0;
    bool in_vertex = false, seen_vertex = false;
    std::vector<Prop> props;
    for (;;) {
        const std::string line = next_line();
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "end_header") break;
        if (kw == "format") {
            std::string fmt;
            ls >> fmt;
            if (fmt == "ascii")
                binary = false;
            else if (fmt == "binary_little_endian")
                binary = true;
            else
                throw IoError(where + "unsupported format '" + fmt + "'");
        } else if (kw == "element") {
            std::string name;
            std::size_t count = 0;
            ls >> name >> count;
            in_vertex = name == "vertex";
            if (in_vertex) {
                if (seen_vertex) throw IoError(where + "duplicate vertex element");
                seen_vertex = true;
                n_vertex = count;
            } else if (!seen_vertex && count > 0) {
                throw IoError(where + "elements before 'vertex' are not supported");
            }
        } else if (kw == "property") {
            std::string type, name;
            ls >> type;
            if (type == "list") {
                if (in_vertex) throw IoError(where + "list properties on vertices are not supported");
                continue;
            }
            ls >> name;
            if (in_vertex) {
                type_size(type);
                props.push_back({type, name});
            }
        } else if (kw != "comment" && kw != "obj_info" && !kw.empty()) {
            throw IoError(where + "unexpected header line '" + line + "'");
        }
    }
    if (!seen_vertex) throw IoError(where + "no vertex element");

    int ix = -1, iy = -1, iz = -1, ii = -1, il = -1;
    for (int k = 0; k < static_cast<int>(props.size()); ++k) {
        const auto &n = props[k].name;
        if (n == "x") ix = k;
        if (n == "y") iy = k;
        if (n == "z") iz = k;
        if (n == "intensity") ii = k;
        if (n == "label" || n == "class") il = k;
    }
    if (ix < 0 || iy < 0 || iz < 0) throw IoError(where + "vertex needs x, y and z");

    geom::PointCloud cloud;
    cloud.xyz.resize(n_vertex);
    if (ii >= 0) cloud.intensity.resize(n_vertex);
    if (il >= 0) cloud.label.resize(n_vertex);
    std::vector<double> row(props.size());

    auto store = [&](std::size_t i) {
        cloud.xyz[i] = Vec3(row[ix], row[iy], row[iz]);
        if (ii >= 0) cloud.intensity[i] = static_cast<float>(row[ii]);
        if (il >= 0) {
            if (!(row[il] >= 0 && row[il] <= 255)) throw IoError(where + "label out of range");
            cloud.label[i] = static_cast<ClassId>(row[il]);
        }
    };

    if (binary) {
        std::size_t stride = 0;
        for (const auto &p : props) stride += type_size(p.type);
        if (data.size() - pos < stride * n_vertex) throw IoError(where + "truncated vertex data");
        for (std::size_t i = 0; i < n_vertex; ++i) {
            const char *p = data.data() + pos + i * stride;
            for (std::size_t k = 0; k < props.size(); ++k) {
                row[k] = decode(p, props[k].type);
                p += type_size(props[k].type);
            }
            store(i);
        }
    } else {
        std::istringstream body(data.substr(pos));
        body.imbue(std::locale::classic());
        for (std::size_t i = 0; i < n_vertex; ++i) {
            for (auto &v : row)
                if (!(body >> v)) throw IoError(where + "truncated vertex data");
            store(i);
        }
    }
    return cloud;
}

void write_ply(const std::filesystem::path &path, const geom::PointCloud &cloud, PlyFormat format,
               const std::vector<PlyProperty> &extra) {
    cloud.validate();
    for (const auto &e : extra) {
        type_size(e.type);
        if (e.values.size() != cloud.size())
            throw InvalidArgument("write_ply: property '" + e.name + "' has wrong length");
    }
    std::ostringstream h;
    h << "ply\nformat " << (format == PlyFormat::Ascii ? "ascii" : "binary_little_endian")
      << " 1.0\nelement vertex " << cloud.size() << "\n";
    // Doubles keep coordinates exact through a round trip.
    h << "property double x\nproperty double y\nproperty double z\n";
    if (cloud.has_intensity()) h << "property float intensity\n";
    if (cloud.has_label()) h << "property uchar label\n";
    for (const auto &e : extra) h << "property " << e.type << " " << e.name << "\n";
    h << "end_header\n";

    std::string out = h.str();
    if (format == PlyFormat::BinaryLittleEndian) {
        out.reserve(out.size() + cloud.size() * (24 + 5 + 8 * extra.size()));
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            for (int a = 0; a < 3; ++a) encode(out, cloud.xyz[i][a], "double");
            if (cloud.has_intensity()) encode(out, cloud.intensity[i], "float");
            if (cloud.has_label()) encode(out, cloud.label[i], "uchar");
            for (const auto &e : extra) encode(out, e.values[i], e.type);
        }
    } else {
        std::ostringstream b;
        b.imbue(std::locale::classic());
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            b << std::setprecision(17) << cloud.xyz[i].x() << ' ' << cloud.xyz[i].y() << ' '
              << cloud.xyz[i].z();
            if (cloud.has_intensity()) b << ' ' << std::setprecision(9) << cloud.intensity[i];
            if (cloud.has_label()) b << ' ' << static_cast<int>(cloud.label[i]);
            for (const auto &e : extra) {
                if (is_integer(e.type))
                    b << ' ' << static_cast<long long>(std::llround(e.values[i]));
                else
                    b << ' ' << std::setprecision(17) << e.values[i];
            }
            b << '\n';
        }
        out += b.str();
    }
    write_file(path, out);
}

} // namespace occu::io
