// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/io/json_io.hpp"

#include "occu/io/image.hpp"
#include "occu/io/occg.hpp"
#include "occu/io/ply.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>

namespace occu::io {

namespace fs = std::filesystem;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

Vec3 vec3(const Json &j, const char *what) {
    if (!j.is_array() || j.size() != 3) throw IoError(std::string(what) + ": expected [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Json arr(const Vec3 &v) { return Json::array({v.x(), v.y(), v.z()}); }

std::array<double, 4> quat(const Json &j, const char *what) {
    if (!j.is_array() || j.size() != 4)
        throw IoError(std::string(what) + ": expected quaternion [w, x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Json arr(const std::array<double, 4> &q) { return Json::array({q[0], q[1], q[2], q[3]}); }

// Run f, turning JSON type errors and validation failures into IoError.
template <class F>
auto guarded(const std::string &what, F &&f) {
    try {
        return f();
    } catch (const nlohmann::json::exception &e) {
        throw IoError(what + ": " + e.what());
    } catch (const InvalidArgument &e) {
        throw IoError(what + ": " + e.what());
    }
}

} // namespace

Json load_json(const fs::path &path) {
    const std::string text = read_file(path);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw IoError("'" + path.string() + "': " + e.what());
    }
}

void save_json(const fs::path &path, const Json &j) { write_file(path, j.dump(2) + "\n"); }

Json to_json(const geom::RigidTransform &T) {
    return Json{{"quaternion", arr(T.quaternion_wxyz())}, {"translation", arr(T.translation())}};
}

geom::RigidTransform transform_from_json(const Json &j) {
    return guarded("transform", [&] {
        const auto q = j.contains("quaternion") ? quat(j.at("quaternion"), "quaternion")
                                                : std::array<double, 4>{1, 0, 0, 0};
        const Vec3 t = j.contains("translation") ? vec3(j.at("translation"), "translation")
                                                 : Vec3::Zero();
        return geom::RigidTransform::from_quaternion(q, t);
    });
}

Json to_json(const geom::CameraModel &cam) {
    const auto &p = cam.params();
    return Json{{"name", p.name},
                {"fx", p.fx},
                {"fy", p.fy},
                {"cx", p.cx},
                {"cy", p.cy},
                {"width", p.width},
                {"height", p.height},
                {"distortion",
                 {{"k1", p.distortion.k1},
                  {"k2", p.distortion.k2},
                  {"k3", p.distortion.k3},
                  {"p1", p.distortion.p1},
                  {"p2", p.distortion.p2}}},
                {"world_to_camera", to_json(p.world_to_camera)},
                {"projection", p.kind == geom::ProjectionKind::Pinhole ? "pinhole" : "orthographic"},
                {"z_near", p.z_near}};
}

geom::CameraModel camera_from_json(const Json &j) {
    return guarded("camera", [&] {
        geom::CameraModel::Params p;
        p.name = j.value("name", std::string("cam"));
        p.fx = j.at("fx").get<double>();
        p.fy = j.at("fy").get<double>();
        p.cx = j.at("cx").get<double>();
        p.cy = j.at("cy").get<double>();
        p.width = j.at("width").get<int>();
        p.height = j.at("height").get<int>();
        if (j.contains("distortion")) {
            const auto &d = j.at("distortion");
            p.distortion.k1 = d.value("k1", 0.0);
            p.distortion.k2 = d.value("k2", 0.0);
            p.distortion.k3 = d.value("k3", 0.0);
            p.distortion.p1 = d.value("p1", 0.0);
            p.distortion.p2 = d.value("p2", 0.0);
        }
        if (j.contains("world_to_camera"))
            p.world_to_camera = transform_from_json(j.at("world_to_camera"));
        const auto kind = j.value("projection", std::string("pinhole"));
        if (kind == "pinhole")
            p.kind = geom::ProjectionKind::Pinhole;
        else if (kind == "orthographic")
            p.kind = geom::ProjectionKind::Orthographic;
        else
            throw InvalidArgument("unknown projection '" + kind + "'");
        p.z_near = j.value("z_near", 1e-4);
        return geom::CameraModel(p);
    });
}

std::vector<geom::CameraModel> cameras_from_json(const Json &j) {
    const Json *list = &j;
    if (j.is_object() && j.contains("cameras")) list = &j.at("cameras");
    std::vector<geom::CameraModel> out;
    if (list->is_array()) {
        for (const auto &c : *list) out.push_back(camera_from_json(c));
    } else {
        out.push_back(camera_from_json(*list));
    }
    if (out.empty()) throw IoError("cameras: none given");
    return out;
}

geom::LidarRig rig_from_json(const Json &j) {
    return guarded("rig", [&] {
        const Json &list = j.is_object() && j.contains("sensors") ? j.at("sensors") : j;
        if (!list.is_array()) throw InvalidArgument("expected a list of sensors");
        std::vector<geom::LidarSensor> sensors;
        for (const auto &s : list) {
            geom::LidarSensor ls;
            if (s.contains("origin")) ls.origin = vec3(s.at("origin"), "origin");
            if (s.contains("orientation"))
                ls.orientation = geom::RigidTransform::from_quaternion(
                    quat(s.at("orientation"), "orientation"), Vec3::Zero());
            ls.max_range = s.value("max_range", 100.0);
            if (s.contains("beams")) {
                for (const auto &b : s.at("beams"))
                    ls.pattern.push_back({b.at(0).get<double>(), b.at(1).get<double>()});
            } else if (s.contains("beams_deg")) {
                for (const auto &b : s.at("beams_deg"))
                    ls.pattern.push_back({b.at(0).get<double>() * kDeg, b.at(1).get<double>() * kDeg});
            } else {
                const auto &p = s.at("pattern");
                const auto &el = p.at("elevation_deg");
                const auto &az = p.at("azimuth_deg");
                ls.pattern = geom::grid_pattern(el.at(0).get<double>() * kDeg,
                                                el.at(1).get<double>() * kDeg, p.at("rows").get<int>(),
                                                az.at(0).get<double>() * kDeg,
                                                az.at(1).get<double>() * kDeg, p.at("cols").get<int>());
            }
            sensors.push_back(std::move(ls));
        }
        return geom::LidarRig(std::move(sensors));
    });
}

Json to_json(const geom::LidarRig &rig) {
    Json sensors = Json::array();
    for (const auto &s : rig.sensors()) {
        Json beams = Json::array();
        for (const auto &b : s.pattern) beams.push_back(Json::array({b.azimuth, b.elevation}));
        sensors.push_back(Json{{"origin", arr(s.origin)},
                               {"orientation", arr(s.orientation.quaternion_wxyz())},
                               {"max_range", s.max_range},
                               {"beams", beams}});
    }
    return Json{{"sensors", sensors}};
}

grid::ClassTable class_table_from_json(const Json &j) {
    return guarded("class table", [&] {
        const Json &list = j.is_object() && j.contains("classes") ? j.at("classes") : j;
        std::vector<grid::ClassInfo> classes;
        for (const auto &c : list) {
            grid::ClassInfo info;
            info.id = static_cast<ClassId>(c.at("id").get<int>());
            if (c.at("id").get<int>() < 0 || c.at("id").get<int>() > 255)
                throw InvalidArgument("class id out of range");
            info.name = c.at("name").get<std::string>();
            const auto &rgb = c.at("rgb");
            for (int k = 0; k < 3; ++k) info.rgb[k] = rgb.at(k).get<std::uint8_t>();
            info.reflectivity = c.value("reflectivity", 0.0);
            info.background = c.value("background", false);
            classes.push_back(std::move(info));
        }
        return grid::ClassTable(std::move(classes));
    });
}

Json to_json(const grid::ClassTable &table) {
    Json list = Json::array();
    for (const auto &c : table.classes())
        list.push_back(Json{{"id", c.id},
                            {"name", c.name},
                            {"rgb", Json::array({c.rgb[0], c.rgb[1], c.rgb[2]})},
                            {"reflectivity", c.reflectivity},
                            {"background", c.background}});
    return Json{{"classes", list}};
}

Json to_json(const geom::OrientedBox &box, const grid::ClassTable &table) {
    const geom::RigidTransform pose = box.pose();
    return Json{{"center", arr(box.center())},
                {"quaternion", arr(pose.quaternion_wxyz())},
                {"half_extents", arr(box.half_extents())},
                {"class", box.class_id() < table.size() ? Json(table[box.class_id()].name)
                                                        : Json(box.class_id())},
                {"track_id", box.track_id()}};
}

geom::OrientedBox box_from_json(const Json &j, const grid::ClassTable &table) {
    return guarded("box", [&] {
        const auto pose = geom::RigidTransform::from_quaternion(
            j.contains("quaternion") ? quat(j.at("quaternion"), "quaternion")
                                     : std::array<double, 4>{1, 0, 0, 0},
            vec3(j.at("center"), "center"));
        const auto &c = j.at("class");
        ClassId cls;
        if (c.is_string()) {
            cls = table.id_of(c.get<std::string>());
        } else {
            const int id = c.get<int>();
            if (id < 1 || static_cast<std::size_t>(id) >= table.size())
                throw InvalidArgument("class id " + std::to_string(id) + " not in table");
            cls = static_cast<ClassId>(id);
        }
        const auto &tid = j.at("track_id");
        const std::string track = tid.is_string() ? tid.get<std::string>() : tid.dump();
        return geom::OrientedBox(pose.translation(), pose.rotation(),
                                 vec3(j.at("half_extents"), "half_extents"), cls, track);
    });
}

curation::ScenarioClip load_clip(const fs::path &manifest, const grid::ClassTable &table) {
    const Json j = load_json(manifest);
    const fs::path dir = manifest.parent_path();
    auto resolve = [&](const std::string &p) { return fs::path(p).is_absolute() ? fs::path(p) : dir / p; };

    curation::ScenarioClip clip;
    const Json *frames = nullptr;
    guarded("manifest", [&] {
        frames = &j.at("frames");
        if (!frames->is_array()) throw InvalidArgument("'frames' must be a list");
        return 0;
    });
    for (std::size_t f = 0; f < frames->size(); ++f) {
        const Json &fj = (*frames)[f];
        const std::string where = "frame " + std::to_string(f);
        curation::Frame fr;
        guarded(where, [&] {
            fr.timestamp = fj.at("timestamp").get<double>();
            fr.ego_pose = transform_from_json(fj.at("ego_pose"));
            if (fj.contains("sensor_origin")) fr.sensor_origin = vec3(fj.at("sensor_origin"), "sensor_origin");
            for (const auto &b : fj.value("boxes", Json::array())) fr.boxes.push_back(box_from_json(b, table));
            return 0;
        });
        const std::string sweep = guarded(where, [&] { return fj.at("sweep").get<std::string>(); });
        try {
            fr.sweep = read_ply(resolve(sweep));
        } catch (const IoError &e) {
            throw IoError(where + ": cannot read sweep '" + sweep + "': " + e.what());
        }
        clip.frames.push_back(std::move(fr));
    }

    if (j.contains("bev")) {
        const Json &b = j.at("bev");
        const auto [image, georef] = guarded("bev", [&] {
            return std::make_pair(b.at("image").get<std::string>(), b.at("georeference").get<std::string>());
        });
        const auto img = read_pgm(resolve(image));
        const Json g = load_json(resolve(georef));
        guarded("bev georeference", [&] {
            clip.bev.rows = img.width;
            clip.bev.cols = img.height;
            clip.bev.cell_size = g.at("cell_size").get<double>();
            const auto &o = g.at("origin");
            clip.bev.origin = Vec2(o.at(0).get<double>(), o.at(1).get<double>());
            clip.bev.labels.resize(img.pixels.size());
            for (std::size_t i = 0; i < img.pixels.size(); ++i) {
                const auto v = img.pixels[i];
                if (v >= table.size())
                    throw InvalidArgument("bev label " + std::to_string(v) + " not in class table");
                if (v != 0 && !table[static_cast<ClassId>(v)].background)
                    throw InvalidArgument("bev label '" + table[static_cast<ClassId>(v)].name +
                                          "' is not a background class");
                clip.bev.labels[i] = static_cast<ClassId>(v);
            }
            clip.bev.validate();
            return 0;
        });
    }
    guarded("manifest", [&] {
        clip.validate();
        return 0;
    });
    return clip;
}

void save_clip(const fs::path &manifest, const curation::ScenarioClip &clip,
               const grid::ClassTable &table) {
    const fs::path dir = manifest.parent_path();
    Json frames = Json::array();
    for (std::size_t f = 0; f < clip.frames.size(); ++f) {
        const auto &fr = clip.frames[f];
        std::ostringstream name;
        name << "sweep_" << std::setw(3) << std::setfill('0') << f << ".ply";
        write_ply(dir / name.str(), fr.sweep);
        Json boxes = Json::array();
        for (const auto &b : fr.boxes) boxes.push_back(to_json(b, table));
        frames.push_back(Json{{"timestamp", fr.timestamp},
                              {"ego_pose", to_json(fr.ego_pose)},
                              {"sensor_origin", arr(fr.sensor_origin)},
                              {"sweep", name.str()},
                              {"boxes", boxes}});
    }
    Json j{{"frames", frames}};
    if (!clip.bev.labels.empty()) {
        GrayImage img{clip.bev.rows, clip.bev.cols, 255, {}};
        img.pixels.assign(clip.bev.labels.begin(), clip.bev.labels.end());
        write_pgm(dir / "bev.pgm", img);
        save_json(dir / "bev.json",
                  Json{{"origin", Json::array({clip.bev.origin.x(), clip.bev.origin.y()})},
                       {"cell_size", clip.bev.cell_size}});
        j["bev"] = Json{{"image", "bev.pgm"}, {"georeference", "bev.json"}};
    }
    save_json(manifest, j);
}

} // namespace occu::io
