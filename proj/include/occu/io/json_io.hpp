// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/curation/clip.hpp"
#include "occu/geom/camera.hpp"
#include "occu/geom/lidar_rig.hpp"
#include "occu/grid/class_table.hpp"

#include <json.hpp>

#include <filesystem>

namespace occu::io {

using Json = nlohmann::ordered_json;

Json load_json(const std::filesystem::path &path);
void save_json(const std::filesystem::path &path, const Json &j);

/// {"quaternion": [w, x, y, z], "translation": [x, y, z]}
Json to_json(const geom::RigidTransform &T);
geom::RigidTransform transform_from_json(const Json &j);

Json to_json(const geom::CameraModel &cam);
geom::CameraModel camera_from_json(const Json &j);
/// Accepts {"cameras": [...]}, a bare array, or a single camera object.
std::vector<geom::CameraModel> cameras_from_json(const Json &j);

/// Sensors with "origin", "orientation" (quaternion), "max_range" and a
/// pattern given either as {"elevation_deg": [lo, hi], "rows",
/// "azimuth_deg": [lo, hi], "cols"} or as "beams_deg": [[az, el], ...].
geom::LidarRig rig_from_json(const Json &j);
Json to_json(const geom::LidarRig &rig);

grid::ClassTable class_table_from_json(const Json &j);
Json to_json(const grid::ClassTable &table);

Json to_json(const geom::OrientedBox &box, const grid::ClassTable &table);
geom::OrientedBox box_from_json(const Json &j, const grid::ClassTable &table);

/// Reads a clip manifest; relative paths resolve against its directory.
/// Throws IoError naming the frame when a sweep cannot be read.
curation::ScenarioClip load_clip(const std::filesystem::path &manifest,
                                 const grid::ClassTable &table);

/// Writes sweeps (binary PLY), the BEV PGM and georeference next to the
/// manifest.
void save_clip(const std::filesystem::path &manifest, const curation::ScenarioClip &clip,
               const grid::ClassTable &table);

} // namespace occu::io
