// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/curation/pipeline.hpp"
#include "occu/grid/class_table.hpp"
#include "occu/io/json_io.hpp"
#include "occu/io/ply.hpp"
#include "occu/lidar/simulate.hpp"
#include "occu/metrics/histogram.hpp"
#include "occu/splat/render.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace occu::cli {

using io::Json;

/// Bad flags, unknown config keys or values of the wrong type. Exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

/// The resolved configuration is a JSON document with the same shape as
/// default_config(). Every key is always present so reports can echo it.
Json default_config();

/// Layers `overlay` onto `base`. Keys missing from `base` and type changes
/// (other than int <-> float) raise UsageError naming the dotted key.
void merge_config(Json &base, const Json &overlay, const std::string &prefix = "");

/// Applies one "section.key=value" override. The value is parsed as JSON
/// when possible, otherwise taken as a string.
void apply_override(Json &config, const std::string &assignment);

/// Loads a config file. A report written by any command (an object with a
/// "config" member) is accepted too, so its echo can be replayed.
Json load_config_file(const std::filesystem::path &path);

struct Settings {
    Json json; // resolved document
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    grid::ClassTable table = grid::ClassTable::driving_default();
    curation::CurationConfig curation;
    double theta_e = 0.5, theta_o = 0.5;
    splat::RenderOptions render;
    lidar::LidarConfig lidar;
    double lidar_attenuation = 80.0, lidar_p_graze = 0.3;
    std::uint64_t embedder_seed = 42;
    double mmd_sigma = 0.0;
    bool mmd_unbiased = false;
    metrics::BevBinning bev;
    io::PlyFormat ply_format = io::PlyFormat::BinaryLittleEndian;
};

/// Converts a resolved document into typed settings. Validation failures
/// raise UsageError.
Settings settings_from_json(const Json &config);

} // namespace occu::cli
