// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <cmath>

namespace occu::cli {

Json default_config() {
    const curation::CurationConfig cur;
    const auto &ag = cur.aggregate;
    const auto &geo = cur.geometry;
    const splat::RenderOptions ren;
    const lidar::LidarConfig lid;
    const metrics::BevBinning bev;

    Json j;
    j["seed"] = 0;
    j["threads"] = 0;
    j["curation"] = {
        {"filter_mode", "knn"},
        {"filter_k_neighbors", ag.filter.k_neighbors},
        {"filter_k", ag.filter.k},
        {"icp_refine", ag.refine},
        {"icp_downsample", ag.icp.downsample},
        {"icp_initial_radius", ag.icp.initial_radius},
        {"icp_radius_decay", ag.icp.radius_decay},
        {"icp_min_radius", ag.icp.min_radius},
        {"icp_convergence", ag.icp.convergence},
        {"icp_max_iterations", ag.icp.max_iterations},
        {"densify", cur.densify_enabled},
        {"densify_voxel", 0.0}, // 0: half the grid voxel
        {"densify_truncation_voxels", cur.densify.truncation_voxels},
        {"densify_normal_neighbors", cur.densify.normal_neighbors},
        {"densify_min_weight", cur.densify.min_weight},
        {"reference_frame", cur.reference_frame},
        {"fallback_class", "generic-object"},
        {"grid_dims", {geo.dims.x(), geo.dims.y(), geo.dims.z()}},
        {"grid_voxel_size", geo.voxel_size.x()},
        {"grid_origin", {geo.origin.x(), geo.origin.y(), geo.origin.z()}},
        {"scenario_theta_e", 0.5},
        {"scenario_theta_o", 0.5},
    };
    j["render"] = {
        {"projection", "ut"},
        {"gaussian_scale", ren.scale},
        {"opacity", ren.opacity},
        {"ut_alpha", ren.raster.ut.alpha},
        {"ut_beta", ren.raster.ut.beta},
        {"ut_kappa", ren.raster.ut.kappa},
        {"tile", ren.raster.tile},
        {"alpha_min", ren.raster.alpha_min},
        {"transmittance_min", ren.raster.transmittance_min},
        {"normalize_depth", ren.raster.normalize_depth},
    };
    j["lidar"] = {
        {"uniform_samples", lid.sampling.n_uniform},
        {"resample", lid.sampling.n_resample},
        {"min_range", lid.sampling.min_range},
        {"sharpness", lid.render.sharpness},
        {"w_min", lid.render.w_min},
        {"normalize_depth", lid.render.normalize_depth},
        {"fourier_frequencies", lid.fourier_frequencies},
        {"range_rows", lid.range_rows},
        {"range_cols", lid.range_cols},
        {"attenuation", 80.0},
        {"p_graze", 0.3},
        {"embedder_seed", 42},
    };
    j["metrics"] = {
        {"mmd_sigma", 0.0}, // 0: median heuristic
        {"mmd_unbiased", false},
        {"bev_bins", {bev.nx, bev.ny}},
        {"bev_x_range", {bev.x_min, bev.x_max}},
        {"bev_y_range", {bev.y_min, bev.y_max}},
    };
    j["io"] = {
        {"ply_format", "binary"},
        {"class_table", ""}, // empty: built-in driving vocabulary
    };
    return j;
}

namespace {

bool compatible(const Json &a, const Json &b) {
    if (a.is_number() && b.is_number()) {
        // Integers stay integers; floats accept either.
        return a.is_number_float() || !b.is_number_float() ||
               (std::isfinite(b.get<double>()) && b.get<double>() == std::floor(b.get<double>()));
    }
    return a.type() == b.type();
}

} // namespace

void merge_config(Json &base, const Json &overlay, const std::string &prefix) {
    if (!overlay.is_object()) throw UsageError("config" + (prefix.empty() ? "" : " '" + prefix + "'") +
                                               ": expected an object");
    for (const auto &[key, value] : overlay.items()) {
        const std::string path = prefix.empty() ? key : prefix + "." + key;
        if (!base.contains(key)) throw UsageError("unknown config key '" + path + "'");
        Json &slot = base[key];
        if (slot.is_object()) {
            merge_config(slot, value, path);
        } else if (!compatible(slot, value)) {
            throw UsageError("config key '" + path + "': expected " +
                             std::string(slot.type_name()) + ", got " + value.type_name());
        } else if (slot.is_number_integer() && value.is_number_float()) {
            slot = static_cast<std::int64_t>(value.get<double>());
        } else {
            slot = value;
        }
    }
}

void apply_override(Json &config, const std::string &assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw UsageError("--set expects key=value, got '" + assignment + "'");
    const std::string key = assignment.substr(0, eq), text = assignment.substr(eq + 1);
    Json value = Json::parse(text, nullptr, false);
    if (value.is_discarded()) value = text;

    // Build the nested overlay for the dotted key.
    Json overlay = value;
    std::size_t end = key.size();
    while (true) {
        const auto dot = key.rfind('.', end - 1);
        const std::string part =
            key.substr(dot == std::string::npos ? 0 : dot + 1, end - (dot == std::string::npos ? 0 : dot + 1));
        if (part.empty()) throw UsageError("--set: malformed key '" + key + "'");
        Json wrap = Json::object();
        wrap[part] = std::move(overlay);
        overlay = std::move(wrap);
        if (dot == std::string::npos) break;
        end = dot;
    }
    merge_config(config, overlay);
}

Json load_config_file(const std::filesystem::path &path) {
    Json j = io::load_json(path);
    if (j.is_object() && j.contains("config") && j["config"].is_object()) return j["config"];
    return j;
}

namespace {

template <class T> T get(const Json &j, const char *section, const char *key) {
    return j.at(section).at(key).get<T>();
}

void require(bool ok, const std::string &what) {
    if (!ok) throw UsageError(what);
}

} // namespace

Settings settings_from_json(const Json &j) {
    Settings s;
    s.json = j;
    require(j.at("seed").get<std::int64_t>() >= 0, "seed must be >= 0");
    require(j.at("threads").get<std::int64_t>() >= 0, "threads must be >= 0");
    s.seed = j.at("seed").get<std::uint64_t>();
    s.threads = j.at("threads").get<std::size_t>();

    const auto table_path = get<std::string>(j, "io", "class_table");
    if (!table_path.empty()) s.table = io::class_table_from_json(io::load_json(table_path));
    const auto ply = get<std::string>(j, "io", "ply_format");
    require(ply == "binary" || ply == "ascii", "io.ply_format must be 'binary' or 'ascii'");
    s.ply_format = ply == "ascii" ? io::PlyFormat::Ascii : io::PlyFormat::BinaryLittleEndian;

    // Curation.
    auto &c = s.curation;
    const auto mode = get<std::string>(j, "curation", "filter_mode");
    require(mode == "knn" || mode == "centroid", "curation.filter_mode must be 'knn' or 'centroid'");
    c.aggregate.filter.mode =
        mode == "knn" ? curation::FilterMode::Knn : curation::FilterMode::Centroid;
    c.aggregate.filter.k_neighbors = get<std::size_t>(j, "curation", "filter_k_neighbors");
    c.aggregate.filter.k = get<double>(j, "curation", "filter_k");
    c.aggregate.refine = get<bool>(j, "curation", "icp_refine");
    c.aggregate.icp.downsample = get<double>(j, "curation", "icp_downsample");
    c.aggregate.icp.initial_radius = get<double>(j, "curation", "icp_initial_radius");
    c.aggregate.icp.radius_decay = get<double>(j, "curation", "icp_radius_decay");
    c.aggregate.icp.min_radius = get<double>(j, "curation", "icp_min_radius");
    c.aggregate.icp.convergence = get<double>(j, "curation", "icp_convergence");
    c.aggregate.icp.max_iterations = get<int>(j, "curation", "icp_max_iterations");
    c.densify_enabled = get<bool>(j, "curation", "densify");
    c.densify.voxel = get<double>(j, "curation", "densify_voxel");
    c.densify.truncation_voxels = get<int>(j, "curation", "densify_truncation_voxels");
    c.densify.normal_neighbors = get<std::size_t>(j, "curation", "densify_normal_neighbors");
    c.densify.min_weight = get<double>(j, "curation", "densify_min_weight");
    c.reference_frame = get<int>(j, "curation", "reference_frame");
    try {
        c.fallback_class = s.table.id_of(get<std::string>(j, "curation", "fallback_class"));
    } catch (const InvalidArgument &e) {
        throw UsageError(std::string("curation.fallback_class: ") + e.what());
    }
    const auto dims = j.at("curation").at("grid_dims");
    const auto origin = j.at("curation").at("grid_origin");
    require(dims.is_array() && dims.size() == 3 && origin.is_array() && origin.size() == 3,
            "curation.grid_dims and curation.grid_origin need 3 entries");
    for (int a = 0; a < 3; ++a) {
        c.geometry.dims[a] = dims[a].get<int>();
        c.geometry.origin[a] = origin[a].get<double>();
    }
    c.geometry.voxel_size = Vec3::Constant(get<double>(j, "curation", "grid_voxel_size"));
    try {
        c.geometry.validate();
    } catch (const InvalidArgument &e) {
        throw UsageError(std::string("curation grid: ") + e.what());
    }
    s.theta_e = get<double>(j, "curation", "scenario_theta_e");
    s.theta_o = get<double>(j, "curation", "scenario_theta_o");

    // Rendering.
    auto &r = s.render;
    const auto proj = get<std::string>(j, "render", "projection");
    require(proj == "ut" || proj == "ewa", "render.projection must be 'ut' or 'ewa'");
    r.raster.backend = proj == "ut" ? splat::Backend::Ut : splat::Backend::Ewa;
    r.scale = get<double>(j, "render", "gaussian_scale");
    require(r.scale > 0.0, "render.gaussian_scale must be > 0");
    r.opacity = get<double>(j, "render", "opacity");
    require(r.opacity > 0.0 && r.opacity < 1.0, "render.opacity must be in (0, 1)");
    r.raster.ut.alpha = get<double>(j, "render", "ut_alpha");
    r.raster.ut.beta = get<double>(j, "render", "ut_beta");
    r.raster.ut.kappa = get<double>(j, "render", "ut_kappa");
    r.raster.tile = get<int>(j, "render", "tile");
    require(r.raster.tile >= 1, "render.tile must be >= 1");
    r.raster.alpha_min = get<double>(j, "render", "alpha_min");
    r.raster.transmittance_min = get<double>(j, "render", "transmittance_min");
    r.raster.normalize_depth = get<bool>(j, "render", "normalize_depth");
    try {
        r.raster.ut.validate();
    } catch (const InvalidArgument &e) {
        throw UsageError(std::string("render: ") + e.what());
    }

    // LiDAR.
    auto &l = s.lidar;
    l.seed = s.seed;
    l.sampling.n_uniform = get<std::size_t>(j, "lidar", "uniform_samples");
    l.sampling.n_resample = get<std::size_t>(j, "lidar", "resample");
    l.sampling.min_range = get<double>(j, "lidar", "min_range");
    require(l.sampling.n_uniform >= 2, "lidar.uniform_samples must be >= 2");
    l.render.sharpness = get<double>(j, "lidar", "sharpness");
    require(l.render.sharpness > 0.0, "lidar.sharpness must be > 0");
    l.render.w_min = get<double>(j, "lidar", "w_min");
    l.render.normalize_depth = get<bool>(j, "lidar", "normalize_depth");
    l.fourier_frequencies = get<int>(j, "lidar", "fourier_frequencies");
    l.range_rows = get<int>(j, "lidar", "range_rows");
    l.range_cols = get<int>(j, "lidar", "range_cols");
    require(l.range_rows >= 1 && l.range_cols >= 1, "lidar range map size must be >= 1");
    s.lidar_attenuation = get<double>(j, "lidar", "attenuation");
    s.lidar_p_graze = get<double>(j, "lidar", "p_graze");
    s.embedder_seed = get<std::uint64_t>(j, "lidar", "embedder_seed");

    // Metrics.
    s.mmd_sigma = get<double>(j, "metrics", "mmd_sigma");
    s.mmd_unbiased = get<bool>(j, "metrics", "mmd_unbiased");
    const auto bins = j.at("metrics").at("bev_bins");
    const auto xr = j.at("metrics").at("bev_x_range");
    const auto yr = j.at("metrics").at("bev_y_range");
    require(bins.size() == 2 && xr.size() == 2 && yr.size() == 2,
            "metrics.bev_* entries need 2 values");
    s.bev.nx = bins[0].get<int>();
    s.bev.ny = bins[1].get<int>();
    s.bev.x_min = xr[0].get<double>();
    s.bev.x_max = xr[1].get<double>();
    s.bev.y_min = yr[0].get<double>();
    s.bev.y_max = yr[1].get<double>();
    try {
        s.bev.validate();
    } catch (const InvalidArgument &e) {
        throw UsageError(std::string("metrics: ") + e.what());
    }
    return s;
}

} // namespace occu::cli
