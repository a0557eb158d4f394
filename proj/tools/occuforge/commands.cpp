// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include "occu/curation/labeling.hpp"
#include "occu/io/binary_maps.hpp"
#include "occu/io/image.hpp"
#include "occu/io/occg.hpp"
#include "occu/metrics/distances.hpp"
#include "occu/parallel.hpp"
#include "occu/synth/scenes.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <set>

namespace fs = std::filesystem;

namespace occu::cli {

namespace {

constexpr const char *kVersion = "0.1.0";

std::optional<std::size_t> env_threads() {
    const char *v = std::getenv("OCCU_FORGE_THREADS");
    if (v == nullptr || *v == '\0') return std::nullopt;
    char *end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 0) throw UsageError(std::string("OCCU_FORGE_THREADS: invalid value '") + v + "'");
    return static_cast<std::size_t>(n);
}

std::string file_digest(const fs::path &p) { return digest_hex(io::read_file(p)); }

Json input_entry(const fs::path &p) { return Json{{"path", p.generic_string()}, {"fnv1a64", file_digest(p)}}; }

Json new_report(const char *command, const Settings &s) {
    Json r;
    r["command"] = command;
    r["version"] = kVersion;
    r["config"] = s.json;
    r["inputs"] = Json::array();
    r["outputs"] = Json::array();
    return r;
}

void add_output(Json &report, const fs::path &p) { report["outputs"].push_back(input_entry(p)); }

void finish(Json &report, const fs::path &path, std::ostream &out) {
    io::save_json(path, report);
    out << report.dump(2) << "\n";
}

// Files a clip manifest references, for the report's input digests.
std::vector<fs::path> manifest_files(const fs::path &manifest) {
    std::vector<fs::path> files{manifest};
    const Json j = io::load_json(manifest);
    const fs::path dir = manifest.parent_path();
    auto add = [&](const Json &v) {
        if (!v.is_string()) return;
        const fs::path p = v.get<std::string>();
        const fs::path full = p.is_absolute() ? p : dir / p;
        if (fs::exists(full)) files.push_back(full);
    };
    if (j.contains("frames") && j["frames"].is_array())
        for (const auto &f : j["frames"])
            if (f.is_object() && f.contains("sweep")) add(f["sweep"]);
    if (j.contains("bev") && j["bev"].is_object()) {
        if (j["bev"].contains("image")) add(j["bev"]["image"]);
        if (j["bev"].contains("georeference")) add(j["bev"]["georeference"]);
    }
    return files;
}

std::string safe_name(const std::string &name) {
    std::string s = name;
    for (char &c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')) c = '_';
    return s;
}

} // namespace

std::string digest_hex(const std::string &bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes.data(), bytes.size())));
    return buf;
}

std::vector<std::size_t> parse_sensor_list(const std::string &text) {
    std::vector<std::size_t> out;
    std::set<std::size_t> seen;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("--sensors: expected comma-separated indices, got '" + text + "'");
        const std::size_t v = std::stoull(tok);
        if (!seen.insert(v).second) throw UsageError("--sensors: duplicate index " + tok);
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Settings resolve_settings(const CommonOptions &common, const Json &flag_overlay) {
    Json cfg = default_config();
    if (!common.config_path.empty()) merge_config(cfg, load_config_file(common.config_path));
    for (const auto &o : common.overrides) apply_override(cfg, o);
    merge_config(cfg, flag_overlay);
    if (common.threads) merge_config(cfg, Json{{"threads", *common.threads}});
    if (common.seed) merge_config(cfg, Json{{"seed", *common.seed}});
    if (const auto t = env_threads()) cfg["threads"] = *t;
    Settings s = settings_from_json(cfg);
    set_num_threads(s.threads);
    return s;
}

Json cmd_curate(const CurateArgs &args, const Settings &s, std::ostream &out) {
    Json report = new_report("curate", s);
    for (const auto &f : manifest_files(args.manifest)) report["inputs"].push_back(input_entry(f));

    const auto clip = io::load_clip(args.manifest, s.table);
    const auto result = curation::curate(clip, s.curation);
    io::write_occg(args.out, result.grid);
    add_output(report, args.out);

    const auto &st = result.stats;
    report["stats"] = {{"frames", clip.frames.size()},
                       {"reference_frame", st.reference_frame},
                       {"background_points", st.background_points},
                       {"background_densified", st.background_densified},
                       {"object_points", st.object_points},
                       {"object_densified", st.object_densified},
                       {"objects_placed", st.objects_placed},
                       {"out_of_bounds", st.out_of_bounds},
                       {"occupied_voxels", result.grid.occupied_count()},
                       {"warnings", st.warnings}};
    finish(report, fs::path(args.out + ".json"), out);
    return report;
}

Json cmd_render(const RenderArgs &args, const Settings &s, std::ostream &out) {
    Json report = new_report("render", s);
    report["inputs"].push_back(input_entry(args.occ));
    report["inputs"].push_back(input_entry(args.cameras));

    const auto grid = io::read_occg(args.occ);
    const auto cams = io::cameras_from_json(io::load_json(args.cameras));
    const auto maps = splat::render_views(grid, cams, s.render);

    const fs::path dir = args.out_dir;
    fs::create_directories(dir);
    report["views"] = Json::array();
    for (std::size_t i = 0; i < maps.size(); ++i) {
        const auto &m = maps[i];
        const std::string stem = std::to_string(i) + "_" + safe_name(cams[i].name());
        const std::vector<std::uint8_t> labels(m.semantic.begin(), m.semantic.end());
        const fs::path depth_bin = dir / (stem + ".depth.bin"), depth_pgm = dir / (stem + ".depth.pgm");
        const fs::path sem_pgm = dir / (stem + ".semantic.pgm"), sem_ppm = dir / (stem + ".semantic.ppm");
        io::write_depth_bin(depth_bin, m.depth, m.width, m.height);
        io::write_pgm(depth_pgm, io::depth_to_pgm16(m.depth, m.width, m.height));
        io::write_pgm(sem_pgm, io::labels_to_pgm8(labels, m.width, m.height));
        io::write_semantic_ppm(sem_ppm, labels, m.width, m.height, s.table);
        for (const auto &p : {depth_bin, depth_pgm, sem_pgm, sem_ppm}) add_output(report, p);

        const auto &d = m.diagnostics;
        report["views"].push_back({{"camera", cams[i].name()},
                                   {"width", m.width},
                                   {"height", m.height},
                                   {"covered_pixels", m.covered_pixels()},
                                   {"gaussians", d.input},
                                   {"culled", d.culled},
                                   {"faint", d.faint},
                                   {"singular", d.singular},
                                   {"splatted", d.splatted},
                                   {"early_stops", d.early_stops}});
    }
    finish(report, args.out_dir.empty() ? fs::path("report.json") : dir / "report.json", out);
    return report;
}

Json cmd_lidar(const LidarArgs &args, const Settings &s, std::ostream &out) {
    Json report = new_report("lidar", s);
    report["inputs"].push_back(input_entry(args.occ));
    report["inputs"].push_back(input_entry(args.rig));
    const auto grid = io::read_occg(args.occ);
    const auto rig = io::rig_from_json(io::load_json(args.rig));
    geom::RigidTransform ego;
    if (!args.ego_pose.empty()) {
        report["inputs"].push_back(input_entry(args.ego_pose));
        ego = io::transform_from_json(io::load_json(args.ego_pose));
    }

    std::vector<std::size_t> active;
    if (args.sensors.empty()) {
        for (std::size_t i = 0; i < rig.size(); ++i) active.push_back(i);
    } else {
        active = parse_sensor_list(args.sensors);
        for (const auto i : active)
            if (i >= rig.size())
                throw UsageError("--sensors: unknown sensor index " + std::to_string(i) + " (rig has " +
                                 std::to_string(rig.size()) + ")");
    }

    auto head = std::make_shared<lidar::AnalyticHead>(s.table, s.lidar_attenuation, s.lidar_p_graze);
    const lidar::Simulator sim(grid, s.lidar, head, lidar::HistogramEmbedder(s.embedder_seed));
    const auto res = sim.run(rig, ego, active);

    const fs::path dir = args.out_dir;
    fs::create_directories(dir);
    const fs::path ply = dir / "points.ply", rmap = dir / "range.rmap";
    std::vector<io::PlyProperty> extra(3);
    extra[0] = {"drop_prob", "float", {res.drop_prob.begin(), res.drop_prob.end()}};
    extra[1] = {"sensor_id", "uint", {res.sensor_id.begin(), res.sensor_id.end()}};
    extra[2] = {"ray_id", "uint", {res.ray_id.begin(), res.ray_id.end()}};
    io::write_ply(ply, res.points, s.ply_format, extra);
    io::write_rmap(rmap, res.range_map);
    add_output(report, ply);
    add_output(report, rmap);

    const auto smooth = lidar::smoothness_loss(res.range_map);
    report["sensors"] = active;
    report["rays"] = res.rays.size();
    report["points"] = res.points.size();
    report["dropped_by_prior"] = res.dropped_by_prior;
    report["dropped_by_render"] = res.dropped_by_render;
    report["smoothness"] = {{"value", smooth.value}, {"pairs", smooth.pairs}, {"warning", smooth.warning}};
    finish(report, dir / "report.json", out);
    return report;
}

Json cmd_eval(const EvalArgs &args, const Settings &s, std::ostream &out) {
    Json report = new_report("eval", s);
    report["kind"] = args.kind;
    if (args.kind == "occ") {
        if (args.pred.empty() || args.gt.empty()) throw UsageError("eval occ needs --pred and --gt");
        report["inputs"].push_back(input_entry(args.pred));
        report["inputs"].push_back(input_entry(args.gt));
        const auto pred = io::read_occg(args.pred), gt = io::read_occg(args.gt);
        const auto r = grid::iou_miou(pred, gt);
        Json per = Json::object();
        for (const auto &[c, v] : r.per_class)
            per[c < s.table.size() ? s.table[c].name : std::to_string(c)] = v;
        report["result"] = {{"iou", r.iou_occupied}, {"miou", r.miou}, {"per_class", per}};
    } else if (args.kind == "pc") {
        if (args.a.empty() || args.a.size() != args.b.size())
            throw UsageError("eval pc needs --a and --b with the same, nonzero number of files");
        std::vector<geom::PointCloud> A, B;
        for (const auto &p : args.a) {
            report["inputs"].push_back(input_entry(p));
            A.push_back(io::read_ply(p));
        }
        for (const auto &p : args.b) {
            report["inputs"].push_back(input_entry(p));
            B.push_back(io::read_ply(p));
        }
        std::vector<metrics::BevHistogram> ha, hb;
        Json pairs = Json::array();
        double chamfer_sum = 0.0, jsd_sum = 0.0;
        std::size_t jsd_n = 0;
        for (std::size_t i = 0; i < A.size(); ++i) {
            ha.push_back(metrics::bev_histogram(A[i], s.bev));
            hb.push_back(metrics::bev_histogram(B[i], s.bev));
            Json pj;
            const double cd = metrics::chamfer(A[i], B[i]);
            chamfer_sum += cd;
            pj["chamfer"] = cd;
            if (ha.back().empty || hb.back().empty) {
                pj["jsd"] = nullptr; // undefined for an empty histogram
            } else {
                const double d = metrics::jsd(ha.back(), hb.back());
                pj["jsd"] = d;
                jsd_sum += d;
                ++jsd_n;
            }
            pairs.push_back(pj);
        }
        // MMD compares distributions and needs at least two samples per side.
        Json mmd_value = nullptr, mmd_sigma = nullptr;
        if (A.size() >= 2) {
            const auto m = metrics::mmd(ha, hb, s.mmd_sigma, s.mmd_unbiased);
            mmd_value = m.value;
            mmd_sigma = m.sigma;
        }
        report["result"] = {{"chamfer_mean", chamfer_sum / A.size()},
                            {"jsd_mean", jsd_n ? Json(jsd_sum / jsd_n) : Json(nullptr)},
                            {"mmd", mmd_value},
                            {"mmd_sigma", mmd_sigma},
                            {"pairs", pairs}};
    } else {
        throw UsageError("eval: kind must be 'occ' or 'pc', got '" + args.kind + "'");
    }
    if (args.out.empty())
        out << report.dump(2) << "\n";
    else
        finish(report, args.out, out);
    return report;
}

Json cmd_synth(const SynthArgs &args, const Settings &s, std::ostream &out) {
    Json report = new_report("synth", s);
    synth::Scene scene = [&] {
        if (args.scene == "wall") {
            synth::WallParams p;
            p.geometry = s.curation.geometry;
            return synth::make_wall(p);
        }
        if (args.scene == "box-street") {
            synth::BoxStreetParams p;
            p.seed = s.seed;
            p.geometry = s.curation.geometry;
            return synth::make_box_street(p);
        }
        if (args.scene == "moving-box") {
            synth::MovingBoxParams p;
            p.seed = s.seed;
            return synth::make_moving_box(p);
        }
        throw UsageError("synth: unknown scene '" + args.scene +
                         "' (expected wall, box-street or moving-box)");
    }();

    const fs::path dir = args.out_dir;
    fs::create_directories(dir);
    const fs::path manifest = dir / "manifest.json";
    const fs::path gt = dir / "ground_truth.occg", rig = dir / "rig.json", cams = dir / "cameras.json";
    io::write_occg(gt, scene.ground_truth);
    io::save_json(rig, io::to_json(scene.rig));
    Json cj = Json::array();
    for (const auto &c : scene.cameras) cj.push_back(io::to_json(c));
    io::save_json(cams, Json{{"cameras", cj}});

    Json m;
    if (!scene.clip.frames.empty()) {
        io::save_clip(manifest, scene.clip, s.table);
        m = io::load_json(manifest);
        // Per-track constant velocity from first and last boxes.
        Json tracks = Json::array();
        const auto &fr = scene.clip.frames;
        for (const auto &id : scene.clip.track_ids()) {
            const auto *b0 = scene.clip.find_box(0, id);
            const auto *b1 = scene.clip.find_box(fr.size() - 1, id);
            if (b0 == nullptr || b1 == nullptr) continue;
            const Vec3 v = (b1->center() - b0->center()) / (fr.back().timestamp - fr.front().timestamp);
            tracks.push_back({{"track_id", id}, {"velocity", {v.x(), v.y(), v.z()}}});
        }
        m["tracks"] = tracks;
    }
    m["scene"] = args.scene;
    m["ground_truth"] = gt.filename().string();
    m["rig"] = rig.filename().string();
    m["cameras"] = cams.filename().string();
    m["ego_pose"] = io::to_json(scene.ego_pose);
    io::save_json(manifest, m);

    // Grid geometry of the ground truth, ready for `curate --config`.
    const fs::path cfg = dir / "config.json";
    const auto &g = scene.ground_truth.geometry();
    io::save_json(cfg, Json{{"curation",
                             {{"grid_dims", {g.dims.x(), g.dims.y(), g.dims.z()}},
                              {"grid_voxel_size", g.voxel_size.x()},
                              {"grid_origin", {g.origin.x(), g.origin.y(), g.origin.z()}}}}});

    for (const auto &p : manifest_files(manifest)) add_output(report, p);
    for (const auto &p : {gt, rig, cams, cfg}) add_output(report, p);
    report["scene"] = args.scene;
    report["occupied_voxels"] = scene.ground_truth.occupied_count();
    finish(report, dir / "report.json", out);
    return report;
}

Json cmd_filter_scenarios(const FilterArgs &args, const Settings &s, std::ostream &out) {
    Json report = new_report("filter-scenarios", s);
    const fs::path root = args.dir;
    if (!fs::is_directory(root)) throw IoError("not a directory: '" + args.dir + "'");

    std::vector<fs::path> manifests;
    for (const auto &e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file() && e.path().filename() == "manifest.json") manifests.push_back(e.path());
    std::sort(manifests.begin(), manifests.end());

    Json lists = {{"spatial", Json::array()}, {"temporal", Json::array()}, {"neither", Json::array()}};
    Json clips = Json::array(), errors = Json::array();
    for (const auto &m : manifests) {
        const std::string rel = fs::relative(m, root).generic_string();
        if (!io::load_json(m).contains("frames")) continue; // scene manifests without frames
        report["inputs"].push_back(input_entry(m));
        try {
            const auto clip = io::load_clip(m, s.table);
            const auto sp = curation::classify_scenario(clip, s.theta_e, s.theta_o);
            const std::string kind = curation::to_string(sp.kind);
            std::string key = kind;
            std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
            lists[key].push_back(rel);
            clips.push_back({{"manifest", rel}, {"kind", kind}, {"v_ego", sp.v_ego}, {"v_other", sp.v_other}});
        } catch (const Error &e) {
            errors.push_back({{"manifest", rel}, {"error", e.what()}});
        }
    }
    report["spatial"] = lists["spatial"];
    report["temporal"] = lists["temporal"];
    report["neither"] = lists["neither"];
    report["clips"] = clips;
    report["errors"] = errors;
    if (args.out.empty())
        out << report.dump(2) << "\n";
    else
        finish(report, args.out, out);
    return report;
}

} // namespace occu::cli
