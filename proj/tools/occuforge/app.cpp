// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace occu::cli {

namespace {

void add_common(CLI::App *cmd, CommonOptions &c) {
    cmd->add_option("--config", c.config_path, "JSON config file (or a previous report)");
    cmd->add_option("--set", c.overrides, "Override one config key: section.key=value")
        ->allow_extra_args(false);
    cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
    cmd->add_option("--seed", c.seed, "Global seed");
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"occuforge: semantic occupancy curation, rendering and LiDAR simulation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "occuforge 0.1.0");

    CommonOptions common;
    Json overlay = Json::object();

    CurateArgs curate;
    auto *c_cur = app.add_subcommand("curate", "Build a semantic occupancy grid from a clip manifest");
    c_cur->add_option("manifest", curate.manifest, "Clip manifest (JSON)")->required();
    c_cur->add_option("-o,--out", curate.out, "Output OCCG path")->required();
    add_common(c_cur, common);

    RenderArgs render;
    std::optional<std::string> projection;
    std::optional<double> scale, opacity;
    auto *c_ren = app.add_subcommand("render", "Render depth and semantic maps by Gaussian splatting");
    c_ren->add_option("occ", render.occ, "Occupancy grid (OCCG)")->required();
    c_ren->add_option("cameras", render.cameras, "Camera list (JSON)")->required();
    c_ren->add_option("--projection", projection, "ewa or ut");
    c_ren->add_option("--gaussian-scale", scale, "Gaussian scale (voxel-relative)");
    c_ren->add_option("--opacity", opacity, "Gaussian opacity");
    c_ren->add_option("-o,--out", render.out_dir, "Output directory")->required();
    add_common(c_ren, common);

    LidarArgs lidar;
    auto *c_lid = app.add_subcommand("lidar", "Simulate LiDAR returns from an occupancy grid");
    c_lid->add_option("occ", lidar.occ, "Occupancy grid (OCCG)")->required();
    c_lid->add_option("rig", lidar.rig, "Sensor rig (JSON)")->required();
    c_lid->add_option("--sensors", lidar.sensors, "Comma-separated sensor indices (default: all)");
    c_lid->add_option("--ego-pose", lidar.ego_pose, "Ego pose (JSON transform)");
    c_lid->add_option("-o,--out", lidar.out_dir, "Output directory")->required();
    add_common(c_lid, common);

    EvalArgs eval;
    auto *c_eval = app.add_subcommand("eval", "Occupancy IoU or point-cloud distances");
    c_eval->add_option("kind", eval.kind, "occ or pc")->required();
    c_eval->add_option("--pred", eval.pred, "Predicted grid (occ)");
    c_eval->add_option("--gt", eval.gt, "Ground-truth grid (occ)");
    c_eval->add_option("--a", eval.a, "First point-cloud set (pc)");
    c_eval->add_option("--b", eval.b, "Second point-cloud set (pc)");
    c_eval->add_option("-o,--out", eval.out, "Report path (default: stdout only)");
    add_common(c_eval, common);

    SynthArgs synth;
    auto *c_syn = app.add_subcommand("synth", "Generate a synthetic scene with its ground truth");
    c_syn->add_option("scene", synth.scene, "wall, box-street or moving-box")->required();
    c_syn->add_option("-o,--out", synth.out_dir, "Output directory")->required();
    add_common(c_syn, common);

    FilterArgs filter;
    auto *c_fil = app.add_subcommand("filter-scenarios", "Split clip manifests into Spatial / Temporal / Neither");
    c_fil->add_option("dir", filter.dir, "Directory searched for manifest.json files")->required();
    c_fil->add_option("-o,--out", filter.out, "Report path (default: stdout only)");
    add_common(c_fil, common);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError &e) {
        std::ostringstream o, eo;
        const int code = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (projection) overlay["render"]["projection"] = *projection;
        if (scale) overlay["render"]["gaussian_scale"] = *scale;
        if (opacity) overlay["render"]["opacity"] = *opacity;
        const Settings s = resolve_settings(common, overlay);

        if (c_cur->parsed()) cmd_curate(curate, s, out);
        else if (c_ren->parsed()) cmd_render(render, s, out);
        else if (c_lid->parsed()) cmd_lidar(lidar, s, out);
        else if (c_eval->parsed()) cmd_eval(eval, s, out);
        else if (c_syn->parsed()) cmd_synth(synth, s, out);
        else if (c_fil->parsed()) cmd_filter_scenarios(filter, s, out);
        return kExitOk;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        err << "io error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception &e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace occu::cli
