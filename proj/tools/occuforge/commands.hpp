// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "config.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace occu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Options shared by every subcommand.
struct CommonOptions {
    std::string config_path;
    std::vector<std::string> overrides; // --set key=value, applied in order
    std::optional<std::int64_t> threads;
    std::optional<std::int64_t> seed;
    std::string report_path; // empty: command default
};

/// Resolves defaults < config file < --set < flag overlay < OCCU_FORGE_THREADS
/// and configures the worker pool.
Settings resolve_settings(const CommonOptions &common, const Json &flag_overlay = Json::object());

struct CurateArgs {
    std::string manifest, out;
};
struct RenderArgs {
    std::string occ, cameras, out_dir;
};
struct LidarArgs {
    std::string occ, rig, out_dir, ego_pose;
    std::string sensors; // "0,1"; empty selects all
};
struct EvalArgs {
    std::string kind; // occ | pc
    std::string pred, gt;
    std::vector<std::string> a, b;
    std::string out;
};
struct SynthArgs {
    std::string scene; // wall | box-street | moving-box
    std::string out_dir;
};
struct FilterArgs {
    std::string dir, out;
};

/// Each command writes its outputs and a JSON report (also printed to
/// `out`) and returns the report.
Json cmd_curate(const CurateArgs &args, const Settings &s, std::ostream &out);
Json cmd_render(const RenderArgs &args, const Settings &s, std::ostream &out);
Json cmd_lidar(const LidarArgs &args, const Settings &s, std::ostream &out);
Json cmd_eval(const EvalArgs &args, const Settings &s, std::ostream &out);
Json cmd_synth(const SynthArgs &args, const Settings &s, std::ostream &out);
Json cmd_filter_scenarios(const FilterArgs &args, const Settings &s, std::ostream &out);

/// Full command-line entry point. Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Parses "0,2,3". Throws UsageError on malformed lists or duplicates.
std::vector<std::size_t> parse_sensor_list(const std::string &text);

std::string digest_hex(const std::string &bytes);

} // namespace occu::cli
