// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/curation/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace occu::curation {

void BevMap::validate() const {
    if (rows < 1 || cols < 1) throw InvalidArgument("bev map: dims must be >= 1");
    if (!(cell_size > 0.0)) throw InvalidArgument("bev map: cell_size must be > 0");
    if (labels.size() != static_cast<std::size_t>(rows) * cols)
        throw InvalidArgument("bev map: label count does not match dims");
}

std::optional<ClassId> BevMap::label_at(double x, double y) const {
    const double fi = std::floor((x - origin.x()) / cell_size);
    const double fj = std::floor((y - origin.y()) / cell_size);
    if (!(fi >= 0 && fj >= 0 && fi < rows && fj < cols)) return std::nullopt;
    return labels[static_cast<std::size_t>(fj) * rows + static_cast<std::size_t>(fi)];
}

void ScenarioClip::validate() const {
    for (std::size_t f = 0; f < frames.size(); ++f) {
        frames[f].sweep.validate();
        if (f > 0 && !(frames[f].timestamp > frames[f - 1].timestamp))
            throw InvalidArgument("clip: timestamps must be strictly increasing (frame " +
                                  std::to_string(f) + ")");
        std::set<std::string> seen;
        for (const auto &b : frames[f].boxes)
            if (!seen.insert(b.track_id()).second)
                throw InvalidArgument("clip: track '" + b.track_id() +
                                      "' appears twice in frame " + std::to_string(f));
    }
    if (!bev.labels.empty()) bev.validate();
}

const geom::OrientedBox *ScenarioClip::find_box(std::size_t f, const std::string &track_id) const {
    for (const auto &b : frames.at(f).boxes)
        if (b.track_id() == track_id) return &b;
    return nullptr;
}

std::vector<std::string> ScenarioClip::track_ids() const {
    std::set<std::string> ids;
    for (const auto &fr : frames)
        for (const auto &b : fr.boxes) ids.insert(b.track_id());
    return {ids.begin(), ids.end()};
}

AggregatedCloud aggregate_background(const ScenarioClip &clip, const AggregateParams &params) {
    if (clip.frames.empty()) throw InvalidArgument("aggregate_background: clip has no frames");

    AggregatedCloud out;
    geom::PointCloud prev; // previous frame, corrected world frame
    for (std::size_t f = 0; f < clip.frames.size(); ++f) {
        const Frame &fr = clip.frames[f];
        const auto world = geom::transform_points(fr.sweep, fr.ego_pose);
        auto bg = separate(world, fr.boxes).background;
        bg = statistical_filter(bg, params.filter).cloud;

        geom::RigidTransform corr;
        if (params.refine && f > 0 && bg.size() >= 10 && prev.size() >= 10) {
            // Start from the previous correction: pose errors drift smoothly.
            try {
                corr = icp_register(bg, prev, out.corrections.back(), params.icp).T;
            } catch (const Error &e) {
                throw StageError("icp", "frame " + std::to_string(f) + ": " + e.what());
            }
        } else if (f > 0) {
            corr = out.corrections.back();
        }
        bg = geom::transform_points(bg, corr);
        out.corrections.push_back(corr);

        const Vec3 origin = corr.apply(fr.ego_pose.apply(fr.sensor_origin));
        out.origins.insert(out.origins.end(), bg.size(), origin);
        out.cloud.append(bg);
        prev = std::move(bg);
    }
    return out;
}

AggregatedCloud aggregate_object(const ScenarioClip &clip, const std::string &track_id) {
    AggregatedCloud out;
    bool found = false;
    for (std::size_t f = 0; f < clip.frames.size(); ++f) {
        const auto *box = clip.find_box(f, track_id);
        if (!box) continue;
        found = true;
        const Frame &fr = clip.frames[f];
        const auto world = geom::transform_points(fr.sweep, fr.ego_pose);
        auto sep = separate(world, fr.boxes);
        const auto it = sep.per_object.find(track_id);
        const auto local = geom::to_box_frame(it->second, *box);
        const Vec3 origin = box->to_local(fr.ego_pose.apply(fr.sensor_origin));
        out.origins.insert(out.origins.end(), local.size(), origin);
        out.cloud.append(local);
        out.corrections.push_back(geom::RigidTransform{});
    }
    if (!found) throw InvalidArgument("aggregate_object: unknown track '" + track_id + "'");
    return out;
}

} // namespace occu::curation
