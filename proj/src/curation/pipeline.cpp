// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/curation/pipeline.hpp"

namespace occu::curation {

namespace {

template <class F>
auto stage(const char *name, F &&fn) {
    try {
        return fn();
    } catch (const StageError &) {
        throw;
    } catch (const Error &e) {
        throw StageError(name, e.what());
    }
}

} // namespace

CurationResult curate(const ScenarioClip &clip, const CurationConfig &config) {
    stage("validate", [&] {
        if (clip.frames.empty()) throw InvalidArgument("clip has no frames");
        clip.validate();
        config.geometry.validate();
        return 0;
    });

    CurationResult res;
    auto &st = res.stats;
    const std::size_t nf = clip.frames.size();
    const std::size_t ref = config.reference_frame < 0
                                ? nf / 2
                                : static_cast<std::size_t>(config.reference_frame);
    if (ref >= nf)
        throw StageError("validate", "reference frame " + std::to_string(ref) + " out of range");
    st.reference_frame = ref;
    const auto &ref_pose = clip.frames[ref].ego_pose;
    const auto world_to_ref = ref_pose.inverse();

    DensifyParams dp = config.densify;
    if (!(dp.voxel > 0.0)) dp.voxel = config.geometry.voxel_size.minCoeff() / 2;

    geom::PointCloud scene; // reference ego frame

    const auto bg = stage("aggregate_background",
                          [&] { return aggregate_background(clip, config.aggregate); });
    st.background_points = bg.cloud.size();
    geom::PointCloud bg_dense = bg.cloud;
    if (config.densify_enabled) {
        // TSDF cells line up with grid cells when the reference rotation is
        // axis-aligned.
        auto bp = dp;
        bp.anchor = ref_pose.apply(config.geometry.origin);
        auto r = stage("densify", [&] { return densify(bg.cloud, bg.origins, bp); });
        if (r.warning) st.warnings.push_back("background: too few points to densify");
        bg_dense = std::move(r.cloud);
    }
    st.background_densified = bg_dense.size();
    scene.xyz.reserve(bg_dense.size());
    for (const auto &p : bg_dense.xyz) scene.xyz.push_back(world_to_ref.apply(p));

    for (const auto &id : clip.track_ids()) {
        const auto *box = clip.find_box(ref, id);
        if (!box) {
            st.warnings.push_back("track " + id + ": absent from reference frame, not placed");
            continue;
        }
        const auto obj = stage("aggregate_object", [&] { return aggregate_object(clip, id); });
        st.object_points += obj.cloud.size();
        if (obj.cloud.empty()) continue;
        geom::PointCloud dense = obj.cloud;
        if (config.densify_enabled) {
            // Same alignment, expressed in the box frame.
            auto op = dp;
            op.anchor = (world_to_ref * box->pose()).inverse().apply(config.geometry.origin);
            auto r = stage("densify", [&] { return densify(obj.cloud, obj.origins, op); });
            if (r.warning) st.warnings.push_back("track " + id + ": too few points to densify");
            dense = std::move(r.cloud);
        }
        st.object_densified += dense.size();
        const auto to_ref = world_to_ref * box->pose();
        for (const auto &p : dense.xyz) scene.xyz.push_back(to_ref.apply(p));
        ++st.objects_placed;
    }

    auto vox = grid::voxelize(scene, config.geometry);
    st.out_of_bounds = vox.out_of_bounds;

    std::vector<geom::OrientedBox> boxes;
    for (const auto &b : clip.frames[ref].boxes) boxes.push_back(b);
    res.grid = stage("hybrid_label", [&] {
        return hybrid_label(vox.grid, boxes, clip.bev, ref_pose, config.fallback_class);
    });
    return res;
}

} // namespace occu::curation
