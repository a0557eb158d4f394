// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/curation/labeling.hpp"

#include <algorithm>

namespace occu::curation {

const char *to_string(ScenarioKind k) {
    switch (k) {
    case ScenarioKind::Spatial: return "spatial";
    case ScenarioKind::Temporal: return "temporal";
    case ScenarioKind::Neither: return "neither";
    }
    return "neither";
}

ScenarioSpeeds classify_scenario(const ScenarioClip &clip, double theta_e, double theta_o) {
    const auto &fr = clip.frames;
    if (fr.size() < 2) throw InvalidArgument("cannot estimate speed");

    ScenarioSpeeds s;
    for (std::size_t f = 1; f < fr.size(); ++f) {
        const double dt = fr[f].timestamp - fr[f - 1].timestamp;
        if (!(dt > 0.0)) throw InvalidArgument("classify_scenario: timestamps must increase");
        s.v_ego += (fr[f].ego_pose.translation() - fr[f - 1].ego_pose.translation()).norm() / dt;
    }
    s.v_ego /= static_cast<double>(fr.size() - 1);

    for (const auto &id : clip.track_ids()) {
        double sum = 0.0;
        int n = 0;
        for (std::size_t f = 1; f < fr.size(); ++f) {
            const auto *a = clip.find_box(f - 1, id);
            const auto *b = clip.find_box(f, id);
            if (!a || !b) continue;
            sum += (b->center() - a->center()).norm() / (fr[f].timestamp - fr[f - 1].timestamp);
            ++n;
        }
        if (n > 0) s.v_other = std::max(s.v_other, sum / n);
    }

    if (s.v_ego > theta_e)
        s.kind = ScenarioKind::Spatial;
    else if (s.v_ego < theta_e && s.v_other > theta_o)
        s.kind = ScenarioKind::Temporal;
    return s;
}

} // namespace occu::curation
