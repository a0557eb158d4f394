// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/grid/occupancy_grid.hpp"

#include <array>

namespace occu::grid {

IouResult iou_miou(const SemanticOccupancyGrid &pred, const SemanticOccupancyGrid &gt) {
    if (pred.dims() != gt.dims())
        throw InvalidArgument("iou: grid dims mismatch");

    std::array<std::size_t, 256> inter{}, uni{}, in_gt{}, in_pred{};
    std::size_t occ_inter = 0, occ_union = 0;
    const auto &p = pred.classes();
    const auto &g = gt.classes();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const ClassId a = p[i], b = g[i];
        if (a != 0 || b != 0) ++occ_union;
        if (a != 0 && b != 0) ++occ_inter;
        if (a == b) {
            if (a != 0) {
                ++inter[a];
                ++uni[a];
                ++in_gt[a];
                ++in_pred[a];
            }
            continue;
        }
        if (a != 0) {
            ++uni[a];
            ++in_pred[a];
        }
        if (b != 0) {
            ++uni[b];
            ++in_gt[b];
        }
    }

    IouResult r;
    r.iou_occupied = occ_union == 0 ? 1.0 : static_cast<double>(occ_inter) / occ_union;
    double sum = 0.0;
    std::size_t n_gt = 0;
    for (std::size_t c = 1; c < 256; ++c) {
        if (uni[c] == 0) continue;
        const double iou = static_cast<double>(inter[c]) / uni[c];
        r.per_class.emplace_back(static_cast<ClassId>(c), iou);
        if (in_gt[c] > 0) {
            sum += iou;
            ++n_gt;
        }
    }
    if (n_gt > 0)
        r.miou = sum / n_gt;
    else
        r.miou = occ_union == 0 ? 1.0 : 0.0;
    return r;
}

} // namespace occu::grid
