// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "occu/grid/class_table.hpp"

namespace occu::grid {

ClassTable::ClassTable(std::vector<ClassInfo> classes) : classes_(std::move(classes)) {
    if (classes_.empty()) throw InvalidArgument("class table: no classes");
    if (classes_.size() > 256) throw InvalidArgument("class table: more than 256 classes");
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].id != i)
            throw InvalidArgument("class table: ids must be contiguous from 0");
        if (!(classes_[i].reflectivity >= 0.0 && classes_[i].reflectivity <= 1.0))
            throw InvalidArgument("class table: reflectivity of '" + classes_[i].name +
                                  "' outside [0, 1]");
    }
    if (classes_[0].name != "empty" || classes_[0].reflectivity != 0.0)
        throw InvalidArgument("class table: id 0 must be 'empty' with reflectivity 0");
}

ClassTable ClassTable::driving_default() {
    return ClassTable({
        {0, "empty", {0, 0, 0}, 0.0, false},
        {1, "other-ground", {175, 0, 75}, 0.25, true},
        {2, "vehicle", {100, 150, 245}, 0.5, false},
        {3, "bicycle", {255, 192, 203}, 0.4, false},
        {4, "pedestrian", {255, 30, 30}, 0.35, false},
        {5, "traffic-cone", {255, 120, 50}, 0.7, false},
        {6, "barrier", {255, 240, 150}, 0.45, false},
        {7, "construction-zones", {255, 255, 0}, 0.45, false},
        {8, "generic-object", {150, 240, 80}, 0.3, false},
        {9, "road", {255, 0, 255}, 0.2, true},
        {10, "road-line", {255, 255, 255}, 0.6, true},
    });
}

std::optional<ClassId> ClassTable::find(std::string_view name) const {
    for (const auto &c : classes_)
        if (c.name == name) return c.id;
    return std::nullopt;
}

ClassId ClassTable::id_of(std::string_view name) const {
    if (auto id = find(name)) return *id;
    throw InvalidArgument("unknown class '" + std::string(name) + "'");
}

} // namespace occu::grid
