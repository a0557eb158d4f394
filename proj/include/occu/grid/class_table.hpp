// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/common.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace occu::grid {

struct ClassInfo {
    ClassId id;
    std::string name;
    std::array<std::uint8_t, 3> rgb;
    double reflectivity; // [0, 1], used by the analytic intensity head
    bool background;     // labelled from the BEV map rather than from boxes
};

/// Ordered class vocabulary. Ids are contiguous from 0 and id 0 is "empty"
/// with reflectivity 0.
class ClassTable {
public:
    explicit ClassTable(std::vector<ClassInfo> classes);

    /// empty + the ten driving-scene classes.
    static ClassTable driving_default();

    std::size_t size() const noexcept { return classes_.size(); }
    const ClassInfo &operator[](ClassId id) const { return classes_.at(id); }
    const std::vector<ClassInfo> &classes() const noexcept { return classes_; }

    std::optional<ClassId> find(std::string_view name) const;
    /// Like find() but throws InvalidArgument for unknown names.
    ClassId id_of(std::string_view name) const;

private:
    std::vector<ClassInfo> classes_;
};

namespace classes {
// Ids of ClassTable::driving_default().
inline constexpr ClassId kEmpty = 0;
inline constexpr ClassId kOtherGround = 1;
inline constexpr ClassId kVehicle = 2;
inline constexpr ClassId kBicycle = 3;
inline constexpr ClassId kPedestrian = 4;
inline constexpr ClassId kTrafficCone = 5;
inline constexpr ClassId kBarrier = 6;
inline constexpr ClassId kConstructionZones = 7;
inline constexpr ClassId kGenericObject = 8;
inline constexpr ClassId kRoad = 9;
inline constexpr ClassId kRoadLine = 10;
} // namespace classes

} // namespace occu::grid
