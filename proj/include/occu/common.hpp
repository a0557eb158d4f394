// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace occu {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

/// Semantic class id. 0 is always "empty".
using ClassId = std::uint8_t;

/// Base for all library errors. Callers that only care about "something
/// failed" catch this; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument or violated precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// File IO or parse failure. The CLI maps it to exit code 2.
class IoError : public Error {
public:
    using Error::Error;
};

/// Error raised by a named pipeline stage; the message carries the stage.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string &what)
        : Error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string &stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

/// 64-bit FNV-1a, used for input digests in reports.
std::uint64_t fnv1a64(const void *data, std::size_t size,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);

/// SplitMix64 finalizer; mixes seeds for per-ray / per-item RNG streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw. Used
/// instead of std::uniform_real_distribution so streams are identical across
/// standard library implementations.
constexpr double to_unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

} // namespace occu
