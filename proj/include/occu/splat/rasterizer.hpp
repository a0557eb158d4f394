// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/splat/projection.hpp"

#include <vector>

namespace occu::splat {

enum class Backend { Ewa, Ut };

struct RasterOptions {
    Backend backend = Backend::Ut;
    UtParams ut;
    int tile = 16;
    double alpha_min = 1.0 / 255.0;
    /// Compositing stops once transmittance drops below this.
    double transmittance_min = 1e-7;
    /// Divide accumulated depth by coverage.
    bool normalize_depth = true;
};

struct RasterDiagnostics {
    std::size_t input = 0;
    std::size_t culled = 0;   // behind the camera or off-image
    std::size_t faint = 0;    // alpha below alpha_min, can never contribute
    std::size_t singular = 0; // projected covariance too ill-conditioned
    std::size_t splatted = 0;
    std::size_t early_stops = 0; // pixels that hit transmittance_min
};

/// Row-major H x W maps. Pixel (u, v) is centered at integer (u, v).
struct RenderedMaps {
    int width = 0, height = 0;
    std::vector<double> depth;    // m, 0 without coverage
    std::vector<ClassId> semantic; // 0 without coverage
    std::vector<double> coverage; // accumulated opacity in [0, 1]
    RasterDiagnostics diagnostics;

    std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(v) * width + u;
    }
    std::size_t covered_pixels() const;
};

/// Tile-based front-to-back alpha compositing. Gaussians are sorted by
/// camera depth with ties broken by input index, so output does not depend
/// on input order beyond that tie rule.
RenderedMaps rasterize(const std::vector<GaussianPrimitive> &gaussians,
                       const geom::CameraModel &cam, const RasterOptions &options = {});

} // namespace occu::splat
