// Copyright 2026 The occuforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "occu/geom/camera.hpp"
#include "occu/splat/gaussian.hpp"

#include <array>
#include <optional>

namespace occu::splat {

/// Unscented-transform spread parameters. lambda = alpha^2 (3 + kappa) - 3.
struct UtParams {
    double alpha = 1.0;
    double beta = 2.0;
    double kappa = 0.0;

    double lambda() const { return alpha * alpha * (3.0 + kappa) - 3.0; }
    /// Throws InvalidArgument unless 3 + lambda > 0.
    void validate() const;

    struct Weights {
        std::array<double, 7> mean;
        std::array<double, 7> cov;
    };
    Weights weights() const;
};

struct Projected2D {
    Vec2 mean; // px
    Mat2 cov;  // px^2
    double depth; // camera-frame z of mu
};

/// Default culling extent: the ellipse at Mahalanobis radius 3.
inline constexpr double kDefaultCullQ = 9.0;

/// Linearized (EWA) projection: cov = J W Sigma W^T J^T with J the full
/// projection Jacobian at mu. nullopt when mu is behind the near plane or
/// the ellipse {q <= cull_q} misses the image.
std::optional<Projected2D> project_ewa(const GaussianPrimitive &g, const geom::CameraModel &cam,
                                       double cull_q = kDefaultCullQ);

/// Unscented projection through the nonlinear camera with 7 sigma points.
/// nullopt when any sigma point is behind the near plane or the ellipse
/// misses the image. Throws InvalidArgument when Sigma is not positive
/// definite.
std::optional<Projected2D> project_ut(const GaussianPrimitive &g, const geom::CameraModel &cam,
                                      const UtParams &ut = {}, double cull_q = kDefaultCullQ);

/// True when the axis-aligned bounds of {q <= cull_q} overlap the pixel
/// centers of the image (centers at integer coordinates).
bool ellipse_hits_image(const Projected2D &p, const geom::CameraModel &cam, double cull_q);

} // namespace occu::splat
