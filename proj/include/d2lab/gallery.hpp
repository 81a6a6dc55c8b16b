// SPDX-License-Identifier: MIT
//
// Two planar fixtures with amplitude G(x^2+y^2) riding on the harmonic
// polynomial x^2 - y^2:
//
//   log_amplitude:     G(m) = ln(-ln m)        (Laplacian continuous, not C^2,
//                                               not even twice differentiable)
//   sin_log_amplitude: G(m) = sin(ln(-ln m))   (bounded Hessian, oscillating
//                                               cross derivative)
//
// Values are closed-form; every derivative is taken by the finite-difference
// oracle with per-point relative steps. These are verification fixtures for
// the analyzers, not construction components, so an independent derivative
// route is exactly what is wanted.

#pragma once

#include <string>
#include <vector>

#include "d2lab/block.hpp"
#include "d2lab/linalg.hpp"

namespace d2lab::gallery {

enum class Which { log_amplitude, sin_log_amplitude };

const char* to_string(Which w);

/// Closed-form value at a point with 0 < x^2+y^2 <= 1/4, or 0 at the origin.
/// Points outside that disk are rejected.
double gallery_value(Which which, const Vec& point);

/// Value plus FD gradient, Hessian, and Laplacian (trace). The origin
/// returns the zero PointEval: the whole point of these fixtures is that
/// second derivatives degenerate there, so nothing is differentiated at 0.
block::PointEval gallery_eval(Which which, const Vec& point);

/**
 * @brief One probe radius of the regularity report.
 *
 * cross_gap is the pure-second-derivative gap w_xx - w_yy at the diagonal
 * point (r/sqrt2, r/sqrt2). Over all rotated orthonormal frames the mixed
 * second derivative at that point sweeps the interval [-cross_gap/2,
 * +cross_gap/2], so the gap measures the full oscillation of the cross
 * entry; the axis-frame mixed derivative itself vanishes on the diagonal by
 * antisymmetry. lap_band and hess_max are maxima of |Laplacian| and of the
 * largest |Hessian entry| over 16 directions at radius r; remainder is
 * |w|/r^2 along (r, 0).
 */
struct GalleryRow {
    double r = 0.0;
    double cross_gap = 0.0;
    double lap_band = 0.0;
    double hess_max = 0.0;
    double remainder = 0.0;
};

struct GalleryReport {
    Which which = Which::log_amplitude;
    std::vector<GalleryRow> rows; ///< radii 1e-2 down to 1e-6
    /// log_amplitude: some radius has cross_gap > 10 while its lap_band
    /// stays <= 0.5 (second derivatives blow up, Laplacian does not).
    bool cross_exceeds_10_with_small_lap = false;
    bool band_shrinks = false;     ///< lap_band strictly decreasing in r
    bool remainder_grows = false;  ///< |w|/r^2 strictly increasing as r -> 0
    double cross_spread = 0.0;     ///< max - min of cross_gap over the rows
    double hess_sup = 0.0;         ///< max of hess_max over the rows
};

GalleryReport gallery_report(Which which);

} // namespace d2lab::gallery
