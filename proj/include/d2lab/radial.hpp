// SPDX-License-Identifier: MIT
//
// Radial regularity analyzer: for omega(x) = psi(|x|) the Hessian is rank-one
// plus a spherical part, and the two scalar limits psi'(s)/s and psi''(s) as
// s -> 0 decide whether omega is twice differentiable, C^2, or twice
// differentiable with a bounded but discontinuous Hessian.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "d2lab/block.hpp"
#include "d2lab/linalg.hpp"

namespace d2lab::radial {

/// A radial profile with closed-form first and second derivatives,
/// defined for s > 0. Hypotheses psi -> 0 and psi' -> 0 as s -> 0 are
/// certified on the probe grid by classify_radial.
struct RadialProfile {
    std::string name;
    std::function<double(double)> psi;
    std::function<double(double)> psi1;
    std::function<double(double)> psi2;
};

/// psi = s^2: the C^2 reference, omega = |x|^2.
RadialProfile profile_square();

/// psi = s^3 sin(1/s): psi'/s oscillates, omega is not twice differentiable.
RadialProfile profile_s3_sin();

/// psi = s^4 sin(1/s): bounded psi'' with no limit, the bounded-but-
/// discontinuous-Hessian case.
RadialProfile profile_s4_sin();

/// Value, gradient, Hessian, and Laplacian of omega at x != 0:
///   off-diagonal  psi'' x_i x_j/|x|^2 - psi' x_i x_j/|x|^3
///   diagonal      psi'/|x| + (x_i^2/|x|^2)(psi'' - psi'/|x|)
///   laplacian     psi'' + (n-1) psi'/|x|
/// The trace of the Hessian reproduces the Laplacian to roundoff.
block::PointEval radial_hessian(const RadialProfile& p, const Vec& x);

enum class Lim1 { finite, absent, inconclusive };
enum class Lim2 { finite, absent_bounded, absent_unbounded, inconclusive };
enum class RadialClass {
    not_twice_differentiable,
    C2,
    twice_diff_bounded_discontinuous_hessian,
    inconclusive,
};

const char* to_string(RadialClass c);

struct ProbeRow {
    double s = 0.0;
    double psi1_over_s = 0.0;
    double psi2 = 0.0;
    double lap3 = 0.0; ///< Laplacian probe in n = 3: psi'' + 2 psi'/s
};

/**
 * @brief Probe-grid classification of the radial profile.
 *
 * Probes run over s = 2^(-j), j = 4..40 (substeps > 1 refines the grid by
 * that factor; the classification must be stable under refinement). A limit
 * counts as finite when the tail spread is below 1e-3 and as absent when it
 * exceeds 0.1, both relative to max(1, |center|); anything between is
 * inconclusive, reported as such rather than silently classified. For an
 * absent second-derivative limit, windowed maxima separate bounded
 * oscillation from monotone growth.
 */
struct RadialReport {
    std::string name;
    std::vector<ProbeRow> rows;
    Lim1 lim_psi1_over_s = Lim1::inconclusive;
    double lim1_value = 0.0; ///< center of the tail when finite
    double lim1_spread = 0.0;
    Lim2 lim_psi2 = Lim2::inconclusive;
    double lim2_value = 0.0;
    double lim2_spread = 0.0;
    bool hypotheses_ok = false; ///< psi -> 0 and psi' -> 0 on the tail
    bool lhopital_ok = false;   ///< finite psi'' limit forces the same
                                ///< psi'/s limit (within 1e-3)
    bool case_f_ok = false;     ///< Laplacian bounded iff psi'' bounded
    RadialClass classification = RadialClass::inconclusive;
    std::string detail;
};

RadialReport classify_radial(const RadialProfile& p, int substeps = 1);

} // namespace d2lab::radial
