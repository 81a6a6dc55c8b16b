// SPDX-License-Identifier: MIT
//
// Finite-difference differentiation oracle. Everything analytic in this
// repository is cross-checked against these estimators, so they deliberately
// share no code with the analytic paths.

#pragma once

#include <functional>

#include "d2lab/linalg.hpp"

namespace d2lab::fd {

/// Stencil family used by the estimators.
enum class Scheme {
    central2, ///< second-order central differences
    central4  ///< fourth-order central differences
};

/**
 * @brief Step-size and extrapolation policy for the FD estimators.
 *
 * The per-coordinate step is base * max(|x_i|, coord_floor). With
 * base_step == 0 the base is chosen automatically from the scheme and the
 * derivative order: eps^(1/3) / eps^(1/4) for central2 gradient / Hessian and
 * eps^(1/5) / eps^(1/6) for central4, the usual truncation-vs-roundoff
 * optima. Richardson extrapolation combines the estimates at h and h/2 with
 * the scheme's order (2 or 4), raising the effective order by two.
 */
struct FdConfig {
    Scheme scheme = Scheme::central4;
    double base_step = 0.0;   ///< 0 = automatic (see above)
    bool richardson = true;
    double coord_floor = 1e-3; ///< absolute floor for the per-coordinate scale
};

using Field = std::function<double(const Vec&)>;
using Curve = std::function<double(double)>;

/// Central-difference gradient of f at x.
/// Throws std::domain_error if any stencil sample is non-finite.
Vec fd_gradient(const Field& f, const Vec& x, const FdConfig& cfg = {});

/// Central-difference Hessian of f at x, symmetric by construction
/// (mixed entries come from one 4- or 16-point cross stencil per pair).
/// Throws std::domain_error if any stencil sample is non-finite.
Mat fd_hessian(const Field& f, const Vec& x, const FdConfig& cfg = {});

/// One-dimensional first derivative, same policies as fd_gradient.
double fd_d1(const Curve& f, double x, const FdConfig& cfg = {});

/// One-dimensional second derivative, same policies as fd_hessian's diagonal.
double fd_d2(const Curve& f, double x, const FdConfig& cfg = {});

} // namespace d2lab::fd
