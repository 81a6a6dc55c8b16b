// SPDX-License-Identifier: MIT
//
// The ball ladder: a superposition of scaled building blocks
//
//   u(x) = sum_k eps_k r_k^2 [ u_{t_k}((x - R_k z0)/r_k) - u_{t_k}((x + R_k z0)/r_k) ]
//
// on disjoint balls marching into the origin along z0 = (1/sqrt 2, ...).
// The normalization eps_k = 1/M_k pins the (1,2) Hessian entry at the level-k
// witness points to 1/2 + eps_k h(y), which converges to +-1/2 while every
// other second-derivative quantity stays bounded and the Laplacian decays.

#pragma once

#include <functional>
#include <vector>

#include "d2lab/block.hpp"
#include "d2lab/linalg.hpp"
#include "d2lab/phi.hpp"

namespace d2lab::ladder {

/// Schedule for the block exponents t(k); both decrease to 0 inside (0, 1/4).
enum class TRule { harmonic, geometric };

/**
 * @brief Ladder geometry and normalization inputs.
 *
 * Levels are 1-based: k = 1, ..., K. Ball centers sit at +-R(k) * z0 with
 * support radius (2/3) r(k); R and r are exact powers of ten, so the
 * disjointness and hyperplane-clearance margins are exact in floating point.
 * K is capped at 12: beyond that, forming x - R(k) z0 in doubles would lose
 * relative precision near the innermost balls.
 */
struct LadderParams {
    int n = 3;
    phi::AdmissiblePhi phi;
    int K = 10;
    bool signed_sum = true; ///< false drops the minus-family sign (single sum)
    TRule t_rule = TRule::harmonic;

    double R(int k) const; ///< 10^(-k)
    double r(int k) const; ///< 10^(-(k+1))
    double t(int k) const; ///< harmonic: 1/(4(k+1)); geometric: 4^(-(k+1))
    Vec center_dir() const; ///< z0 = (1/sqrt 2, ..., 1/sqrt 2), n entries
};

/// Result of the 1-D profile maximization h(s) = e^(-t s) phi(s), s >= s0.
struct SupResult {
    double M = 0.0;      ///< the supremum
    double s_star = 0.0; ///< its location (s0 itself when boundary)
    bool boundary = false;
    int iters = 0;       ///< golden-section refinement steps
    double lo = 0.0, hi = 0.0; ///< final bracket
};

/// Maximize a continuous h over [s0, inf) by expanding scan plus
/// golden-section refinement to relative 1e-12 in s. Throws
/// std::runtime_error if h is still rising at the search horizon.
SupResult maximize_log_profile(const std::function<double(double)>& h,
                               double s0);

/// M(t) = sup over the support radius of |x|^(2t) phi(-ln|x|^2), computed in
/// log-radius coordinates on s >= s0 = -2 ln(2/3). Requires t in (0, 1].
SupResult compute_Mk(const phi::AdmissiblePhi& phi, double t);

struct RootResult {
    double s_w = 0.0;
    int iters = 0;
};

/// Solve h(s) = target on the decreasing branch s >= s_star by bracket
/// expansion plus bisection, to relative 1e-13 in s.
RootResult solve_profile_root(const std::function<double(double)>& h,
                              double s_star, double target);

/// Witness radius: the root of e^(-t s) phi(s) = M/2 past the maximum.
/// The witness point is |y| = e^(-s_w/2). Pass the s_star from compute_Mk;
/// a non-positive hint recomputes it.
RootResult solve_witness_radius(const phi::AdmissiblePhi& phi, double t,
                                double M, double s_star = 0.0);

/// A witness is usable only when it lands on the cutoff plateau, |y| <= 1/2.
inline bool witness_available(double s_w) {
    return s_w >= 1.3862943611198906; // 2 ln 2
}

/// Per-level normalization and witness diagnostics.
struct Level {
    int k = 0;
    double R = 0.0, r = 0.0, t = 0.0;
    double M = 0.0;      ///< sup of the level profile
    double s_star = 0.0; ///< location of the sup
    bool sup_boundary = false;
    double eps = 0.0;    ///< 1/M
    bool witness_ok = false;
    double s_w = 0.0;    ///< root location, |y| = e^(-s_w/2)
    double y_norm = 0.0;
    int sup_iters = 0, root_iters = 0;
};

struct Ladder {
    LadderParams params;
    std::vector<Level> levels; ///< levels[k-1] holds level k

    const Level& level(int k) const;
};

/// Validate the geometry (disjointness, hyperplane clearance, t schedule)
/// and compute every level. Violations are hard errors.
Ladder build_ladder(LadderParams params);

/// Which support ball, if any, contains x. Balls are disjoint, so at most
/// one k matches; coordinate hyperplanes never intersect any ball.
struct BallLocation {
    enum class Where { outside, plus, minus };
    Where where = Where::outside;
    int k = 0;
};

BallLocation locate_ball(const Ladder& lad, const Vec& x);

/// Evaluate u at a global point. Total: outside every ball the result is
/// exactly zero. Inside ball k the block is evaluated at the local
/// coordinate y = (x -+ R(k) z0)/r(k) and scaled by eps r^2 / eps r / eps
/// for value / gradient / Hessian.
block::PointEval u_eval(const Ladder& lad, const Vec& x);

/// Same scaling, but evaluated directly at a local coordinate y of level k.
/// This is the cancellation-free path for sampling deep levels. minus
/// selects the mirrored family (sign -1 only for signed ladders).
block::PointEval u_eval_local(const Ladder& lad, int k, bool minus,
                              const Vec& y);

/**
 * @brief One row of the Hessian-discontinuity table.
 *
 * y_point is the witness in local coordinates, along the all-ones unit
 * direction so that both distinguished components are nonzero. hess12_plus
 * decomposes exactly as 1/2 + eps * h_y where h_y sums every non-leading
 * term of the (1,2) expansion at y_point.
 */
struct WitnessRecord {
    int k = 0;
    Vec y_point;
    Vec x_plus, x_minus;
    double y_norm = 0.0;
    double M = 0.0, eps = 0.0;
    double hess12_plus = 0.0, hess12_minus = 0.0;
    double h_y = 0.0;
    double residual = 0.0; ///< hess12_plus - 1/2
};

/// Witness rows for every level whose witness lies on the plateau.
/// Evaluation runs in log-radius coordinates, so deep levels cost nothing
/// in accuracy.
std::vector<WitnessRecord> witness_sequence(const Ladder& lad);

/// |u(x)|/|x|^2, the quantity whose decay certifies twice differentiability
/// at the origin. Zero outside all balls; throws on x = 0.
double taylor_remainder(const Ladder& lad, const Vec& x);

} // namespace d2lab::ladder
