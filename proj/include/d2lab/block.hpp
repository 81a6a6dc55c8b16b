// SPDX-License-Identifier: MIT
//
// The building block u_t(x) = eta(|x|) * x1 * x2 * |x|^(2t) * phi(-ln|x|^2)
// with fully analytic gradient and Hessian. For t > 0 it is C^2 with u_t and
// all derivatives vanishing outside |x| < 2/3; as t -> 0 the (1,2) Hessian
// entry degenerates, which is the effect the ball ladder amplifies.

#pragma once

#include <string>
#include <vector>

#include "d2lab/cutoff.hpp"
#include "d2lab/linalg.hpp"
#include "d2lab/phi.hpp"

namespace d2lab::block {

/**
 * @brief Parameters of one building block.
 *
 * t must lie in (0, 1/2] and n must be at least 2; make_block validates.
 */
struct BlockParams {
    int n = 3;
    double t = 0.25;
    phi::AdmissiblePhi phi;
    cutoff::SmoothCutoff eta;
};

BlockParams make_block(int n, double t, phi::AdmissiblePhi phi);

/// Value, gradient, Hessian, and Laplacian of a scalar field at one point.
/// The Hessian is symmetric by construction and laplacian is its trace.
struct PointEval {
    Vec point;
    double value = 0.0;
    Vec gradient;
    Mat hessian;
    double laplacian = 0.0;

    explicit PointEval(int n = 0)
        : point(static_cast<std::size_t>(n), 0.0),
          gradient(static_cast<std::size_t>(n), 0.0),
          hessian(n) {}
};

/// Evaluate the block at a global point. Total: the origin and all points
/// with |x| >= 2/3 return exact zeros (value, gradient, Hessian).
PointEval block_eval(const BlockParams& p, const Vec& x);

/**
 * @brief Evaluate at radius rho = e^(-s/2) along the unit direction xi,
 *        entirely in log-radius coordinates.
 *
 * All rho powers are formed as exp(-c*s), so the evaluation stays exact-to-
 * roundoff however tiny the radius; this is the path the witness sequence
 * uses where the global coordinates of the point are not even representable.
 * The returned point is e^(-s/2)*xi, which may underflow to zero harmlessly.
 * Requires s > s0 = -2 ln(2/3) (i.e. rho < 2/3) and |xi| = 1.
 */
PointEval block_eval_s(const BlockParams& p, double s, const Vec& xi);

/// The (1,2) Hessian entry at a plateau point (s >= 2 ln 2), split into the
/// leading term e^(-t*s) * phi(s) and the sum h of every other term. The
/// split is exact: leading + rest == the assembled entry.
struct Hess12Split {
    double leading = 0.0;
    double rest = 0.0;
    double total() const { return leading + rest; }
};

Hess12Split plateau_hess12(const BlockParams& p, double s, const Vec& xi);

/// One named term of a Hessian-entry expansion (test hook).
struct Term {
    std::string name;
    double value = 0.0;
};

struct TermList {
    std::vector<Term> terms;
    double total() const;
};

/// The ten-term expansion of the (1,2) entry, valid on the whole support
/// (cutoff derivatives included). terms[0] is the leading eta * rho^(2t) *
/// phi term; the sum of the remaining nine is the h of the witness
/// decomposition. The sum of all ten equals hessian(0,1) of block_eval.
TermList hess12_terms(const BlockParams& p, const Vec& x);

/**
 * @brief Plateau expansion of the (1,j) entry for a tail coordinate j >= 2
 *        (0-based; the first two coordinates are the distinguished pair).
 *
 * Five terms: the four displayed in the classical expansion plus the
 * -2 * xi2 * xij * rho^(2t) * phi' cross term that the display omits but the
 * product rule requires; the test suite shows the sum matches the assembled
 * entry only with it. Valid where eta' vanishes (rho <= 1/2).
 */
TermList hess1j_terms(const BlockParams& p, const Vec& x, int j);

/// Plateau expansion of the (i,j) entry for distinct tail coordinates
/// i, j >= 2 (0-based); exactly three terms. Valid where eta' vanishes.
TermList hessij_terms(const BlockParams& p, const Vec& x, int i, int j);

/**
 * @brief Sampled suprema of the block and its derivative entries.
 *
 * One row per t value. The plateau is swept in log-radius coordinates
 * (arbitrarily small radii), the cutoff shell in global coordinates, and the
 * two sweeps are combined; extra caller-supplied points are merged in. Every
 * quantity except the (1,2) entry is expected t-stable; the (1,2) sup grows
 * without bound as t -> 0, and grows_12 records that the smallest-t row
 * exceeds the t = 0.25 row.
 */
struct BoundRow {
    double t = 0.0;
    double sup_value = 0.0;    ///< sup |u_t|
    double sup_grad = 0.0;     ///< sup over components of |du_t/dx_j|
    double sup_diag = 0.0;     ///< sup over diagonal Hessian entries
    double sup_offdiag = 0.0;  ///< sup over off-diagonal entries except (1,2)
    double sup_lap = 0.0;      ///< sup |Laplacian|
    double sup_h12 = 0.0;      ///< sup |(1,2) entry| (unbounded as t -> 0)
    double sup_h12_rest = 0.0; ///< sup |(1,2) entry minus leading term|
};

struct BoundReport {
    std::vector<BoundRow> rows;
    double C_value = 0.0; ///< max over rows of sup_value
    double C_grad = 0.0;
    double C_diag = 0.0;
    double C_offdiag = 0.0;
    double C_lap = 0.0;
    double C_h = 0.0;      ///< max over rows of sup_h12_rest
    bool t_stable = false; ///< each stable sup <= 2x its t = 0.25 row value
    bool grows_12 = false; ///< sup_h12 at the smallest t > at t = 0.25
};

/// Sweep at the standard t grid {0.25, 0.1, 0.01, 0.001} plus any extra t
/// values (deduplicated); s_max extends the plateau sweep far enough to
/// cover all profile maxima for the smallest t.
BoundReport block_term_bounds(int n, const phi::AdmissiblePhi& phi,
                              const std::vector<double>& extra_t = {});

} // namespace d2lab::block
